#include "wavediff/testfuncs.hpp"

#include <cmath>
#include <stdexcept>

#include "wavediff/stats.hpp"

namespace wavediff::testfuncs {

namespace {

// Knot/height/width tables of the standard test signals from Donoho &
// Johnstone, "Ideal spatial adaptation by wavelet shrinkage",
// Biometrika 81 (1994), Table 1.
constexpr double kKnots[11] = {0.10, 0.13, 0.15, 0.23, 0.25, 0.40,
                               0.44, 0.65, 0.76, 0.78, 0.81};
constexpr double kBlocksHeights[11] = {4.0, -5.0, 3.0, -4.0, 5.0, -4.2,
                                       2.1, 4.3, -3.1, 2.1, -4.2};
constexpr double kBumpsHeights[11] = {4.0, 5.0, 3.0, 4.0, 5.0, 4.2,
                                      2.1, 4.3, 3.1, 5.1, 4.2};
constexpr double kBumpsWidths[11] = {0.005, 0.005, 0.006, 0.01, 0.01, 0.03,
                                     0.01, 0.01, 0.005, 0.008, 0.005};

double sgn(double u) { return (u > 0.0) - (u < 0.0); }

}  // namespace

double blocks(double x) {
    // Steps taken right-continuous at the knots, so sampled Blocks takes
    // at most 12 distinct values on any grid.
    double f = 0.0;
    for (int j = 0; j < 11; ++j)
        if (x >= kKnots[j]) f += kBlocksHeights[j];
    return f;
}

double bumps(double x) {
    double f = 0.0;
    for (int j = 0; j < 11; ++j) {
        const double a = 1.0 + std::abs(x - kKnots[j]) / kBumpsWidths[j];
        f += kBumpsHeights[j] / (a * a * a * a);
    }
    return f;
}

double doppler(double x) {
    return std::sqrt(x * (1.0 - x)) * std::sin(2.0 * M_PI * 1.05 / (x + 0.05));
}

double heavisine(double x) {
    return 4.0 * std::sin(4.0 * M_PI * x) - sgn(x - 0.3) - sgn(0.72 - x);
}

const std::vector<std::string>& signal_names() {
    static const std::vector<std::string> names{"bumps", "blocks", "doppler", "heavisine"};
    return names;
}

TestSignal generate(std::string_view name, std::size_t n_plus_1, double target_sd) {
    if (n_plus_1 < 2) throw std::invalid_argument("generate: need at least 2 samples");
    if (!(target_sd > 0.0)) throw std::invalid_argument("generate: target_sd must be positive");

    double (*f)(double) = nullptr;
    if (name == "bumps")
        f = bumps;
    else if (name == "blocks")
        f = blocks;
    else if (name == "doppler")
        f = doppler;
    else if (name == "heavisine")
        f = heavisine;
    else
        throw std::invalid_argument("generate: unknown signal '" + std::string(name) +
                                    "'; available: bumps, blocks, doppler, heavisine");

    TestSignal sig;
    sig.name = std::string(name);
    sig.target_sd = target_sd;
    sig.samples.resize(n_plus_1);
    const double denom = static_cast<double>(n_plus_1);
    for (std::size_t i = 0; i < n_plus_1; ++i)
        sig.samples[i] = f(static_cast<double>(i + 1) / denom);

    const double m = stats::mean(sig.samples);
    const double sd = stats::sample_sd(sig.samples);
    if (sd == 0.0) throw std::invalid_argument("generate: degenerate constant signal sample");
    const double scale = target_sd / sd;
    for (double& v : sig.samples) v = m + (v - m) * scale;
    return sig;
}

double stationary_variance_ratio(double d) {
    if (!std::isfinite(d) || std::abs(d) >= 0.5)
        throw std::invalid_argument("stationary_variance_ratio: |d| must be < 0.5");
    return std::exp(std::lgamma(1.0 - 2.0 * d) - 2.0 * std::lgamma(1.0 - d));
}

double calibrate_sigma_a(const TestSignal& signal, double snr, double d) {
    if (!(snr > 0.0)) throw std::invalid_argument("calibrate_sigma_a: snr must be positive");
    const double sd = stats::sample_sd(signal.samples);
    return sd / (snr * std::sqrt(stationary_variance_ratio(d)));
}

}  // namespace wavediff::testfuncs
