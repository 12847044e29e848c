#include "wavediff/pipeline.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wavediff::pipeline {

namespace {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_of(std::size_t n) {
    int j = 0;
    while ((std::size_t{1} << j) < n) ++j;
    return j;
}

void check_finite(std::span<const double> y, const char* who) {
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!std::isfinite(y[i]))
            throw std::invalid_argument(std::string(who) + ": non-finite value at index " +
                                        std::to_string(i + 1));
}

}  // namespace

int decomposition_levels(std::size_t n, std::size_t coarse_size) {
    if (!is_power_of_two(coarse_size))
        throw std::invalid_argument("coarse_size must be a power of two");
    const int levels = log2_of(n) - log2_of(coarse_size);
    return levels < 1 ? 1 : levels;
}

std::vector<double> difference(std::span<const double> y) {
    if (y.size() < 2) throw std::invalid_argument("difference: need at least 2 observations");
    std::vector<double> z(y.size() - 1);
    for (std::size_t i = 0; i + 1 < y.size(); ++i) z[i] = y[i + 1] - y[i];
    return z;
}

std::vector<double> integrate(std::span<const double> g_hat, double f1) {
    check_finite(g_hat, "integrate");
    if (!std::isfinite(f1)) throw std::invalid_argument("integrate: non-finite anchor");
    std::vector<double> f(g_hat.size() + 1);
    f[0] = f1;
    for (std::size_t i = 0; i < g_hat.size(); ++i) f[i + 1] = f[i] + g_hat[i];
    return f;
}

double initial_value(std::span<const double> y) {
    if (y.size() < 20)
        throw std::invalid_argument("initial_value: need at least 20 observations, got " +
                                    std::to_string(y.size()));
    double s = 0.0;
    for (std::size_t i = 0; i < 20; ++i) s += y[i];
    return s / 20.0;
}

EstimatorOutput denoise_logdiff(std::span<const double> y,
                                const wavelet::WaveletFilter& filter,
                                const shrinkage::ShrinkageConfig& config,
                                std::size_t coarse_size) {
    config.validate();
    check_finite(y, "denoise_logdiff");
    const std::size_t len = y.size();
    if (len < 21 || !is_power_of_two(len - 1) || len - 1 < 8)
        throw std::invalid_argument(
            "denoise_logdiff: input length must be 2^J + 1 (J >= 3) and at least 21, got " +
            std::to_string(len));
    const std::size_t n = len - 1;
    const int levels = decomposition_levels(n, coarse_size);

    const std::vector<double> z = difference(y);
    const auto decomp = wavelet::dwt(z, filter, levels);
    const auto shrunk = shrinkage::apply_rule(decomp, config, n);
    const std::vector<double> g_hat = wavelet::idwt(shrunk);

    EstimatorOutput out;
    out.f_hat = integrate(g_hat, initial_value(y));
    out.method = "logdiff";
    out.config = config;
    return out;
}

EstimatorOutput denoise_direct(std::span<const double> y,
                               const wavelet::WaveletFilter& filter,
                               const shrinkage::ShrinkageConfig& config,
                               std::size_t coarse_size) {
    config.validate();
    check_finite(y, "denoise_direct");
    const std::size_t n = y.size();
    if (!is_power_of_two(n) || n < 8)
        throw std::invalid_argument(
            "denoise_direct: input length must be a power of two >= 8, got " +
            std::to_string(n));
    const int levels = decomposition_levels(n, coarse_size);

    const auto decomp = wavelet::dwt(y, filter, levels);
    const auto shrunk = shrinkage::apply_rule(decomp, config, n);

    EstimatorOutput out;
    out.f_hat = wavelet::idwt(shrunk);
    out.method = to_string(config.rule);
    out.config = config;
    return out;
}

}  // namespace wavediff::pipeline
