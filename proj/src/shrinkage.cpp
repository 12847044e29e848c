#include "wavediff/shrinkage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "wavediff/stats.hpp"

namespace wavediff::shrinkage {

namespace {

constexpr double kPim4 = 0.7511255444649425;  // pi^{-1/4}
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrt2Pi = 2.5066282746310005024;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// Zero-centered logistic density of scale tau, computed from |t| so the
// symmetry is exact in floating point.
double logistic_pdf(double t, double tau) {
    const double e = std::exp(-std::abs(t) / tau);
    const double onep = 1.0 + e;
    return e / (tau * onep * onep);
}

double log_logistic_pdf(double t, double tau) {
    const double a = std::abs(t) / tau;
    return -a - std::log(tau) - 2.0 * std::log1p(std::exp(-a));
}

// Signed log-sum-exp accumulator for quadrature sums whose terms can be
// negative; keeps the running maximum exponent as the scale.
struct SignedLse {
    double max_log = -std::numeric_limits<double>::infinity();
    double scaled = 0.0;  // sum of sign_i * exp(log_i - max_log)

    void add(double log_mag, double sign) {
        if (log_mag == -std::numeric_limits<double>::infinity()) return;
        if (log_mag > max_log) {
            scaled *= std::exp(max_log - log_mag);
            max_log = log_mag;
            scaled += sign;
        } else {
            scaled += sign * std::exp(log_mag - max_log);
        }
    }
    double log_abs() const { return max_log + std::log(std::abs(scaled)); }
    double sign() const { return scaled < 0.0 ? -1.0 : 1.0; }
};

}  // namespace

Rule rule_from_name(std::string_view name) {
    if (name == "logistic") return Rule::logistic;
    if (name == "universal") return Rule::universal;
    throw std::invalid_argument("unknown shrinkage rule '" + std::string(name) + "'");
}

SigmaPolicy sigma_policy_from_name(std::string_view name) {
    if (name == "per-level-mad") return SigmaPolicy::per_level_mad;
    if (name == "finest-level-mad") return SigmaPolicy::finest_level_mad;
    if (name == "fixed") return SigmaPolicy::fixed;
    throw std::invalid_argument("unknown sigma policy '" + std::string(name) + "'");
}

std::string to_string(Rule rule) {
    return rule == Rule::logistic ? "logistic" : "universal";
}

std::string to_string(SigmaPolicy policy) {
    switch (policy) {
        case SigmaPolicy::per_level_mad: return "per-level-mad";
        case SigmaPolicy::finest_level_mad: return "finest-level-mad";
        case SigmaPolicy::fixed: return "fixed";
    }
    return "?";
}

void ShrinkageConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("ShrinkageConfig: alpha must lie in (0,1)");
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("ShrinkageConfig: tau must be positive");
    if (quad_order < 16 || quad_order % 2 != 0)
        throw std::invalid_argument("ShrinkageConfig: quad_order must be even and >= 16");
    if (sigma_policy == SigmaPolicy::fixed && !(fixed_sigma > 0.0))
        throw std::invalid_argument("ShrinkageConfig: fixed sigma policy needs fixed_sigma > 0");
}

double estimate_sigma(std::span<const double> level_coeffs) {
    if (level_coeffs.empty())
        throw std::invalid_argument("estimate_sigma: empty coefficient block");
    const double med = stats::median(level_coeffs);
    std::vector<double> dev(level_coeffs.size());
    for (std::size_t i = 0; i < dev.size(); ++i) dev[i] = std::abs(level_coeffs[i] - med);
    return stats::median(dev) / 0.6745;
}

GaussHermiteRule::GaussHermiteRule(int order) {
    if (order < 1) throw std::invalid_argument("GaussHermiteRule: order must be >= 1");
    // Newton iteration on the orthonormal Hermite recurrence (weight
    // e^{-x^2}); node/weight symmetry is exact by construction.
    const int n = order;
    std::vector<double> x(n), w(n);
    const double eps = 1e-14;
    double z = 0.0;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * x[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * x[1];
        else
            z = 2.0 * z - x[i - 2];
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = kPim4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= eps) break;
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    if (n % 2 == 1) x[n / 2] = 0.0;

    // Change of variable to expectations under N(0,1).
    nodes_.resize(n);
    weights_.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes_[i] = kSqrt2 * x[i];
        weights_[i] = w[i] / kSqrtPi;
    }
}

double gaussian_expectation(const std::function<double(double)>& integrand, int quad_order) {
    return GaussHermiteRule(quad_order).expectation(integrand);
}

namespace {

double logistic_shrink_plain(double w, double sigma, double alpha, double tau,
                             const GaussHermiteRule& quad) {
    const double i1 = quad.expectation([&](double u) {
        const double t = sigma * u + w;
        return t * logistic_pdf(t, tau);
    });
    const double i0 = quad.expectation([&](double u) {
        return logistic_pdf(sigma * u + w, tau);
    });
    const double r = w / sigma;
    const double phi = std::exp(-0.5 * r * r) / kSqrt2Pi;
    const double num = (1.0 - alpha) * i1;
    const double den = alpha / sigma * phi + (1.0 - alpha) * i0;
    return num / den;
}

// Far-tail evaluation (|w|/sigma > 30): every factor is assembled from
// logs so the underflow of phi(w/sigma) or of the logistic tails cannot
// produce 0/0. Evaluated at |w|; the caller restores the sign.
double logistic_shrink_log(double absw, double sigma, double alpha, double tau,
                           const GaussHermiteRule& quad) {
    const auto nodes = quad.nodes();
    const auto weights = quad.weights();
    SignedLse num_acc, den_acc;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double t = sigma * nodes[i] + absw;
        const double lw = std::log(weights[i]);
        const double lh = log_logistic_pdf(t, tau);
        den_acc.add(lw + lh, 1.0);
        if (t != 0.0)
            num_acc.add(lw + lh + std::log(std::abs(t)), t > 0.0 ? 1.0 : -1.0);
    }
    const double r = absw / sigma;
    const double log_phi_term = std::log(alpha) - std::log(sigma) - 0.5 * r * r - kLogSqrt2Pi;
    const double log1ma = std::log1p(-alpha);

    SignedLse den;
    den.add(log_phi_term, 1.0);
    den.add(log1ma + den_acc.log_abs(), den_acc.sign());
    const double log_num = log1ma + num_acc.log_abs();
    // the posterior mean cannot exceed the observation; clip the ulp-level
    // round-off of the log-domain ratio at extreme |w|/sigma
    return num_acc.sign() * std::min(std::exp(log_num - den.log_abs()), absw);
}

}  // namespace

double logistic_shrink(double w, double sigma_j, double alpha, double tau,
                       const GaussHermiteRule& quad) {
    if (!std::isfinite(w)) throw std::invalid_argument("logistic_shrink: w must be finite");
    if (!(sigma_j > 0.0) || !std::isfinite(sigma_j))
        throw std::invalid_argument("logistic_shrink: sigma_j must be positive");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("logistic_shrink: alpha must lie in (0,1)");
    if (!(tau > 0.0)) throw std::invalid_argument("logistic_shrink: tau must be positive");

    if (std::abs(w) > 30.0 * sigma_j) {
        const double mag = logistic_shrink_log(std::abs(w), sigma_j, alpha, tau, quad);
        return w < 0.0 ? -mag : mag;
    }
    return logistic_shrink_plain(w, sigma_j, alpha, tau, quad);
}

double logistic_shrink(double w, double sigma_j, double alpha, double tau, int quad_order) {
    return logistic_shrink(w, sigma_j, alpha, tau, GaussHermiteRule(quad_order));
}

namespace {

// sigma_hat per detail block under the policy, with the degenerate-zero
// fallback chain: level estimate -> finest-level estimate -> 0 (block
// passes through unshrunk).
std::vector<double> resolve_sigmas(const wavelet::WaveletDecomposition& decomp,
                                   SigmaPolicy policy, double fixed_sigma) {
    const std::size_t nlev = decomp.details.size();
    std::vector<double> sigmas(nlev, 0.0);
    if (policy == SigmaPolicy::fixed) {
        if (!(fixed_sigma > 0.0))
            throw std::invalid_argument("fixed sigma policy needs fixed_sigma > 0");
        std::fill(sigmas.begin(), sigmas.end(), fixed_sigma);
        return sigmas;
    }
    const double finest = estimate_sigma(decomp.details.back());
    for (std::size_t b = 0; b < nlev; ++b) {
        double s = (policy == SigmaPolicy::finest_level_mad) ? finest
                                                             : estimate_sigma(decomp.details[b]);
        if (s == 0.0) s = finest;
        sigmas[b] = s;
    }
    return sigmas;
}

double soft_threshold(double w, double lambda) {
    const double mag = std::abs(w) - lambda;
    if (mag <= 0.0) return 0.0;
    return w < 0.0 ? -mag : mag;
}

}  // namespace

wavelet::WaveletDecomposition universal_soft(const wavelet::WaveletDecomposition& decomp,
                                             std::size_t n, SigmaPolicy policy,
                                             double fixed_sigma) {
    decomp.validate();
    if (n < 2) throw std::invalid_argument("universal_soft: n must be >= 2");
    const double root = std::sqrt(2.0 * std::log(static_cast<double>(n)));
    const std::vector<double> sigmas = resolve_sigmas(decomp, policy, fixed_sigma);

    wavelet::WaveletDecomposition out = decomp;
    for (std::size_t b = 0; b < out.details.size(); ++b) {
        const double lambda = sigmas[b] * root;
        for (double& c : out.details[b]) c = soft_threshold(c, lambda);
    }
    return out;
}

wavelet::WaveletDecomposition apply_rule(const wavelet::WaveletDecomposition& decomp,
                                         const ShrinkageConfig& config, std::size_t n) {
    config.validate();
    if (config.rule == Rule::universal)
        return universal_soft(decomp, n, config.sigma_policy, config.fixed_sigma);

    decomp.validate();
    const std::vector<double> sigmas =
        resolve_sigmas(decomp, config.sigma_policy, config.fixed_sigma);
    const GaussHermiteRule quad(config.quad_order);

    wavelet::WaveletDecomposition out = decomp;
    for (std::size_t b = 0; b < out.details.size(); ++b) {
        const double sigma = sigmas[b];
        if (sigma == 0.0) continue;  // noiseless block: keep coefficients
        for (double& c : out.details[b])
            c = logistic_shrink(c, sigma, config.alpha, config.tau, quad);
    }
    return out;
}

}  // namespace wavediff::shrinkage
