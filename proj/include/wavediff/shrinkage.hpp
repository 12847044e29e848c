#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavediff/wavelet.hpp"

namespace wavediff::shrinkage {

enum class Rule { logistic, universal };
enum class SigmaPolicy { per_level_mad, finest_level_mad, fixed };

Rule rule_from_name(std::string_view name);
SigmaPolicy sigma_policy_from_name(std::string_view name);
std::string to_string(Rule rule);
std::string to_string(SigmaPolicy policy);

/// Coefficient estimation settings shared by both rules.
///
/// `alpha` is the prior weight of the point mass at zero and `tau` the
/// scale of the logistic slab; both apply to the logistic rule only.
struct ShrinkageConfig {
    Rule rule = Rule::logistic;
    double alpha = 0.8;
    double tau = 5.0;
    int quad_order = 64;
    SigmaPolicy sigma_policy = SigmaPolicy::per_level_mad;
    double fixed_sigma = 1.0;  // used only with SigmaPolicy::fixed

    void validate() const;  // throws std::invalid_argument
};

/// Level-wise noise scale: median(|c - median(c)|) / 0.6745.
double estimate_sigma(std::span<const double> level_coeffs);

/// Gauss-Hermite quadrature specialized to expectations under the
/// standard normal density: nodes are sqrt(2) x_i and weights w_i/sqrt(pi)
/// for the classical (weight e^{-x^2}) rule.
///
/// Node/weight mirror pairs are summed together, so expectations of odd
/// integrands vanish exactly and the downstream shrinkage rule is exactly
/// antisymmetric in floating point.
class GaussHermiteRule {
public:
    explicit GaussHermiteRule(int order);

    int order() const { return static_cast<int>(nodes_.size()); }
    std::span<const double> nodes() const { return nodes_; }
    std::span<const double> weights() const { return weights_; }

    template <typename F>
    double expectation(F&& f) const {
        const std::size_t m = nodes_.size();
        double acc = 0.0;
        for (std::size_t i = 0; i < m / 2; ++i) {
            // The volatile stores force one rounding per term; otherwise FP
            // contraction may fuse the integrand's final multiply into this
            // sum and the exact (+a) + (-a) cancellation is lost.
            volatile double a = f(nodes_[i]);
            volatile double b = f(nodes_[m - 1 - i]);
            acc += weights_[i] * (a + b);
        }
        if (m % 2 == 1) acc += weights_[m / 2] * f(nodes_[m / 2]);
        return acc;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// E[f(U)] with U ~ N(0,1) by Gauss-Hermite quadrature of the given order.
double gaussian_expectation(const std::function<double(double)>& integrand, int quad_order);

/// Posterior-mean shrinkage of a single empirical coefficient under the
/// point-mass + logistic mixture prior:
///
///   delta(w) = (1-a) I1 / [ (a/s) phi(w/s) + (1-a) I0 ],
///   I1 = E[(s U + w) h(s U + w; tau)],  I0 = E[h(s U + w; tau)],
///
/// with phi the standard normal density and h the zero-centered logistic
/// density of scale tau. For |w|/sigma_j > 30 the ratio is assembled from
/// log-domain terms so extreme inputs stay finite.
double logistic_shrink(double w, double sigma_j, double alpha, double tau,
                       const GaussHermiteRule& quad);
double logistic_shrink(double w, double sigma_j, double alpha, double tau,
                       int quad_order = 64);

/// Level-dependent universal soft thresholding: lambda_j = sigma_j
/// sqrt(2 ln n) per detail block, scaling block untouched.
wavelet::WaveletDecomposition universal_soft(const wavelet::WaveletDecomposition& decomp,
                                             std::size_t n, SigmaPolicy policy,
                                             double fixed_sigma = 1.0);

/// Apply the configured rule coefficient-wise to every detail block.
///
/// Noise scales follow config.sigma_policy; a degenerate (zero) level
/// estimate falls back to the finest-level estimate, and if that is also
/// zero the block passes through unshrunk.
wavelet::WaveletDecomposition apply_rule(const wavelet::WaveletDecomposition& decomp,
                                         const ShrinkageConfig& config, std::size_t n);

}  // namespace wavediff::shrinkage
