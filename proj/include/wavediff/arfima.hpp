#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wavediff::arfima {

/// Parameters of an ARFIMA(0,d,0) Gaussian noise generator:
/// (1-B)^d e_i = a_i with a_i iid N(0, sigma_a^2).
///
/// d in (0, 0.5) gives stationary long memory; the range is extended to
/// (-0.5, 0] so antipersistent (differenced-error) processes and plain
/// white noise can be simulated as well.
struct ArfimaSpec {
    double d = 0.4;
    double sigma_a = 1.0;
    std::size_t n = 0;
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

/// Sample autocorrelations rho(0..maxlag); rho(0) is always 1.
struct AcfSeries {
    std::vector<double> values;

    std::size_t maxlag() const { return values.empty() ? 0 : values.size() - 1; }
};

/// Fractional-differencing filter coefficients b_0..b_count of (1-B)^d,
/// b_j = Gamma(j-d) / (Gamma(j+1) Gamma(-d)), computed by the stable
/// recurrence b_0 = 1, b_j = b_{j-1} (j-1-d)/j.
///
/// d must be finite and not a nonnegative integer (the gamma ratio
/// degenerates there).
std::vector<double> frac_diff_coeffs(double d, std::size_t count);

/// Theoretical autocovariances gamma(0..maxlag) of ARFIMA(0,d,0):
/// gamma(0) = sigma_a^2 Gamma(1-2d)/Gamma(1-d)^2 and
/// gamma(k)/gamma(k-1) = (k-1+d)/(k-d), which is the standard closed form
/// gamma(k) = sigma_a^2 Gamma(1-2d) Gamma(k+d) / (Gamma(d) Gamma(1-d) Gamma(k+1-d))
/// evaluated without explicit gamma calls at negative arguments.
///
/// Requires |d| < 0.5 (stationary and invertible).
std::vector<double> autocovariance(double d, double sigma_a, std::size_t maxlag);
std::vector<double> autocovariance(const ArfimaSpec& spec, std::size_t maxlag);

/// Exact stationary Gaussian sample e_1..e_n by the Durbin-Levinson
/// recursion on the theoretical autocovariance. O(n^2) time, O(n) space.
/// Deterministic given spec.seed.
std::vector<double> simulate(const ArfimaSpec& spec);

/// Sample ACF: rho(k) = sum_t (x_t - m)(x_{t+k} - m) / sum_t (x_t - m)^2.
/// Requires series.size() > maxlag and a non-constant series.
AcfSeries sample_acf(std::span<const double> series, std::size_t maxlag);

}  // namespace wavediff::arfima
