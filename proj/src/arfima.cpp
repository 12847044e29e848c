#include "wavediff/arfima.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wavediff/rng.hpp"

namespace wavediff::arfima {

void ArfimaSpec::validate() const {
    if (!std::isfinite(d) || d <= -0.5 || d >= 0.5)
        throw std::invalid_argument("ArfimaSpec: d must lie in (-0.5, 0.5), got " +
                                    std::to_string(d));
    if (!std::isfinite(sigma_a) || sigma_a <= 0.0)
        throw std::invalid_argument("ArfimaSpec: sigma_a must be positive");
    if (n < 1) throw std::invalid_argument("ArfimaSpec: n must be >= 1");
}

std::vector<double> frac_diff_coeffs(double d, std::size_t count) {
    if (!std::isfinite(d)) throw std::invalid_argument("frac_diff_coeffs: d must be finite");
    if (d >= 0.0 && d == std::floor(d))
        throw std::invalid_argument(
            "frac_diff_coeffs: d must not be a nonnegative integer (Gamma(-d) pole)");
    std::vector<double> b(count + 1);
    b[0] = 1.0;
    for (std::size_t j = 1; j <= count; ++j)
        b[j] = b[j - 1] * (static_cast<double>(j) - 1.0 - d) / static_cast<double>(j);
    return b;
}

std::vector<double> autocovariance(double d, double sigma_a, std::size_t maxlag) {
    if (!std::isfinite(d) || std::abs(d) >= 0.5)
        throw std::invalid_argument("autocovariance: |d| must be < 0.5, got " +
                                    std::to_string(d));
    if (!std::isfinite(sigma_a) || sigma_a <= 0.0)
        throw std::invalid_argument("autocovariance: sigma_a must be positive");
    std::vector<double> gamma(maxlag + 1);
    gamma[0] = sigma_a * sigma_a * std::exp(std::lgamma(1.0 - 2.0 * d) - 2.0 * std::lgamma(1.0 - d));
    for (std::size_t k = 1; k <= maxlag; ++k) {
        const double kk = static_cast<double>(k);
        gamma[k] = gamma[k - 1] * (kk - 1.0 + d) / (kk - d);
    }
    return gamma;
}

std::vector<double> autocovariance(const ArfimaSpec& spec, std::size_t maxlag) {
    return autocovariance(spec.d, spec.sigma_a, maxlag);
}

std::vector<double> simulate(const ArfimaSpec& spec) {
    spec.validate();
    const std::size_t n = spec.n;
    const std::vector<double> gamma = autocovariance(spec.d, spec.sigma_a, n - 1);

    GaussianRng rng(spec.seed);
    std::vector<double> x(n);
    double v = gamma[0];  // one-step prediction variance
    x[0] = std::sqrt(v) * rng.next();
    if (n == 1) return x;

    // Durbin-Levinson with the coefficient vector kept in both orders
    // (fwd[j-1] = phi_{t,j}, rev reversed and growing at the front) so the
    // inner products run over contiguous memory. The update pass also
    // accumulates this step's conditional mean and the next step's
    // reflection numerator, one sweep per step in total.
    std::vector<double> fwd(n, 0.0);
    std::vector<double> revbuf(n, 0.0);
    std::size_t rev_start = n;

    double num = gamma[1];  // gamma(t) - sum rev_(t-1)[k] gamma(k+1)
    for (std::size_t t = 1; t < n; ++t) {
        const std::size_t len = t - 1;
        double* rev = revbuf.data() + rev_start;

        const double a = num / v;
        v *= 1.0 - a * a;

        double next_num = (t + 1 < n ? gamma[t + 1] : 0.0) - a * gamma[1];
        double cond_mean = a * x[0];
        const double* gam = gamma.data();
        const double* xs = x.data();
        for (std::size_t k = 0; k < len; ++k) {
            const double f = fwd[k];
            const double r = rev[k];
            fwd[k] = f - a * r;
            const double updated = r - a * f;
            rev[k] = updated;  // becomes rev_t[k+1] after the prepend below
            next_num -= updated * gam[k + 2];
            cond_mean += updated * xs[k + 1];
        }
        fwd[len] = a;
        --rev_start;
        revbuf[rev_start] = a;

        x[t] = cond_mean + std::sqrt(v) * rng.next();
        num = next_num;
    }
    return x;
}

AcfSeries sample_acf(std::span<const double> series, std::size_t maxlag) {
    const std::size_t n = series.size();
    if (n < 2) throw std::invalid_argument("sample_acf: need at least 2 observations");
    if (maxlag >= n)
        throw std::invalid_argument("sample_acf: maxlag must be smaller than the series length");

    double m = 0.0;
    for (double v : series) m += v;
    m /= static_cast<double>(n);

    double denom = 0.0;
    for (double v : series) denom += (v - m) * (v - m);
    if (denom == 0.0)
        throw std::invalid_argument("sample_acf: constant series has no autocorrelation");

    AcfSeries acf;
    acf.values.resize(maxlag + 1);
    for (std::size_t k = 0; k <= maxlag; ++k) {
        double num = 0.0;
        for (std::size_t t = 0; t + k < n; ++t)
            num += (series[t] - m) * (series[t + k] - m);
        acf.values[k] = num / denom;
    }
    acf.values[0] = 1.0;
    return acf;
}

}  // namespace wavediff::arfima
