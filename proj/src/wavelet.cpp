#include "wavediff/wavelet.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wavediff::wavelet {

namespace {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

void check_transform_args(std::size_t n, int levels) {
    if (!is_power_of_two(n) || n < 2)
        throw std::invalid_argument("dwt: signal length must be a power of two >= 2, got " +
                                    std::to_string(n));
    if (levels < 1 || (std::size_t{1} << levels) > n)
        throw std::invalid_argument("dwt: levels must satisfy 1 <= levels <= log2(n)");
}

// One analysis step on block[0..m): approximations and details of size m/2.
void analysis_step(const double* block, std::size_t m, const WaveletFilter& f,
                   double* approx, double* detail) {
    const std::size_t L = f.length();
    const double* h = f.lowpass.data();
    const double* g = f.highpass.data();
    for (std::size_t i = 0; i < m / 2; ++i) {
        double a = 0.0, d = 0.0;
        for (std::size_t k = 0; k < L; ++k) {
            const double x = block[(2 * i + k) % m];
            a += h[k] * x;
            d += g[k] * x;
        }
        approx[i] = a;
        detail[i] = d;
    }
}

// Transpose of analysis_step: block[0..m) from approx/detail of size m/2.
void synthesis_step(const double* approx, const double* detail, std::size_t m,
                    const WaveletFilter& f, double* block) {
    const std::size_t L = f.length();
    const double* h = f.lowpass.data();
    const double* g = f.highpass.data();
    for (std::size_t j = 0; j < m; ++j) block[j] = 0.0;
    for (std::size_t i = 0; i < m / 2; ++i) {
        const double a = approx[i];
        const double d = detail[i];
        for (std::size_t k = 0; k < L; ++k)
            block[(2 * i + k) % m] += h[k] * a + g[k] * d;
    }
}

}  // namespace

std::vector<double> WaveletDecomposition::flatten() const {
    std::vector<double> out;
    out.reserve(n);
    out.insert(out.end(), scaling.begin(), scaling.end());
    for (const auto& block : details) out.insert(out.end(), block.begin(), block.end());
    return out;
}

void WaveletDecomposition::validate() const {
    if (!is_power_of_two(n))
        throw std::invalid_argument("WaveletDecomposition: n must be a power of two");
    if (details.empty()) throw std::invalid_argument("WaveletDecomposition: no detail blocks");
    std::size_t total = scaling.size();
    std::size_t expected = scaling.size();
    for (const auto& block : details) {
        if (block.size() != expected)
            throw std::invalid_argument("WaveletDecomposition: inconsistent block sizes");
        total += block.size();
        expected *= 2;
    }
    if (total != n)
        throw std::invalid_argument("WaveletDecomposition: blocks do not sum to n");
    if (scaling.size() == 0 || n != scaling.size() * (std::size_t{1} << details.size()))
        throw std::invalid_argument("WaveletDecomposition: scaling block size mismatch");
}

WaveletDecomposition dwt(std::span<const double> signal, const WaveletFilter& filter,
                         int levels) {
    check_transform_args(signal.size(), levels);

    WaveletDecomposition out;
    out.n = signal.size();
    out.filter = filter;
    out.details.resize(levels);

    std::vector<double> current(signal.begin(), signal.end());
    std::vector<double> approx(signal.size() / 2);
    for (int s = 0; s < levels; ++s) {
        const std::size_t m = current.size();
        auto& detail = out.details[levels - 1 - s];  // finest block filled first
        detail.resize(m / 2);
        analysis_step(current.data(), m, filter, approx.data(), detail.data());
        current.assign(approx.begin(), approx.begin() + static_cast<std::ptrdiff_t>(m / 2));
    }
    out.scaling = std::move(current);
    return out;
}

std::vector<double> idwt(const WaveletDecomposition& decomp) {
    decomp.validate();
    std::vector<double> current = decomp.scaling;
    std::vector<double> next;
    for (const auto& detail : decomp.details) {
        const std::size_t m = current.size() * 2;
        next.resize(m);
        synthesis_step(current.data(), detail.data(), m, decomp.filter, next.data());
        current.swap(next);
    }
    return current;
}

std::vector<double> DenseMatrix::apply(std::span<const double> x) const {
    if (x.size() != cols) throw std::invalid_argument("DenseMatrix::apply: size mismatch");
    std::vector<double> y(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        const double* row = data.data() + i * cols;
        double acc = 0.0;
        for (std::size_t j = 0; j < cols; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

DenseMatrix dwt_matrix(std::size_t n, const WaveletFilter& filter, int levels) {
    if (n > 4096)
        throw std::invalid_argument("dwt_matrix: refusing n > 4096 (dense oracle scale)");
    check_transform_args(n, levels);

    // W starts as the identity; each cascade step left-multiplies the
    // leading m rows (the current scaling region) by the circulant
    // analysis matrix [H; G] built directly from the taps.
    DenseMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i) w.at(i, i) = 1.0;

    const std::size_t L = filter.length();
    std::vector<double> product;
    std::size_t m = n;
    for (int s = 0; s < levels; ++s, m /= 2) {
        product.assign(m * n, 0.0);
        for (std::size_t i = 0; i < m / 2; ++i) {
            double* approx_row = product.data() + i * n;
            double* detail_row = product.data() + (m / 2 + i) * n;
            for (std::size_t k = 0; k < L; ++k) {
                const double* w_row = w.data.data() + ((2 * i + k) % m) * n;
                const double h = filter.lowpass[k];
                const double g = filter.highpass[k];
                for (std::size_t c = 0; c < n; ++c) {
                    approx_row[c] += h * w_row[c];
                    detail_row[c] += g * w_row[c];
                }
            }
        }
        std::copy(product.begin(), product.end(), w.data.begin());
    }

    // Rows are now [scaling | detail step levels | ... | detail step 1],
    // i.e. coarsest-first, matching WaveletDecomposition::flatten.
    return w;
}

}  // namespace wavediff::wavelet
