#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavediff::wavelet {

/// Orthonormal two-channel filter pair. `lowpass` holds the analysis
/// scaling taps h_k; `highpass` is the quadrature-mirror sequence
/// g_k = (-1)^k h_{L-1-k}.
struct WaveletFilter {
    std::string name;
    std::vector<double> lowpass;
    std::vector<double> highpass;

    /// "haar" or "db2".."db10" (Daubechies extremal phase, K = vanishing
    /// moments). Throws std::invalid_argument for unknown names.
    static WaveletFilter from_name(std::string_view name);
    static const std::vector<std::string>& available();

    std::size_t length() const { return lowpass.size(); }
    /// Number of vanishing moments of the highpass branch.
    int vanishing_moments() const { return static_cast<int>(lowpass.size() / 2); }
};

/// Result of a periodic pyramidal DWT of a length-n = 2^J signal.
///
/// `details[b]` holds the detail block produced at cascade step
/// levels-b (coarsest first), i.e. resolution level j = J-levels+b with
/// 2^j coefficients; `scaling` holds the n/2^levels coarse coefficients.
/// The flattened layout is [scaling | details coarsest..finest].
struct WaveletDecomposition {
    std::vector<std::vector<double>> details;
    std::vector<double> scaling;
    std::size_t n = 0;
    WaveletFilter filter;

    std::size_t levels() const { return details.size(); }
    std::vector<double> flatten() const;
    void validate() const;  // block-size consistency; throws
};

/// Pyramidal analysis with periodic (circular) boundary handling.
/// signal.size() must be a power of two >= 2^levels; levels >= 1.
WaveletDecomposition dwt(std::span<const double> signal, const WaveletFilter& filter,
                         int levels);

/// Inverse transform; idwt(dwt(z)) == z to round-off.
std::vector<double> idwt(const WaveletDecomposition& decomp);

/// Row-major dense matrix, just enough for the transform-as-matrix view.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::vector<double> apply(std::span<const double> x) const;
};

/// The n x n orthogonal analysis matrix W, assembled by composing the
/// explicit circulant one-step filter matrices (not by running the
/// pyramidal transform), with rows ordered to match the flattened
/// decomposition layout. Guarded to n <= 4096.
DenseMatrix dwt_matrix(std::size_t n, const WaveletFilter& filter, int levels);

}  // namespace wavediff::wavelet
