#pragma once

#include <span>
#include <string>
#include <vector>

#include "wavediff/shrinkage.hpp"
#include "wavediff/wavelet.hpp"

namespace wavediff::pipeline {

/// First differences z_i = y_{i+1} - y_i. Requires y.size() >= 2.
std::vector<double> difference(std::span<const double> y);

/// Cumulative sum anchored at f1: out_1 = f1, out_{i+1} = out_i + g_i.
/// Exact inverse of difference up to round-off.
std::vector<double> integrate(std::span<const double> g_hat, double f1);

/// Anchor estimate for the integrated curve: mean of the first 20
/// observations. Requires y.size() >= 20.
double initial_value(std::span<const double> y);

struct EstimatorOutput {
    std::vector<double> f_hat;
    std::string method;
    shrinkage::ShrinkageConfig config;
};

/// Coarse cutoff: detail levels with fewer than `coarse_size` coefficients
/// are never produced, so that whole band rides in the unshrunk scaling
/// block. MAD noise estimates on blocks of a handful of coefficients read
/// signal structure as noise, and the rules then erase it.
inline constexpr std::size_t kDefaultCoarseSize = 32;

/// Cascade depth for a length-n transform with the given coarse cutoff
/// (always at least one level).
int decomposition_levels(std::size_t n, std::size_t coarse_size);

/// Difference -> DWT -> shrink -> IDWT -> integrate. Input length must be
/// 2^J + 1 with J >= 3 and at least 21; output has the same length.
EstimatorOutput denoise_logdiff(std::span<const double> y,
                                const wavelet::WaveletFilter& filter,
                                const shrinkage::ShrinkageConfig& config,
                                std::size_t coarse_size = kDefaultCoarseSize);

/// DWT -> shrink -> IDWT applied directly to the observations. Input
/// length must be a power of two >= 8.
EstimatorOutput denoise_direct(std::span<const double> y,
                               const wavelet::WaveletFilter& filter,
                               const shrinkage::ShrinkageConfig& config,
                               std::size_t coarse_size = kDefaultCoarseSize);

}  // namespace wavediff::pipeline
