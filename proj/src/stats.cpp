#include "wavediff/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wavediff::stats {

double mean(std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("mean: empty input");
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double sample_sd(std::span<const double> x) {
    if (x.size() < 2) throw std::invalid_argument("sample_sd: need at least 2 values");
    const double m = mean(x);
    double ss = 0.0;
    for (double v : x) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

double median(std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("median: empty input");
    std::vector<double> buf(x.begin(), x.end());
    const std::size_t mid = buf.size() / 2;
    std::nth_element(buf.begin(), buf.begin() + mid, buf.end());
    double hi = buf[mid];
    if (buf.size() % 2 == 1) return hi;
    double lo = *std::max_element(buf.begin(), buf.begin() + mid);
    return 0.5 * (lo + hi);
}

}  // namespace wavediff::stats
