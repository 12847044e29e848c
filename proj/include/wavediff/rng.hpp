#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace wavediff {

// SplitMix64 mixing step (Steele/Lea/Flood; Vigna's public-domain reference).
// Used both as a seed scrambler and as the child-seed derivation primitive.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// FNV-1a 64-bit hash, used to derive stable ids from short strings.
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Deterministic standard-normal stream.
///
/// mt19937_64 supplies the uniforms (bit-exact across platforms by the
/// standard); the normal transform is an explicit Box-Muller so the output
/// does not depend on the C++ runtime's std::normal_distribution.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    // Uniform on (0,1), never 0 or 1.
    double uniform() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace wavediff
