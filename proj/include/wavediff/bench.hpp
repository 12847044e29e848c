#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavediff/shrinkage.hpp"

namespace wavediff::bench {

enum class Method { universal, logistic, logdiff };

Method method_from_name(std::string_view name);
std::string to_string(Method method);

/// Monte Carlo experiment grid. Each (signal, n, snr) scenario draws
/// `replications` noise series and evaluates every method on the same
/// series (paired comparison).
struct BenchmarkSpec {
    std::vector<std::string> signals{"bumps", "blocks", "doppler", "heavisine"};
    std::vector<std::size_t> n_values{512, 2048};
    std::vector<double> snr_values{3.0, 9.0};
    double d = 0.4;
    std::size_t replications = 200;
    std::uint64_t master_seed = 1;
    std::vector<Method> methods{Method::universal, Method::logistic, Method::logdiff};
    std::string filter = "db4";
    shrinkage::ShrinkageConfig config{};
    double target_sd = 7.0;
    std::size_t coarse_size = 32;      // smallest shrunk detail block
    unsigned threads = 0;              // 0 = hardware concurrency
    bool keep_replication_mses = false;

    void validate() const;  // throws std::invalid_argument
};

struct ReportRow {
    std::string signal;
    std::size_t n = 0;
    double snr = 0.0;
    Method method = Method::universal;
    double amse = 0.0;
    double sd_of_mse = 0.0;
    std::size_t replications = 0;
    std::string seeds_digest;  // hex digest of the replication seeds
};

struct ReplicationRecord {
    std::string signal;
    std::size_t n = 0;
    double snr = 0.0;
    Method method = Method::universal;
    std::size_t r = 0;
    double mse = 0.0;
};

struct BenchmarkReport {
    BenchmarkSpec spec;
    std::vector<ReportRow> rows;
    std::vector<ReplicationRecord> replication_mses;  // populated on request

    std::string to_csv() const;
    std::string to_json() const;
    std::string replication_csv() const;
};

/// (1/n) sum (f_hat_i - f_i)^2. Lengths must match and be >= 1.
double mse(std::span<const double> f_hat, std::span<const double> f);

/// Replication seed: a splitmix64 chain over (master, fnv1a64(signal),
/// n, IEEE bits of snr, r). Deterministic and order-free, so replications
/// can run on any thread without changing results.
std::uint64_t child_seed(std::uint64_t master_seed, std::string_view signal,
                         std::size_t n, double snr, std::size_t r);

BenchmarkReport run(const BenchmarkSpec& spec);

}  // namespace wavediff::bench
