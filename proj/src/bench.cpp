#include "wavediff/bench.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "wavediff/arfima.hpp"
#include "wavediff/csv.hpp"
#include "wavediff/pipeline.hpp"
#include "wavediff/rng.hpp"
#include "wavediff/stats.hpp"
#include "wavediff/testfuncs.hpp"
#include "wavediff/wavelet.hpp"

namespace wavediff::bench {

namespace {

constexpr std::string_view kSeedDerivation =
    "child = splitmix64(splitmix64(splitmix64(splitmix64(master ^ fnv1a64(signal)) ^ n) ^ "
    "ieee_bits(snr)) ^ r)";

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

Method method_from_name(std::string_view name) {
    if (name == "universal") return Method::universal;
    if (name == "logistic") return Method::logistic;
    if (name == "logdiff") return Method::logdiff;
    throw std::invalid_argument("unknown method '" + std::string(name) +
                                "'; available: universal, logistic, logdiff");
}

std::string to_string(Method method) {
    switch (method) {
        case Method::universal: return "universal";
        case Method::logistic: return "logistic";
        case Method::logdiff: return "logdiff";
    }
    return "?";
}

void BenchmarkSpec::validate() const {
    if (signals.empty()) throw std::invalid_argument("BenchmarkSpec: no signals");
    for (const auto& s : signals) testfuncs::generate(s, 32, 1.0);  // name check
    if (n_values.empty()) throw std::invalid_argument("BenchmarkSpec: no n values");
    for (std::size_t n : n_values)
        if (n < 32 || (n & (n - 1)) != 0)
            throw std::invalid_argument("BenchmarkSpec: n values must be powers of two >= 32");
    if (snr_values.empty()) throw std::invalid_argument("BenchmarkSpec: no snr values");
    for (double s : snr_values)
        if (!(s > 0.0)) throw std::invalid_argument("BenchmarkSpec: snr values must be positive");
    if (!std::isfinite(d) || std::abs(d) >= 0.5)
        throw std::invalid_argument("BenchmarkSpec: |d| must be < 0.5");
    if (replications < 2)
        throw std::invalid_argument("BenchmarkSpec: replications must be >= 2");
    if (methods.empty()) throw std::invalid_argument("BenchmarkSpec: no methods");
    if (!(target_sd > 0.0)) throw std::invalid_argument("BenchmarkSpec: target_sd must be > 0");
    if (coarse_size == 0 || (coarse_size & (coarse_size - 1)) != 0)
        throw std::invalid_argument("BenchmarkSpec: coarse_size must be a power of two");
    wavelet::WaveletFilter::from_name(filter);
    config.validate();
}

double mse(std::span<const double> f_hat, std::span<const double> f) {
    if (f_hat.size() != f.size() || f.empty())
        throw std::invalid_argument("mse: inputs must have equal nonzero length");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double diff = f_hat[i] - f[i];
        acc += diff * diff;
    }
    return acc / static_cast<double>(f.size());
}

std::uint64_t child_seed(std::uint64_t master_seed, std::string_view signal,
                         std::size_t n, double snr, std::size_t r) {
    std::uint64_t h = splitmix64(master_seed ^ fnv1a64(signal));
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    h = splitmix64(h ^ std::bit_cast<std::uint64_t>(snr));
    h = splitmix64(h ^ static_cast<std::uint64_t>(r));
    return h;
}

BenchmarkReport run(const BenchmarkSpec& spec) {
    spec.validate();
    const auto filter = wavelet::WaveletFilter::from_name(spec.filter);
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned threads = spec.threads != 0 ? spec.threads : (hw != 0 ? hw : 1);

    BenchmarkReport report;
    report.spec = spec;

    shrinkage::ShrinkageConfig logistic_cfg = spec.config;
    logistic_cfg.rule = shrinkage::Rule::logistic;
    shrinkage::ShrinkageConfig universal_cfg = spec.config;
    universal_cfg.rule = shrinkage::Rule::universal;

    for (const auto& signal_name : spec.signals) {
        for (std::size_t n : spec.n_values) {
            for (double snr : spec.snr_values) {
                const auto sig = testfuncs::generate(signal_name, n + 1, spec.target_sd);
                const double sigma_a = testfuncs::calibrate_sigma_a(sig, snr, spec.d);
                const std::span<const double> f(sig.samples);
                const std::span<const double> f_tail = f.subspan(1);  // common MSE grid

                const std::size_t reps = spec.replications;
                std::vector<std::vector<double>> mses(spec.methods.size(),
                                                      std::vector<double>(reps, 0.0));

                std::atomic<std::size_t> next{0};
                std::mutex err_mutex;
                std::exception_ptr first_error;

                auto worker = [&]() {
                    try {
                        for (;;) {
                            const std::size_t r = next.fetch_add(1);
                            if (r >= reps) break;
                            arfima::ArfimaSpec noise_spec;
                            noise_spec.d = spec.d;
                            noise_spec.sigma_a = sigma_a;
                            noise_spec.n = n + 1;
                            noise_spec.seed = child_seed(spec.master_seed, signal_name, n, snr, r);
                            const std::vector<double> e = arfima::simulate(noise_spec);

                            std::vector<double> y(n + 1);
                            for (std::size_t i = 0; i <= n; ++i) y[i] = f[i] + e[i];
                            const std::span<const double> y_tail =
                                std::span<const double>(y).subspan(1);

                            for (std::size_t m = 0; m < spec.methods.size(); ++m) {
                                switch (spec.methods[m]) {
                                    case Method::logdiff: {
                                        const auto out = pipeline::denoise_logdiff(
                                            y, filter, logistic_cfg, spec.coarse_size);
                                        mses[m][r] = mse(
                                            std::span<const double>(out.f_hat).subspan(1), f_tail);
                                        break;
                                    }
                                    case Method::logistic: {
                                        const auto out = pipeline::denoise_direct(
                                            y_tail, filter, logistic_cfg, spec.coarse_size);
                                        mses[m][r] = mse(out.f_hat, f_tail);
                                        break;
                                    }
                                    case Method::universal: {
                                        const auto out = pipeline::denoise_direct(
                                            y_tail, filter, universal_cfg, spec.coarse_size);
                                        mses[m][r] = mse(out.f_hat, f_tail);
                                        break;
                                    }
                                }
                            }
                        }
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(err_mutex);
                        if (!first_error) first_error = std::current_exception();
                    }
                };

                if (threads <= 1 || reps < 4) {
                    worker();
                } else {
                    std::vector<std::thread> pool;
                    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
                    for (auto& th : pool) th.join();
                }
                if (first_error) {
                    try {
                        std::rethrow_exception(first_error);
                    } catch (const std::exception& ex) {
                        throw std::runtime_error("bench scenario (" + signal_name + ", n=" +
                                                 std::to_string(n) + ", snr=" +
                                                 csv::format_double(snr) + "): " + ex.what());
                    }
                }

                std::uint64_t digest = 0xcbf29ce484222325ull;
                for (std::size_t r = 0; r < reps; ++r) {
                    std::uint64_t s = child_seed(spec.master_seed, signal_name, n, snr, r);
                    for (int b = 0; b < 8; ++b) {
                        digest ^= (s >> (8 * b)) & 0xffu;
                        digest *= 0x100000001b3ull;
                    }
                }

                for (std::size_t m = 0; m < spec.methods.size(); ++m) {
                    ReportRow row;
                    row.signal = signal_name;
                    row.n = n;
                    row.snr = snr;
                    row.method = spec.methods[m];
                    row.amse = stats::mean(mses[m]);
                    row.sd_of_mse = stats::sample_sd(mses[m]);
                    row.replications = reps;
                    row.seeds_digest = hex64(digest);
                    report.rows.push_back(std::move(row));

                    if (spec.keep_replication_mses)
                        for (std::size_t r = 0; r < reps; ++r)
                            report.replication_mses.push_back({signal_name, n, snr,
                                                               spec.methods[m], r, mses[m][r]});
                }
            }
        }
    }
    return report;
}

std::string BenchmarkReport::to_csv() const {
    std::ostringstream out;
    out << "signal,n,snr,method,amse,sd_of_mse,replications,seeds_digest\n";
    for (const auto& row : rows) {
        out << row.signal << ',' << row.n << ',' << csv::format_double(row.snr) << ','
            << to_string(row.method) << ',' << csv::format_double(row.amse) << ','
            << csv::format_double(row.sd_of_mse) << ',' << row.replications << ','
            << row.seeds_digest << '\n';
    }
    return out.str();
}

std::string BenchmarkReport::replication_csv() const {
    std::ostringstream out;
    out << "signal,n,snr,method,r,mse\n";
    for (const auto& rec : replication_mses) {
        out << rec.signal << ',' << rec.n << ',' << csv::format_double(rec.snr) << ','
            << to_string(rec.method) << ',' << rec.r << ',' << csv::format_double(rec.mse)
            << '\n';
    }
    return out.str();
}

std::string BenchmarkReport::to_json() const {
    nlohmann::json j;
    j["seed_derivation"] = std::string(kSeedDerivation);
    j["master_seed"] = spec.master_seed;
    j["d"] = spec.d;
    j["replications"] = spec.replications;
    j["target_sd"] = spec.target_sd;
    j["coarse_size"] = spec.coarse_size;
    j["filter"] = spec.filter;
    j["signals"] = spec.signals;
    j["n_values"] = spec.n_values;
    j["snr_values"] = spec.snr_values;
    std::vector<std::string> method_names;
    for (auto m : spec.methods) method_names.push_back(to_string(m));
    j["methods"] = method_names;
    j["config"] = {
        {"alpha", spec.config.alpha},
        {"tau", spec.config.tau},
        {"quad_order", spec.config.quad_order},
        {"sigma_policy", shrinkage::to_string(spec.config.sigma_policy)},
        {"fixed_sigma", spec.config.fixed_sigma},
    };
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        j["rows"].push_back({
            {"signal", row.signal},
            {"n", row.n},
            {"snr", row.snr},
            {"method", to_string(row.method)},
            {"amse", row.amse},
            {"sd_of_mse", row.sd_of_mse},
            {"replications", row.replications},
            {"seeds_digest", row.seeds_digest},
        });
    }
    return j.dump(2) + "\n";
}

}  // namespace wavediff::bench
