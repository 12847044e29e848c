// wavediff: simulate long-memory noise, generate test signals, denoise
// series, inspect autocorrelations and run the Monte Carlo benchmark.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavediff/arfima.hpp"
#include "wavediff/bench.hpp"
#include "wavediff/csv.hpp"
#include "wavediff/pipeline.hpp"
#include "wavediff/shrinkage.hpp"
#include "wavediff/stats.hpp"
#include "wavediff/testfuncs.hpp"
#include "wavediff/wavelet.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitDomain = 4;

using wavediff::csv::format_double;

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    wavediff::csv::write_text_atomic(path, content);
}

std::vector<double> read_input(const std::string& path) {
    if (path == "-") return wavediff::csv::read_series(std::cin, "<stdin>");
    return wavediff::csv::read_series_file(path);
}

// Largest 2^J <= len (direct) or 2^J + 1 <= len (logdiff), warning when
// the tail has to be dropped.
std::size_t usable_length(std::size_t len, bool logdiff) {
    const std::size_t extra = logdiff ? 1 : 0;
    const std::size_t min_len = logdiff ? 33 : 8;
    if (len < min_len) {
        throw wavediff::csv::CsvError("input too short: need at least " +
                                      std::to_string(min_len) + " points, got " +
                                      std::to_string(len));
    }
    std::size_t n = 1;
    while (n * 2 + extra <= len) n *= 2;
    const std::size_t use = n + extra;
    if (use != len)
        std::cerr << "warning: input has " << len << " points; using the first " << use
                  << " (next valid length)\n";
    return use;
}

struct DenoiseFlags {
    std::string in_path;
    std::string out_path = "-";
    std::string method = "logdiff";
    std::string filter = "db4";
    std::string sigma_policy = "per-level-mad";
    std::string dump_decomp;
    double alpha = 0.8;
    double tau = 5.0;
    double fixed_sigma = 1.0;
    int quad_order = 64;
    std::size_t coarse = 32;
};

int cmd_denoise(const DenoiseFlags& flags) {
    const std::vector<double> y_all = read_input(flags.in_path);
    const bool logdiff = flags.method == "logdiff";
    const std::size_t use = usable_length(y_all.size(), logdiff);
    const std::span<const double> y(y_all.data(), use);

    wavediff::shrinkage::ShrinkageConfig config;
    config.rule = logdiff ? wavediff::shrinkage::Rule::logistic
                          : wavediff::shrinkage::rule_from_name(flags.method);
    config.alpha = flags.alpha;
    config.tau = flags.tau;
    config.quad_order = flags.quad_order;
    config.sigma_policy = wavediff::shrinkage::sigma_policy_from_name(flags.sigma_policy);
    config.fixed_sigma = flags.fixed_sigma;
    const auto filter = wavediff::wavelet::WaveletFilter::from_name(flags.filter);

    if (!flags.dump_decomp.empty()) {
        const std::size_t nz = logdiff ? use - 1 : use;
        std::vector<double> z =
            logdiff ? wavediff::pipeline::difference(y)
                    : std::vector<double>(y.begin(), y.end());
        const int levels = wavediff::pipeline::decomposition_levels(nz, flags.coarse);
        const auto decomp = wavediff::wavelet::dwt(z, filter, levels);
        std::ostringstream out;
        out << "level,index,value\n";
        for (std::size_t i = 0; i < decomp.scaling.size(); ++i)
            out << "-1," << i + 1 << ',' << format_double(decomp.scaling[i]) << '\n';
        int level = levels - static_cast<int>(decomp.details.size());
        for (const auto& block : decomp.details) {
            for (std::size_t i = 0; i < block.size(); ++i)
                out << level << ',' << i + 1 << ',' << format_double(block[i]) << '\n';
            ++level;
        }
        wavediff::csv::write_text_atomic(flags.dump_decomp, out.str());
    }

    const auto result =
        logdiff ? wavediff::pipeline::denoise_logdiff(y, filter, config, flags.coarse)
                : wavediff::pipeline::denoise_direct(y, filter, config, flags.coarse);

    std::ostringstream out;
    out << "index,y,f_hat\n";
    const std::size_t rows = result.f_hat.size();
    for (std::size_t i = 0; i < rows; ++i)
        out << i + 1 << ',' << format_double(y[i]) << ',' << format_double(result.f_hat[i])
            << '\n';
    write_output(flags.out_path, out.str());

    std::vector<double> residual(rows);
    for (std::size_t i = 0; i < rows; ++i) residual[i] = y[i] - result.f_hat[i];
    const double sd_y = wavediff::stats::sample_sd(y);
    const double sd_fit = wavediff::stats::sample_sd(result.f_hat);
    const double sd_res = wavediff::stats::sample_sd(residual);
    double l2_y = 0.0, l2_fit = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        l2_y += y[i] * y[i];
        l2_fit += result.f_hat[i] * result.f_hat[i];
    }
    std::cerr << "method=" << result.method << " points=" << rows
              << " sd(y)=" << format_double(sd_y) << " sd(f_hat)=" << format_double(sd_fit)
              << " sd(residual)=" << format_double(sd_res)
              << " l2(f_hat)/l2(y)=" << format_double(std::sqrt(l2_fit / l2_y))
              << " estimated_snr=" << format_double(sd_fit / sd_res) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wavelet shrinkage for signals with long-memory noise"};
    app.require_subcommand(1);

    // --- simulate ---------------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "Sample an ARFIMA(0,d,0) Gaussian series");
    double sim_d = 0.4, sim_sigma_a = 1.0;
    std::size_t sim_n = 512;
    std::uint64_t sim_seed = 1;
    std::string sim_out = "-";
    simulate->add_option("--d", sim_d, "long-memory parameter, -0.5 < d < 0.5");
    simulate->add_option("--sigma-a", sim_sigma_a, "innovation standard deviation");
    simulate->add_option("--n", sim_n, "series length")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim_seed, "random seed");
    simulate->add_option("--out", sim_out, "output CSV path ('-' for stdout)");

    // --- signal -----------------------------------------------------------
    auto* signal = app.add_subcommand("signal", "Evaluate a test signal on a uniform grid");
    std::string sig_name = "blocks";
    std::size_t sig_n = 1025;
    double sig_target_sd = 7.0;
    std::string sig_out = "-";
    signal->add_option("--signal", sig_name, "bumps|blocks|doppler|heavisine");
    signal->add_option("--n", sig_n, "number of samples")->check(CLI::PositiveNumber);
    signal->add_option("--target-sd", sig_target_sd, "sample sd after rescaling");
    signal->add_option("--out", sig_out, "output CSV path");

    // --- acf --------------------------------------------------------------
    auto* acf = app.add_subcommand("acf", "Sample autocorrelation of a series");
    std::string acf_in, acf_out = "-";
    std::size_t acf_maxlag = 40;
    acf->add_option("--in", acf_in, "input CSV (value in last column)")->required();
    acf->add_option("--maxlag", acf_maxlag, "largest lag");
    acf->add_option("--out", acf_out, "output CSV path");

    // --- denoise ----------------------------------------------------------
    auto* denoise = app.add_subcommand("denoise", "Estimate the signal under a CSV series");
    DenoiseFlags dn;
    denoise->add_option("--in", dn.in_path, "input CSV (value in last column)")->required();
    denoise->add_option("--out", dn.out_path, "output CSV path (index,y,f_hat)");
    denoise->add_option("--method", dn.method, "universal|logistic|logdiff")
        ->check(CLI::IsMember({"universal", "logistic", "logdiff"}));
    denoise->add_option("--filter", dn.filter, "wavelet filter (haar, db2..db10)");
    denoise->add_option("--alpha", dn.alpha, "point-mass prior weight in (0,1)");
    denoise->add_option("--tau", dn.tau, "logistic prior scale");
    denoise->add_option("--quad-order", dn.quad_order, "Gauss-Hermite order (even, >= 16)");
    denoise->add_option("--sigma-policy", dn.sigma_policy,
                        "per-level-mad|finest-level-mad|fixed");
    denoise->add_option("--fixed-sigma", dn.fixed_sigma, "sigma for --sigma-policy fixed");
    denoise->add_option("--coarse", dn.coarse,
                        "coarse cutoff: smallest detail block that is still shrunk");
    denoise->add_option("--dump-decomp", dn.dump_decomp,
                        "also write the detail/scaling coefficients (level,index,value)");

    // --- bench ------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "Monte Carlo comparison of the methods");
    wavediff::bench::BenchmarkSpec spec;
    std::vector<std::string> bench_methods{"universal", "logistic", "logdiff"};
    std::string bench_sigma_policy = "per-level-mad";
    double bench_fixed_sigma = 1.0;
    std::string bench_out = "report", bench_dump_mse;
    bench->add_option("--signals", spec.signals, "test signals")->delimiter(',');
    bench->add_option("--n", spec.n_values, "sample sizes (powers of two)")->delimiter(',');
    bench->add_option("--snr", spec.snr_values, "signal-to-noise ratios")->delimiter(',');
    bench->add_option("--d", spec.d, "long-memory parameter");
    bench->add_option("--reps", spec.replications, "replications per scenario (>= 2)");
    bench->add_option("--seed", spec.master_seed, "master seed");
    bench->add_option("--methods", bench_methods, "methods to compare")->delimiter(',');
    bench->add_option("--filter", spec.filter, "wavelet filter");
    bench->add_option("--alpha", spec.config.alpha, "point-mass prior weight");
    bench->add_option("--tau", spec.config.tau, "logistic prior scale");
    bench->add_option("--quad-order", spec.config.quad_order, "Gauss-Hermite order");
    bench->add_option("--sigma-policy", bench_sigma_policy,
                      "per-level-mad|finest-level-mad|fixed");
    bench->add_option("--fixed-sigma", bench_fixed_sigma, "sigma for fixed policy");
    bench->add_option("--target-sd", spec.target_sd, "signal sd before noise is added");
    bench->add_option("--coarse", spec.coarse_size,
                      "coarse cutoff: smallest detail block that is still shrunk");
    bench->add_option("--threads", spec.threads, "worker threads (0 = all cores)");
    bench->add_option("--out", bench_out, "report path prefix (writes .csv and .json)");
    bench->add_option("--dump-mse", bench_dump_mse, "also write per-replication MSEs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            wavediff::arfima::ArfimaSpec s;
            s.d = sim_d;
            s.sigma_a = sim_sigma_a;
            s.n = sim_n;
            s.seed = sim_seed;
            const auto series = wavediff::arfima::simulate(s);
            std::ostringstream out;
            out << "index,value\n";
            for (std::size_t i = 0; i < series.size(); ++i)
                out << i + 1 << ',' << format_double(series[i]) << '\n';
            write_output(sim_out, out.str());
        } else if (signal->parsed()) {
            const auto sig = wavediff::testfuncs::generate(sig_name, sig_n, sig_target_sd);
            std::ostringstream out;
            out << "index,value\n";
            for (std::size_t i = 0; i < sig.samples.size(); ++i)
                out << i + 1 << ',' << format_double(sig.samples[i]) << '\n';
            write_output(sig_out, out.str());
        } else if (acf->parsed()) {
            const auto series = read_input(acf_in);
            const auto result = wavediff::arfima::sample_acf(series, acf_maxlag);
            std::ostringstream out;
            out << "lag,value\n";
            for (std::size_t k = 0; k < result.values.size(); ++k)
                out << k << ',' << format_double(result.values[k]) << '\n';
            write_output(acf_out, out.str());
        } else if (denoise->parsed()) {
            return cmd_denoise(dn);
        } else if (bench->parsed()) {
            spec.methods.clear();
            for (const auto& name : bench_methods)
                spec.methods.push_back(wavediff::bench::method_from_name(name));
            spec.config.sigma_policy =
                wavediff::shrinkage::sigma_policy_from_name(bench_sigma_policy);
            spec.config.fixed_sigma = bench_fixed_sigma;
            spec.keep_replication_mses = !bench_dump_mse.empty();
            const auto report = wavediff::bench::run(spec);
            wavediff::csv::write_text_atomic(bench_out + ".csv", report.to_csv());
            wavediff::csv::write_text_atomic(bench_out + ".json", report.to_json());
            if (!bench_dump_mse.empty())
                wavediff::csv::write_text_atomic(bench_dump_mse, report.replication_csv());
            std::cerr << "wrote " << bench_out << ".csv and " << bench_out << ".json\n";
        }
    } catch (const wavediff::csv::CsvError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const wavediff::csv::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
