#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "subprocess.hpp"
#include "wavediff/csv.hpp"

namespace fs = std::filesystem;

namespace {

const std::string cli = WAVEDIFF_CLI_PATH;

struct TempDir {
    fs::path path = subprocess::fresh_dir("wavediff_cli");
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::vector<double> column(const std::string& csv_text, std::size_t col) {
    std::vector<double> out;
    std::istringstream in(csv_text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::size_t start = 0;
        for (std::size_t c = 0; c < col; ++c) start = line.find(',', start) + 1;
        out.push_back(std::stod(line.substr(start)));
    }
    return out;
}

}  // namespace

TEST_CASE("simulate writes a deterministic CSV") {
    TempDir dir;
    const std::string cmd = cli + " simulate --d 0 --sigma-a 1 --n 8 --seed 1 --out " +
                            dir.file("a.csv");
    auto r1 = subprocess::run(cmd);
    REQUIRE(r1.exit_code == 0);
    const std::string first = subprocess::slurp(dir.file("a.csv"));
    CHECK(subprocess::count_lines(first) == 9);  // header + 8 rows
    CHECK(first.rfind("index,value\n", 0) == 0);

    auto r2 = subprocess::run(cli + " simulate --d 0 --sigma-a 1 --n 8 --seed 1 --out " +
                              dir.file("b.csv"));
    REQUIRE(r2.exit_code == 0);
    CHECK(first == subprocess::slurp(dir.file("b.csv")));
}

TEST_CASE("simulate rejects an out-of-range d with the domain exit code") {
    TempDir dir;
    auto r = subprocess::run(cli + " simulate --d 0.6 --n 8 --out " + dir.file("x.csv"));
    CHECK(r.exit_code == 4);
    CHECK(r.err.find("(-0.5, 0.5)") != std::string::npos);
    CHECK(!fs::exists(dir.file("x.csv")));  // no partial output
}

TEST_CASE("simulate | acf roundtrip shows long memory") {
    TempDir dir;
    auto r1 = subprocess::run(cli + " simulate --d 0.4 --n 16384 --seed 3 --out " +
                              dir.file("noise.csv"));
    REQUIRE(r1.exit_code == 0);
    auto r2 = subprocess::run(cli + " acf --in " + dir.file("noise.csv") + " --maxlag 5 --out " +
                              dir.file("acf.csv"));
    REQUIRE(r2.exit_code == 0);
    const auto acf = column(subprocess::slurp(dir.file("acf.csv")), 1);
    REQUIRE(acf.size() == 6);
    CHECK(acf[0] == 1.0);
    CHECK(acf[1] > 0.55);
    CHECK(acf[1] < 0.75);
}

TEST_CASE("denoise keeps a constant series constant") {
    TempDir dir;
    std::ostringstream input;
    input << "value\n";
    for (int i = 0; i < 65; ++i) input << "4.25\n";
    wavediff::csv::write_text_atomic(dir.file("const.csv"), input.str());

    auto r = subprocess::run(cli + " denoise --method logdiff --in " + dir.file("const.csv") +
                             " --out " + dir.file("fit.csv"));
    REQUIRE(r.exit_code == 0);
    const auto fit = column(subprocess::slurp(dir.file("fit.csv")), 2);
    REQUIRE(fit.size() == 65);
    for (double v : fit) CHECK(v == 4.25);
}

TEST_CASE("denoise anchors the first fitted value at the 20-point mean") {
    TempDir dir;
    auto r1 = subprocess::run(cli + " simulate --d 0.4 --n 1025 --seed 11 --out " +
                              dir.file("y.csv"));
    REQUIRE(r1.exit_code == 0);
    auto r2 = subprocess::run(cli + " denoise --method logdiff --in " + dir.file("y.csv") +
                              " --out " + dir.file("fit.csv"));
    REQUIRE(r2.exit_code == 0);

    const auto y = column(subprocess::slurp(dir.file("y.csv")), 1);
    const auto fit_csv = subprocess::slurp(dir.file("fit.csv"));
    const auto y_echo = column(fit_csv, 1);
    const auto fit = column(fit_csv, 2);
    REQUIRE(fit.size() == 1025);
    REQUIRE(y_echo.size() == 1025);
    for (std::size_t i = 0; i < 20; ++i) CHECK(y_echo[i] == y[i]);

    double mean20 = 0.0;
    for (std::size_t i = 0; i < 20; ++i) mean20 += y_echo[i];
    mean20 /= 20.0;
    CHECK(fit[0] == mean20);
}

TEST_CASE("denoise truncates from the end with a warning") {
    TempDir dir;
    std::ostringstream input;
    for (int i = 0; i < 1030; ++i) input << 0.001 * i << "\n";
    wavediff::csv::write_text_atomic(dir.file("long.csv"), input.str());

    auto r = subprocess::run(cli + " denoise --method logdiff --in " + dir.file("long.csv") +
                             " --out " + dir.file("fit.csv"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.err.find("1025") != std::string::npos);
    CHECK(column(subprocess::slurp(dir.file("fit.csv")), 2).size() == 1025);
}

TEST_CASE("universal denoising flattens pure noise audibly in the summary") {
    TempDir dir;
    auto r1 = subprocess::run(cli + " simulate --d 0 --n 512 --seed 9 --out " +
                              dir.file("noise.csv"));
    REQUIRE(r1.exit_code == 0);
    auto r2 = subprocess::run(cli + " denoise --method universal --coarse 1 --in " +
                              dir.file("noise.csv") + " --out " + dir.file("fit.csv"));
    REQUIRE(r2.exit_code == 0);
    const auto pos = r2.err.find("l2(f_hat)/l2(y)=");
    REQUIRE(pos != std::string::npos);
    const double ratio = std::stod(r2.err.substr(pos + 16));
    CHECK(ratio < 0.1);
}

TEST_CASE("malformed csv rows are reported with their line number") {
    TempDir dir;
    wavediff::csv::write_text_atomic(dir.file("bad.csv"), "1.0\n2.0\nnot-a-number\n4.0\n");
    auto r = subprocess::run(cli + " denoise --in " + dir.file("bad.csv") + " --out " +
                             dir.file("out.csv"));
    CHECK(r.exit_code == 3);
    CHECK(r.err.find(":3") != std::string::npos);
    CHECK(!fs::exists(dir.file("out.csv")));
}

TEST_CASE("bench runs are reproducible file-for-file") {
    TempDir dir;
    const std::string flags = " bench --signals blocks --n 64 --snr 3 --reps 5 --seed 42"
                              " --threads 2 --out ";
    auto r1 = subprocess::run(cli + flags + dir.file("r1"));
    REQUIRE(r1.exit_code == 0);
    auto r2 = subprocess::run(cli + flags + dir.file("r2"));
    REQUIRE(r2.exit_code == 0);
    CHECK(subprocess::slurp(dir.file("r1.csv")) == subprocess::slurp(dir.file("r2.csv")));
    CHECK(subprocess::slurp(dir.file("r1.json")) == subprocess::slurp(dir.file("r2.json")));
    CHECK(subprocess::slurp(dir.file("r1.csv")).size() > 0);
}

TEST_CASE("bench refuses a single replication") {
    TempDir dir;
    auto r = subprocess::run(cli + " bench --signals blocks --n 64 --snr 3 --reps 1 --out " +
                             dir.file("r"));
    CHECK(r.exit_code == 4);
    CHECK(r.err.find(">= 2") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    auto r = subprocess::run(cli + " simulate --no-such-flag 1");
    CHECK(r.exit_code == 2);
    auto r2 = subprocess::run(cli + " denoise --method nope --in /dev/null");
    CHECK(r2.exit_code == 2);
    auto help = subprocess::run(cli + " --help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("simulate") != std::string::npos);
    CHECK(help.out.find("bench") != std::string::npos);
}

TEST_CASE("signal subcommand dumps the requested test function") {
    TempDir dir;
    auto r = subprocess::run(cli + " signal --signal doppler --n 257 --target-sd 7 --out " +
                             dir.file("sig.csv"));
    REQUIRE(r.exit_code == 0);
    const auto vals = column(subprocess::slurp(dir.file("sig.csv")), 1);
    REQUIRE(vals.size() == 257);

    auto bad = subprocess::run(cli + " signal --signal ramp --out " + dir.file("sig2.csv"));
    CHECK(bad.exit_code == 4);
}

TEST_CASE("decomposition dump has the level,index,value layout") {
    TempDir dir;
    auto r1 = subprocess::run(cli + " simulate --d 0 --n 65 --seed 2 --out " + dir.file("y.csv"));
    REQUIRE(r1.exit_code == 0);
    auto r2 = subprocess::run(cli + " denoise --method logdiff --in " + dir.file("y.csv") +
                              " --out " + dir.file("fit.csv") + " --dump-decomp " +
                              dir.file("coef.csv"));
    REQUIRE(r2.exit_code == 0);
    const std::string coef = subprocess::slurp(dir.file("coef.csv"));
    CHECK(coef.rfind("level,index,value\n", 0) == 0);
    CHECK(coef.find("\n-1,1,") != std::string::npos);  // scaling row
    CHECK(subprocess::count_lines(coef) == 65);        // header + 64 coefficients
}
