// Helper for tests that drive the command-line tool.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

namespace subprocess {

struct Result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::filesystem::path fresh_dir(const std::string& tag) {
    static std::mt19937_64 gen(std::random_device{}());
    auto dir = std::filesystem::temp_directory_path() /
               (tag + "_" + std::to_string(gen()));
    std::filesystem::create_directories(dir);
    return dir;
}

// Run a shell command, capturing stdout/stderr and the exit code.
inline Result run(const std::string& cmd) {
    const auto dir = fresh_dir("subproc");
    const auto out_path = dir / "out.txt";
    const auto err_path = dir / "err.txt";
    const std::string full =
        cmd + " > " + out_path.string() + " 2> " + err_path.string();
    const int status = std::system(full.c_str());
    Result r;
#ifndef _WIN32
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
    r.exit_code = status;
#endif
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::filesystem::remove_all(dir);
    return r;
}

inline std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace subprocess
