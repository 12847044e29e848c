#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavediff::testfuncs {

// Closed-form test signals on [0,1].
double bumps(double x);
double blocks(double x);
double doppler(double x);
double heavisine(double x);

struct TestSignal {
    std::string name;
    std::vector<double> samples;  // f(x_i), x_i = i/(n+1), i = 1..n+1
    double target_sd = 0.0;
};

/// Evaluate the named signal on the uniform grid x_i = i / n_plus_1,
/// i = 1..n_plus_1, then rescale affinely about the mean so the sample
/// standard deviation equals target_sd.
TestSignal generate(std::string_view name, std::size_t n_plus_1, double target_sd);

const std::vector<std::string>& signal_names();

/// Variance inflation V(d) = Gamma(1-2d)/Gamma(1-d)^2 of ARFIMA(0,d,0):
/// the stationary variance is sigma_a^2 V(d).
double stationary_variance_ratio(double d);

/// Innovation sd giving sd(e) = sd(signal)/snr for ARFIMA(0,d,0) errors:
/// sigma_a = sd(signal) / (snr sqrt(V(d))).
double calibrate_sigma_a(const TestSignal& signal, double snr, double d);

}  // namespace wavediff::testfuncs
