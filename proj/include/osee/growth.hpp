#pragma once

#include <span>

#include "osee/entropy.hpp"

namespace osee {

inline constexpr int kMinFitSamples = 8;

/// S(t) ~ slope * ln t + offset over [t_min, t_max].
struct LogFit {
    double slope = 0.0;   // c
    double offset = 0.0;  // c'
    double t_min = 0.0;  // the requested window, not the extreme samples
    double t_max = 0.0;
    double rms_residual = 0.0;
    int samples = 0;
};

/// Ordinary least squares of S against ln t over the samples with
/// t_min <= t <= t_max. Needs t_min > 0 and at least 8 samples.
LogFit fit_log_growth(std::span<const double> times, std::span<const double> entropies, double t_min,
                      double t_max);
LogFit fit_log_growth(const EntropySeries& series, double t_min, double t_max);

}  // namespace osee
