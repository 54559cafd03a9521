#include "osee/growth.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "osee/errors.hpp"

namespace osee {

LogFit fit_log_growth(std::span<const double> times, std::span<const double> entropies, double t_min,
                      double t_max) {
    if (times.size() != entropies.size()) throw ConfigError("times and entropies differ in length");
    if (!(t_min > 0.0) || !(t_max >= t_min)) throw ConfigError("fit window needs 0 < t_min <= t_max");

    std::vector<double> u, s;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] >= t_min && times[i] <= t_max) {
            u.push_back(std::log(times[i]));
            s.push_back(entropies[i]);
        }
    }
    const int n = static_cast<int>(u.size());
    if (n < kMinFitSamples) {
        throw ConfigError("log fit needs at least " + std::to_string(kMinFitSamples) +
                          " samples in the window, found " + std::to_string(n));
    }

    // Centred normal equations.
    double u_mean = 0.0, s_mean = 0.0;
    for (int i = 0; i < n; ++i) {
        u_mean += u[i];
        s_mean += s[i];
    }
    u_mean /= n;
    s_mean /= n;
    double suu = 0.0, sus = 0.0;
    for (int i = 0; i < n; ++i) {
        suu += (u[i] - u_mean) * (u[i] - u_mean);
        sus += (u[i] - u_mean) * (s[i] - s_mean);
    }
    if (!(suu > 0.0)) throw ConfigError("log fit window has no spread in t");

    LogFit fit;
    fit.slope = sus / suu;
    fit.offset = s_mean - fit.slope * u_mean;
    fit.t_min = t_min;
    fit.t_max = t_max;
    fit.samples = n;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = s[i] - (fit.slope * u[i] + fit.offset);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

LogFit fit_log_growth(const EntropySeries& series, double t_min, double t_max) {
    return fit_log_growth(series.times, series.entropies, t_min, t_max);
}

}  // namespace osee
