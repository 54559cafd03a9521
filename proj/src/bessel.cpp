#include "osee/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "osee/errors.hpp"

namespace osee {

namespace {

constexpr double kRescaleThreshold = 1.0e250;
constexpr double kRescaleFactor = 1.0e-250;

// First order where J_n(x) is below ~1e-40 relative to the oscillatory region:
// the Airy transition around n = x has width ~ (x/2)^(1/3).
int miller_start(double x, int n_max) {
    const double width = std::cbrt(std::max(x, 1.0) / 2.0);
    int start = static_cast<int>(std::max(static_cast<double>(n_max), std::ceil(x)) + 40.0 + 25.0 * width);
    return start + (start % 2);
}

}  // namespace

std::vector<double> bessel_j_nonnegative(double x, int n_max) {
    if (!(x >= 0.0) || x > kMaxBesselArgument) {
        throw ConfigError("Bessel argument " + std::to_string(x) + " outside [0, 1e5]");
    }
    if (n_max < 0 || n_max > kMaxBesselOrder) {
        throw ConfigError("Bessel order " + std::to_string(n_max) + " outside [0, 2e5]");
    }
    std::vector<double> j(static_cast<std::size_t>(n_max) + 1, 0.0);
    if (x == 0.0) {
        j[0] = 1.0;
        return j;
    }

    const int start = miller_start(x, n_max);
    double above = 0.0;    // J_{k+1}, unnormalised
    double current = 1.0e-30;  // J_k
    double even_sum = 0.0;  // sum of J_k over even k >= 2
    for (int k = start; k >= 1; --k) {
        if (k <= n_max) j[k] = current;
        if (k % 2 == 0) even_sum += current;
        const double below = (2.0 * k / x) * current - above;
        above = current;
        current = below;
        if (std::abs(current) > kRescaleThreshold) {
            current *= kRescaleFactor;
            above *= kRescaleFactor;
            even_sum *= kRescaleFactor;
            for (int i = k; i <= n_max; ++i) j[i] *= kRescaleFactor;
        }
    }
    j[0] = current;
    const double norm = current + 2.0 * even_sum;
    for (double& v : j) v /= norm;
    return j;
}

BesselTable bessel_row(double x, int n_min, int n_max) {
    if (n_min > n_max) throw ConfigError("empty Bessel order range");
    const int top = std::max(std::abs(n_min), std::abs(n_max));
    const auto positive = bessel_j_nonnegative(x, top);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
    for (int n = n_min; n <= n_max; ++n) {
        const double v = positive[static_cast<std::size_t>(std::abs(n))];
        values.push_back((n < 0 && (-n) % 2 == 1) ? -v : v);
    }
    return {x, n_min, n_max, std::move(values)};
}

}  // namespace osee
