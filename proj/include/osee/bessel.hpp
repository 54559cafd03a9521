#pragma once

#include <vector>

namespace osee {

inline constexpr double kMaxBesselArgument = 1.0e5;
inline constexpr int kMaxBesselOrder = 200000;

/// J_n(x) for consecutive integer orders n_min..n_max at one argument.
class BesselTable {
public:
    BesselTable(double x, int n_min, int n_max, std::vector<double> values)
        : x_(x), n_min_(n_min), n_max_(n_max), values_(std::move(values)) {}

    double argument() const { return x_; }
    int min_order() const { return n_min_; }
    int max_order() const { return n_max_; }

    /// J_n(x); zero outside the tabulated range.
    double operator()(int n) const {
        return (n < n_min_ || n > n_max_) ? 0.0 : values_[static_cast<std::size_t>(n - n_min_)];
    }

    const std::vector<double>& values() const { return values_; }

private:
    double x_;
    int n_min_;
    int n_max_;
    std::vector<double> values_;
};

/// J_0(x) .. J_{n_max}(x) by Miller's backward recurrence, normalised with
/// J_0 + 2 sum_k J_{2k} = 1.
std::vector<double> bessel_j_nonnegative(double x, int n_max);

/// Integer-order Bessel values on [n_min, n_max]; negative orders use
/// J_{-n} = (-1)^n J_n. Valid for 0 <= x <= 1e5 and |n| <= 2e5.
BesselTable bessel_row(double x, int n_min, int n_max);

}  // namespace osee
