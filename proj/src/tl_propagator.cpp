#include "osee/tl_propagator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "osee/bessel.hpp"
#include "osee/errors.hpp"

namespace osee {

int TruncationPolicy::pad(double x) const {
    return static_cast<int>(std::ceil(pad_scale * std::max(1.0, std::cbrt(x)) + pad_offset));
}

int TruncationPolicy::window(double t) const {
    const double x = 4.0 * t;
    return static_cast<int>(std::ceil(x)) + pad(x);
}

void require_critical_field(double h) {
    if (h != 1.0) {
        throw ConfigError("thermodynamic-limit Bessel engine requires h = 1, got h = " + std::to_string(h));
    }
}

int required_window(const OccupationProfile& occ, double t, const TruncationPolicy& policy) {
    int deepest = 0;
    if (!occ.flip_set().empty()) deepest = std::max(0, -occ.flip_set().front());
    return policy.window(t) + deepest;
}

CorrelationMatrix correlation_matrix_tl(const OccupationProfile& occ, double t,
                                        const TruncationPolicy& policy, int window,
                                        TlSummation summation) {
    if (!(t >= 0.0)) throw ConfigError("time must be >= 0");
    const int needed = required_window(occ, t, policy);
    if (window == 0) window = needed;
    if (window < needed) {
        throw ConfigError("correlation window " + std::to_string(window) + " below the required " +
                          std::to_string(needed) + " at t = " + std::to_string(t));
    }
    if (summation == TlSummation::Auto) {
        summation = occ.left_fill() ? TlSummation::Complement : TlSummation::Direct;
    }

    const double x = 4.0 * t;
    const int reach = static_cast<int>(std::ceil(x)) + policy.pad(x);
    const MajoranaIndex first = -window + 1;
    const IndexWindow rows{first, 0};

    // Modes b whose propagator J_{b-m} is non-negligible somewhere on the window,
    // plus any flipped modes outside that band.
    const bool want = summation == TlSummation::Direct;
    std::vector<MajoranaIndex> cols;
    for (MajoranaIndex b = first - reach; b <= reach; ++b) {
        if ((occ(b) != 0) == want) cols.push_back(b);
    }
    for (MajoranaIndex f : occ.flip_set()) {
        if ((f < first - reach || f > reach) && (occ(f) != 0) == want) cols.push_back(f);
    }

    Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(window, window);
    if (summation == TlSummation::Complement) gamma.diagonal().setOnes();
    if (!cols.empty()) {
        const auto [lo, hi] = std::minmax_element(cols.begin(), cols.end());
        const BesselTable table = bessel_row(x, *lo, *hi - first);
        Eigen::MatrixXd a(window, static_cast<Eigen::Index>(cols.size()));
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            for (int i = 0; i < window; ++i) a(i, c) = table(cols[c] - (first + i));
        }
        gamma.selfadjointView<Eigen::Lower>().rankUpdate(a, want ? 1.0 : -1.0);
        gamma = gamma.selfadjointView<Eigen::Lower>();
    }
    return {t, rows, std::move(gamma)};
}

Eigen::MatrixXd reflect_window(const CorrelationMatrix& gamma) {
    if (gamma.window.last != 0) throw ConfigError("reflect_window expects a window ending at index 0");
    return gamma.gamma.reverse();
}

}  // namespace osee
