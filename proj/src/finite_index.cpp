#include "osee/finite_index.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "osee/bessel.hpp"
#include "osee/entropy.hpp"
#include "osee/errors.hpp"

namespace osee {

namespace {

bool is_infinite(double t) { return std::isinf(t) && t > 0; }

double asymptotic_overlap(MajoranaIndex a, MajoranaIndex b) {
    if (a == b) return 0.5;
    const double d = static_cast<double>(a - b);
    return -std::sin(std::numbers::pi * d / 2.0) / (std::numbers::pi * d);
}

void check_distinct(std::vector<MajoranaIndex> indices) {
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
        throw SemanticError("duplicate Majorana index in finite-index operator");
    }
}

// delta_ab - sum_{k>=1} J_{k-a} J_{k-b}, with the tail cut where both Bessel
// factors are negligible.
Eigen::MatrixXd finite_time_overlaps(const std::vector<MajoranaIndex>& indices, double t,
                                     const TruncationPolicy& policy) {
    if (!(t >= 0.0)) throw ConfigError("overlap time must be >= 0 or infinite");
    const auto n = static_cast<Eigen::Index>(indices.size());
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
    if (n == 0) return g;
    const double x = 4.0 * t;
    const auto [lo, hi] = std::minmax_element(indices.begin(), indices.end());
    const int reach = static_cast<int>(std::ceil(x)) + policy.pad(x);
    const int k_max = std::max(1, *hi + reach);
    const BesselTable table = bessel_row(x, 1 - *hi, k_max - *lo);
    for (int k = 1; k <= k_max; ++k) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double ji = table(k - indices[i]);
            for (Eigen::Index j = 0; j <= i; ++j) g(i, j) -= ji * table(k - indices[j]);
        }
    }
    return g.selfadjointView<Eigen::Lower>();
}

}  // namespace

double psi_overlap(MajoranaIndex a, MajoranaIndex b, double t, const TruncationPolicy& policy) {
    if (is_infinite(t)) return asymptotic_overlap(a, b);
    if (a == b) return finite_time_overlaps({a}, t, policy)(0, 0);
    return finite_time_overlaps({a, b}, t, policy)(0, 1);
}

OverlapMatrix overlap_matrix(const std::vector<MajoranaIndex>& indices, double t,
                             const TruncationPolicy& policy) {
    check_distinct(indices);
    OverlapMatrix out{indices, t, {}};
    if (is_infinite(t)) {
        const auto n = static_cast<Eigen::Index>(indices.size());
        out.g.resize(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) out.g(i, j) = asymptotic_overlap(indices[i], indices[j]);
        }
    } else {
        out.g = finite_time_overlaps(indices, t, policy);
    }
    return out;
}

std::vector<double> saturation_spectrum(const std::vector<MajoranaIndex>& indices, double t,
                                        const TruncationPolicy& policy) {
    const OverlapMatrix overlaps = overlap_matrix(indices, t, policy);
    const Eigen::VectorXd ev = symmetric_spectrum(overlaps.g);
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    for (double& v : out) {
        if (v < kRankThreshold) v = 0.0;
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<double> gram_schmidt_spectrum(const OverlapMatrix& overlaps) {
    const Eigen::MatrixXd& g = overlaps.g;
    const Eigen::Index n = g.rows();
    // phi_k = sum_a c(k, a) psi_a, built one vector at a time.
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::VectorXd v = Eigen::VectorXd::Unit(n, k);
        for (Eigen::Index l = 0; l < k; ++l) {
            // <phi_l|v> in the psi basis is c_l^T g v
            const double proj = c.row(l).transpose().dot(g * v);
            v -= proj * c.row(l).transpose();
        }
        const double norm2 = v.dot(g * v);
        if (!(norm2 > kRankThreshold)) {
            throw NumericalError("psi vectors are numerically linearly dependent");
        }
        c.row(k) = v.transpose() / std::sqrt(norm2);
    }
    // <phi_k|psi_j> = (c g)_{kj}
    const Eigen::MatrixXd proj = c * g;
    const Eigen::MatrixXd reduced = proj * proj.transpose();
    const Eigen::VectorXd ev = symmetric_spectrum(0.5 * (reduced + reduced.transpose()));
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double saturation_entropy(const std::vector<MajoranaIndex>& indices, double t,
                          const TruncationPolicy& policy) {
    const auto spectrum = saturation_spectrum(indices, t, policy);
    return entropy_from_spectrum(spectrum);
}

std::pair<double, double> two_index_eigenvalues(double g11, double g22, double g12) {
    const double mean = 0.5 * (g11 + g22);
    const double radius = 0.5 * std::sqrt((g11 - g22) * (g11 - g22) + 4.0 * g12 * g12);
    return {mean + radius, mean - radius};
}

}  // namespace osee
