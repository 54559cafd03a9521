#include "osee/finite_propagator.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "osee/errors.hpp"

namespace osee {

GeneratorMatrix::GeneratorMatrix(const ChainConfig& chain) : chain_(chain) {
    // M_{2j,2j+1} = 2 and M_{2j-1,2j} = 2h; the lower band is the negative.
    // Couplings leaving {-2L+1..2L} are dropped (open ends).
    super_.reserve(chain.mode_count() - 1);
    for (MajoranaIndex b = chain.first_mode(); b < chain.last_mode(); ++b) {
        super_.push_back(b % 2 == 0 ? 2.0 : 2.0 * chain.field);
    }
}

double GeneratorMatrix::operator()(MajoranaIndex m, MajoranaIndex n) const {
    if (!chain_.contains_mode(m) || !chain_.contains_mode(n)) return 0.0;
    if (n == m + 1) return super_[chain_.position(m)];
    if (n == m - 1) return -super_[chain_.position(n)];
    return 0.0;
}

Eigen::MatrixXd GeneratorMatrix::dense() const {
    const int size = chain_.mode_count();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
    for (int p = 0; p + 1 < size; ++p) {
        m(p, p + 1) = super_[p];
        m(p + 1, p) = -super_[p];
    }
    return m;
}

GeneratorMatrix build_generator(const ChainConfig& chain) { return GeneratorMatrix(chain); }

Propagator::Propagator(const GeneratorMatrix& generator) : chain_(generator.chain()) {
    const int size = chain_.mode_count();
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(size);
    Eigen::VectorXd sub(size - 1);
    for (int p = 0; p + 1 < size; ++p) sub(p) = -generator.superdiagonal()[p];

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition of the generator failed");
    }
    eps_ = solver.eigenvalues();
    modes_ = solver.eigenvectors();
}

Eigen::MatrixXd Propagator::block(double t, std::span<const MajoranaIndex> rows,
                                  std::span<const MajoranaIndex> cols) const {
    if (t < 0) throw ConfigError("propagation time must be >= 0");
    if (t == 0.0) {
        // U(0) = 1 exactly; the spectral sum would leave round-off of order 1e-15.
        Eigen::MatrixXd u = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                                  static_cast<Eigen::Index>(cols.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) u(i, j) = rows[i] == cols[j] ? 1.0 : 0.0;
        }
        return u;
    }
    const Eigen::Index n_modes = eps_.size();
    Eigen::MatrixXd wr(static_cast<Eigen::Index>(rows.size()), n_modes);
    Eigen::MatrixXd wc(static_cast<Eigen::Index>(cols.size()), n_modes);
    for (std::size_t i = 0; i < rows.size(); ++i) wr.row(i) = modes_.row(chain_.position(rows[i]));
    for (std::size_t j = 0; j < cols.size(); ++j) wc.row(j) = modes_.row(chain_.position(cols[j]));

    const Eigen::VectorXd c = (eps_ * t).array().cos();
    const Eigen::VectorXd s = (eps_ * t).array().sin();
    const Eigen::MatrixXd cos_part = wr * c.asDiagonal() * wc.transpose();
    const Eigen::MatrixXd sin_part = wr * s.asDiagonal() * wc.transpose();

    // U_{mn} = Re[i^(m-n) (C - iS)_{mn}]
    Eigen::MatrixXd u(cos_part.rows(), cos_part.cols());
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            switch (((rows[i] - cols[j]) % 4 + 4) % 4) {
                case 0: u(i, j) = cos_part(i, j); break;
                case 1: u(i, j) = sin_part(i, j); break;
                case 2: u(i, j) = -cos_part(i, j); break;
                default: u(i, j) = -sin_part(i, j); break;
            }
        }
    }
    return u;
}

PropagatorMatrix Propagator::propagate(double t) const {
    std::vector<MajoranaIndex> all;
    for (MajoranaIndex b = chain_.first_mode(); b <= chain_.last_mode(); ++b) all.push_back(b);
    return {chain_, t, block(t, all, all)};
}

PropagatorMatrix propagate(const GeneratorMatrix& generator, double t) {
    return Propagator(generator).propagate(t);
}

namespace {

void check_window(const ChainConfig& chain, const IndexWindow& window) {
    if (window.size() == 0 || !chain.contains_mode(window.first) || !chain.contains_mode(window.last)) {
        throw RangeError("correlation window {" + std::to_string(window.first) + ".." +
                         std::to_string(window.last) + "} is empty or outside the chain");
    }
}

std::vector<MajoranaIndex> window_modes(const IndexWindow& window) {
    std::vector<MajoranaIndex> out;
    for (MajoranaIndex b = window.first; b <= window.last; ++b) out.push_back(b);
    return out;
}

// sign * A A^T (+ identity when add_identity), symmetric by construction.
Eigen::MatrixXd gram(const Eigen::MatrixXd& a, double sign, bool add_identity) {
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(n, n);
    if (add_identity) lower.diagonal().setOnes();
    if (a.cols() > 0) lower.selfadjointView<Eigen::Lower>().rankUpdate(a, sign);
    return lower.selfadjointView<Eigen::Lower>();
}

}  // namespace

CorrelationMatrix correlation_matrix_finite(const PropagatorMatrix& u, const OccupationProfile& occ,
                                            const IndexWindow& window) {
    check_window(u.chain, window);
    const auto occupied = occ.occupied_modes(u.chain);
    Eigen::MatrixXd a(window.size(), static_cast<Eigen::Index>(occupied.size()));
    for (int i = 0; i < window.size(); ++i) {
        for (std::size_t j = 0; j < occupied.size(); ++j) a(i, j) = u(window.first + i, occupied[j]);
    }
    return {u.time, window, gram(a, 1.0, false)};
}

CorrelationMatrix correlation_matrix_finite(const Propagator& propagator, double t,
                                            const OccupationProfile& occ, const IndexWindow& window) {
    const ChainConfig& chain = propagator.chain();
    check_window(chain, window);
    const auto rows = window_modes(window);
    const auto occupied = occ.occupied_modes(chain);
    std::vector<MajoranaIndex> empty;
    for (MajoranaIndex b = chain.first_mode(); b <= chain.last_mode(); ++b) {
        if (!occ(b)) empty.push_back(b);
    }

    // U is orthogonal, so sum over occupied = identity - sum over empty.
    if (occupied.size() <= empty.size()) {
        return {t, window, gram(propagator.block(t, rows, occupied), 1.0, false)};
    }
    return {t, window, gram(propagator.block(t, rows, empty), -1.0, true)};
}

}  // namespace osee
