#pragma once

// a-fermion Heisenberg dynamics on the open chain.
//
// The staggered modes obey w' = M w with
//   w'_{2j}   = 2 (w_{2j+1} - h w_{2j-1})
//   w'_{2j-1} = 2 (h w_{2j} - w_{2j-2})
// M is real, antisymmetric and tridiagonal in b, so U(t) = exp(M t) is real
// orthogonal. iM is brought to a real symmetric tridiagonal matrix T by the
// diagonal gauge diag(i^p), and one eigendecomposition of T serves every t.

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "osee/lattice.hpp"

namespace osee {

/// Inclusive range of staggered indices.
struct IndexWindow {
    MajoranaIndex first = 0;
    MajoranaIndex last = -1;

    int size() const { return last >= first ? last - first + 1 : 0; }
    bool contains(MajoranaIndex b) const { return b >= first && b <= last; }

    /// {-2L+1..0}: the modes of sites -L+1..0.
    static IndexWindow left_half(const ChainConfig& chain) { return {chain.first_mode(), 0}; }
    static IndexWindow full(const ChainConfig& chain) { return {chain.first_mode(), chain.last_mode()}; }
};

class GeneratorMatrix {
public:
    explicit GeneratorMatrix(const ChainConfig& chain);

    const ChainConfig& chain() const { return chain_; }

    /// M_{m,n}; zero outside the tridiagonal band or outside the chain.
    double operator()(MajoranaIndex m, MajoranaIndex n) const;

    /// M_{b,b+1} for b = first_mode .. last_mode-1.
    const std::vector<double>& superdiagonal() const { return super_; }

    Eigen::MatrixXd dense() const;

private:
    ChainConfig chain_;
    std::vector<double> super_;
};

GeneratorMatrix build_generator(const ChainConfig& chain);

/// w_m(t) = sum_n U_{mn}(t) w_n, rows and columns ordered by chain position.
struct PropagatorMatrix {
    ChainConfig chain;
    double time = 0.0;
    Eigen::MatrixXd u;

    double operator()(MajoranaIndex m, MajoranaIndex n) const {
        return u(chain.position(m), chain.position(n));
    }
};

struct CorrelationMatrix {
    double time = 0.0;
    IndexWindow window;
    Eigen::MatrixXd gamma;

    double operator()(MajoranaIndex m, MajoranaIndex n) const {
        return gamma(m - window.first, n - window.first);
    }
};

/// Cached spectral decomposition of a generator. Immutable and shareable.
class Propagator {
public:
    explicit Propagator(const GeneratorMatrix& generator);

    const ChainConfig& chain() const { return chain_; }
    const Eigen::VectorXd& frequencies() const { return eps_; }

    PropagatorMatrix propagate(double t) const;

    /// U(t) restricted to the given rows and columns (staggered indices).
    Eigen::MatrixXd block(double t, std::span<const MajoranaIndex> rows,
                          std::span<const MajoranaIndex> cols) const;

private:
    ChainConfig chain_;
    Eigen::VectorXd eps_;
    Eigen::MatrixXd modes_;  // eigenvectors of T, one per column
};

PropagatorMatrix propagate(const GeneratorMatrix& generator, double t);

/// Gamma_{mn} = sum_b U_{mb} U_{nb} occ(b) on the window.
CorrelationMatrix correlation_matrix_finite(const PropagatorMatrix& u, const OccupationProfile& occ,
                                            const IndexWindow& window);

/// Same as above but only forms the required block of U(t).
CorrelationMatrix correlation_matrix_finite(const Propagator& propagator, double t,
                                            const OccupationProfile& occ, const IndexWindow& window);

}  // namespace osee
