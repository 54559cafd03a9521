#pragma once

// Saturation spectra for finite-index operators A = O_{j1} ... O_{jK} at h = 1.
//
// In the thermodynamic limit Gamma = sum_k |psi_{jk}><psi_{jk}| with
// <m|psi_a> = J_{a-m}(4t) on m <= 0, so its nonzero spectrum is the spectrum of
// the K x K Gram matrix g_{ab} = <psi_a|psi_b> = sum_{k<=0} J_{k-a} J_{k-b}.
// As t -> infinity, g_{ab} -> delta_{ab}/2 - sin[pi(a-b)/2] / [pi(a-b)].

#include <Eigen/Dense>
#include <limits>
#include <utility>
#include <vector>

#include "osee/lattice.hpp"
#include "osee/tl_propagator.hpp"

namespace osee {

/// Pass as t to request the t -> infinity limit.
inline constexpr double kInfiniteTime = std::numeric_limits<double>::infinity();

/// Gram eigenvalues below this are reported as exact zeros.
inline constexpr double kRankThreshold = 1e-8;

struct OverlapMatrix {
    std::vector<MajoranaIndex> indices;
    double time = 0.0;  // kInfiniteTime for the asymptotic matrix
    Eigen::MatrixXd g;
};

/// <psi_a|psi_b> at time t, or its t -> infinity limit for t = kInfiniteTime.
double psi_overlap(MajoranaIndex a, MajoranaIndex b, double t, const TruncationPolicy& policy = {});

OverlapMatrix overlap_matrix(const std::vector<MajoranaIndex>& indices, double t,
                             const TruncationPolicy& policy = {});

/// The K nonzero-sector eigenvalues of Gamma, descending.
std::vector<double> saturation_spectrum(const std::vector<MajoranaIndex>& indices, double t,
                                        const TruncationPolicy& policy = {});

/// Gram-Schmidt route: orthonormalise the psi vectors using only their
/// overlaps and diagonalise Gamma~_{kl} = sum_j <phi_k|psi_j><psi_j|phi_l>.
/// Throws NumericalError when the psi set is numerically rank deficient.
std::vector<double> gram_schmidt_spectrum(const OverlapMatrix& overlaps);

double saturation_entropy(const std::vector<MajoranaIndex>& indices, double t,
                          const TruncationPolicy& policy = {});

/// Eigenvalues (larger first) of [[g11, g12], [g12, g22]].
std::pair<double, double> two_index_eigenvalues(double g11, double g22, double g12);

}  // namespace osee
