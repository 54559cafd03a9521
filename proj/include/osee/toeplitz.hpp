#pragma once

// Block-Toeplitz factor of the Fermi-sea correlation matrix at h = 1.
//
// With Gamma'_{mn} = Gamma_{-m,-n} (cut at index 0, sea on m >= 0),
// Gamma' = Psi^2 for the semi-infinite Psi_{mn} = (-1)^n J_{m-n}(4t), which is
// real symmetric with 2x2 blocks Pi_l = [[J_{2l}, J_{2l+1}], [-J_{2l-1}, -J_{2l}]].
//
// A square 2N x 2N truncation has a second edge at index 2N. Reflection about
// the middle maps Psi_N to -D Psi_N D with D = diag((-1)^m), so the two edges
// contribute identical spectra and the entropy of the cut at 0 is half of
// sum_j e(lambda_j^2) once 2N exceeds twice the light-cone width.

#include <Eigen/Dense>
#include <vector>

#include "osee/tl_propagator.hpp"

namespace osee {

struct PsiMatrix {
    double time = 0.0;
    int blocks = 0;  // N
    Eigen::MatrixXd psi;  // 2N x 2N
};

/// Smallest block count accepted by build_psi: ceil(4t) + pad(4t).
int minimum_blocks(double t, const TruncationPolicy& policy = {});

/// Throws ConfigError when blocks < minimum_blocks(t, policy).
PsiMatrix build_psi(double t, int blocks, const TruncationPolicy& policy = {});

/// Eigenvalues of Psi, ascending.
Eigen::VectorXd psi_spectrum(const PsiMatrix& psi);

/// Entropy of the cut at index 0: half the residue sum over both truncation edges.
double spectral_entropy_psi(const PsiMatrix& psi);
double spectral_entropy_from_eigenvalues(const Eigen::VectorXd& lambda);

struct EigenCensus {
    double time = 0.0;
    double radius = 0.0;  // epsilon
    int near_minus_one = 0;
    int near_zero = 0;
    int near_plus_one = 0;
    int outside = 0;  // in none of the three neighbourhoods
    int n_eps = 0;    // not within epsilon of +-1

    int total() const { return near_minus_one + near_zero + near_plus_one + outside; }
};

inline constexpr double kDefaultCensusRadius = 0.01;

EigenCensus eigen_census(const PsiMatrix& psi, double radius = kDefaultCensusRadius);
EigenCensus eigen_census(double t, const Eigen::VectorXd& lambda, double radius = kDefaultCensusRadius);

}  // namespace osee
