#pragma once

// Critical-field (h = 1) correlation matrices in the thermodynamic limit:
//   Gamma_{mn}(t) = sum_b J_{b-m}(4t) J_{b-n}(4t) <n_b>,   m, n <= 0.
// Gamma differs from the identity / zero only inside the light cone |b| <~ 4t,
// so windows and sums are truncated at 4t plus an Airy-scale pad.

#include "osee/finite_propagator.hpp"
#include "osee/lattice.hpp"

namespace osee {

struct TruncationPolicy {
    double pad_scale = 10.0;
    double pad_offset = 20.0;

    /// Orders retained beyond |n| = x.
    int pad(double x) const;
    /// Default correlation window size m_w(t) = ceil(4t) + pad(4t).
    int window(double t) const;

    TruncationPolicy doubled() const { return {2.0 * pad_scale, 2.0 * pad_offset}; }
};

enum class TlSummation {
    Auto,        // Complement for Fermi-sea profiles, Direct otherwise
    Direct,      // sum over occupied modes
    Complement,  // identity minus the sum over empty modes
};

/// Window size needed for `occ` at time t: the policy window, widened so every
/// flipped mode b <= 0 lies inside it.
int required_window(const OccupationProfile& occ, double t, const TruncationPolicy& policy);

/// Gamma(t) over m, n in {-window+1..0}. window = 0 selects required_window();
/// an explicit window smaller than that is refused.
CorrelationMatrix correlation_matrix_tl(const OccupationProfile& occ, double t,
                                        const TruncationPolicy& policy = {}, int window = 0,
                                        TlSummation summation = TlSummation::Auto);

/// Gamma'_{mn} = Gamma_{-m,-n} for m, n = 0..size-1 (window reflected so the
/// cut sits at index 0).
Eigen::MatrixXd reflect_window(const CorrelationMatrix& gamma);

/// Throws unless h == 1; the Bessel solution only holds at the critical field.
void require_critical_field(double h);

}  // namespace osee
