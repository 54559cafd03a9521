#include "osee/toeplitz.hpp"

#include <cmath>
#include <string>

#include "osee/bessel.hpp"
#include "osee/entropy.hpp"
#include "osee/errors.hpp"

namespace osee {

int minimum_blocks(double t, const TruncationPolicy& policy) { return policy.window(t); }

PsiMatrix build_psi(double t, int blocks, const TruncationPolicy& policy) {
    if (!(t >= 0.0)) throw ConfigError("time must be >= 0");
    const int needed = minimum_blocks(t, policy);
    if (blocks < needed) {
        throw ConfigError("Psi truncation of " + std::to_string(blocks) + " blocks is below the minimum " +
                          std::to_string(needed) + " at t = " + std::to_string(t));
    }
    const int size = 2 * blocks;
    const BesselTable table = bessel_row(4.0 * t, -(size - 1), size - 1);
    PsiMatrix out{t, blocks, Eigen::MatrixXd(size, size)};
    for (int n = 0; n < size; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        for (int m = 0; m < size; ++m) out.psi(m, n) = sign * table(m - n);
    }
    return out;
}

Eigen::VectorXd psi_spectrum(const PsiMatrix& psi) { return symmetric_spectrum(psi.psi); }

double spectral_entropy_from_eigenvalues(const Eigen::VectorXd& lambda) {
    double s = 0.0;
    for (double l : lambda) {
        if (std::abs(l) > 1.0 + kSpectrumTolerance) {
            throw NumericalError("Psi eigenvalue " + std::to_string(l) + " outside [-1, 1]");
        }
        s += binary_entropy(std::min(1.0, l * l));
    }
    return 0.5 * s;
}

double spectral_entropy_psi(const PsiMatrix& psi) { return spectral_entropy_from_eigenvalues(psi_spectrum(psi)); }

EigenCensus eigen_census(double t, const Eigen::VectorXd& lambda, double radius) {
    if (!(radius > 0.0 && radius < 0.5)) throw ConfigError("census radius must lie in (0, 1/2)");
    EigenCensus c{t, radius};
    for (double l : lambda) {
        if (std::abs(l + 1.0) < radius) ++c.near_minus_one;
        else if (std::abs(l - 1.0) < radius) ++c.near_plus_one;
        else if (std::abs(l) < radius) ++c.near_zero;
        else ++c.outside;
    }
    c.n_eps = static_cast<int>(lambda.size()) - c.near_minus_one - c.near_plus_one;
    return c;
}

EigenCensus eigen_census(const PsiMatrix& psi, double radius) {
    return eigen_census(psi.time, psi_spectrum(psi), radius);
}

}  // namespace osee
