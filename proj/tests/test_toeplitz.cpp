#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "osee/bessel.hpp"
#include "osee/entropy.hpp"
#include "osee/errors.hpp"
#include "osee/growth.hpp"
#include "osee/toeplitz.hpp"

using namespace osee;

TEST_CASE("t = 0 is a signed identity") {
    const int blocks = minimum_blocks(0.0);
    const auto psi = build_psi(0.0, blocks);
    const Eigen::Index n = psi.psi.rows();
    CHECK(n == 2 * blocks);
    for (Eigen::Index m = 0; m < n; ++m) {
        for (Eigen::Index k = 0; k < n; ++k) CHECK(psi.psi(m, k) == (m == k ? (m % 2 == 0 ? 1.0 : -1.0) : 0.0));
    }
    CHECK(spectral_entropy_psi(psi) == 0.0);
    const auto census = eigen_census(psi, 0.2);
    CHECK(census.near_minus_one == blocks);
    CHECK(census.near_plus_one == blocks);
    CHECK(census.near_zero == 0);
    CHECK(census.outside == 0);
    CHECK(census.n_eps == 0);
}

TEST_CASE("block structure and symmetry") {
    for (double t : {1.0, 5.0, 10.0}) {
        const auto psi = build_psi(t, minimum_blocks(t));
        CHECK((psi.psi - psi.psi.transpose()).cwiseAbs().maxCoeff() == 0.0);
        const auto j = bessel_row(4.0 * t, -5, 5);
        // Pi_l = [[J_2l, J_2l+1], [-J_2l-1, -J_2l]] sits at block row m, block column m + l.
        const int m = 6;
        for (int l = -2; l <= 2; ++l) {
            const int r = 2 * m, c = 2 * (m + l);
            CHECK(psi.psi(r, c) == doctest::Approx(j(2 * l)).epsilon(1e-14));
            CHECK(psi.psi(r, c + 1) == doctest::Approx(j(2 * l + 1)).epsilon(1e-14));
            CHECK(psi.psi(r + 1, c) == doctest::Approx(-j(2 * l - 1)).epsilon(1e-14));
            CHECK(psi.psi(r + 1, c + 1) == doctest::Approx(-j(2 * l)).epsilon(1e-14));
        }
    }
}

TEST_CASE("psi squared reproduces the reflected correlation matrix in the interior") {
    const TruncationPolicy p;
    for (double t : {1.0, 4.0, 9.0}) {
        const int blocks = 2 * minimum_blocks(t, p);
        const auto psi = build_psi(t, blocks, p);
        const Eigen::MatrixXd sq = psi.psi * psi.psi;
        const auto g = correlation_matrix_tl(occupation_profile(OperatorSpec::infinite({})), t, p, 2 * blocks);
        const Eigen::MatrixXd gp = reflect_window(g);
        const int interior = 2 * blocks - static_cast<int>(std::ceil(4.0 * t)) - p.pad(4.0 * t);
        double worst = 0.0;
        for (int m = 0; m < interior; ++m) {
            for (int n = 0; n < interior; ++n) worst = std::max(worst, std::abs(sq(m, n) - gp(m, n)));
        }
        CAPTURE(t);
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("spectral entropy matches the correlation route") {
    for (double t : {0.0, 2.0, 5.0, 10.0}) {
        const double a = spectral_entropy_psi(build_psi(t, minimum_blocks(t)));
        const double b = entropy_from_correlation(reflect_window(
            correlation_matrix_tl(occupation_profile(OperatorSpec::infinite({})), t)));
        CAPTURE(t);
        CHECK(std::abs(a - b) < 1e-4);
    }
}

TEST_CASE("spectrum bound, pairing and truncation convergence") {
    for (double t : {2.0, 6.0, 10.0}) {
        const int n = minimum_blocks(t);
        const auto psi = build_psi(t, n);
        const Eigen::VectorXd lambda = psi_spectrum(psi);
        CHECK(lambda.cwiseAbs().maxCoeff() <= 1.0 + 1e-6);
        const Eigen::Index size = lambda.size();
        const int mid = static_cast<int>(std::ceil(4.0 * t));
        for (Eigen::Index j = size / 2 - mid; j < size / 2 + mid; ++j) {
            CHECK(std::abs(lambda(j) + lambda(size - 1 - j)) < 1e-3);
        }
        const double s1 = spectral_entropy_from_eigenvalues(lambda);
        const double s2 = spectral_entropy_psi(build_psi(t, 2 * n));
        CAPTURE(t);
        CHECK(std::abs(s1 - s2) < 1e-6);
    }
}

TEST_CASE("census trends") {
    std::vector<EigenCensus> c;
    for (double t : {5.0, 10.0, 20.0, 40.0}) {
        c.push_back(eigen_census(build_psi(t, minimum_blocks(t))));
        CHECK(c.back().total() == 2 * minimum_blocks(t));
    }
    for (std::size_t k = 1; k < c.size(); ++k) CHECK(c[k].n_eps > c[k - 1].n_eps);
    // Doubling t should roughly double N_eps.
    for (std::size_t k = 1; k < c.size(); ++k) {
        const double ratio = static_cast<double>(c[k].n_eps) / c[k - 1].n_eps;
        CHECK(ratio > 1.5);
        CHECK(ratio < 2.5);
    }
    // The count outside all three neighbourhoods grows far slower than t.
    for (std::size_t k = 2; k < c.size(); ++k) {
        const int d1 = c[k - 1].outside - c[k - 2].outside;
        const int d2 = c[k].outside - c[k - 1].outside;
        CHECK(d2 <= std::max(1.2 * d1, 2.0));
    }
    CHECK(c.back().outside < c.back().n_eps / 4);
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(build_psi(5.0, minimum_blocks(5.0) - 1), ConfigError);
    CHECK_THROWS_AS(eigen_census(build_psi(0.0, 30), 0.5), ConfigError);
    CHECK_THROWS_AS(eigen_census(build_psi(0.0, 30), 0.0), ConfigError);
}

TEST_CASE("spectral route grows as ln t / 6") {
    std::vector<double> times, entropies;
    for (double t = 5.0; t <= 60.0; t += 2.5) {
        times.push_back(t);
        entropies.push_back(spectral_entropy_psi(build_psi(t, minimum_blocks(t))));
    }
    const auto fit = fit_log_growth(times, entropies, 5.0, 60.0);
    CHECK(std::abs(fit.slope - 1.0 / 6.0) / (1.0 / 6.0) < 0.15);
}
