#include <doctest.h>

#include <cmath>

#include "osee/bessel.hpp"
#include "osee/entropy.hpp"
#include "osee/errors.hpp"
#include "osee/tl_propagator.hpp"

using namespace osee;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("truncation policy") {
    const TruncationPolicy p;
    CHECK(p.pad(0.0) == 30);
    CHECK(p.pad(8.0) == 40);
    CHECK(p.pad(1000.0) == 120);
    CHECK(p.window(2.0) == 8 + 40);
    const auto d = p.doubled();
    CHECK(d.pad(8.0) == 80);
    CHECK(required_window(occupation_profile(OperatorSpec::finite({-200})), 1.0, p) >= 201);
}

TEST_CASE("t = 0 fermi sea is the identity") {
    const auto g = correlation_matrix_tl(occupation_profile(OperatorSpec::infinite({})), 0.0);
    CHECK(max_abs(g.gamma - Eigen::MatrixXd::Identity(g.gamma.rows(), g.gamma.cols())) == 0.0);
    CHECK(entropy_from_correlation(g) == 0.0);
}

TEST_CASE("full occupation gives the identity") {
    // Occupy every mode a window of Bessel reach can see; Gamma must be 1.
    const double t = 3.0;
    const TruncationPolicy p;
    const int w = p.window(t);
    std::vector<MajoranaIndex> flips;
    for (MajoranaIndex b = 1; b <= w + 60; ++b) flips.push_back(b);
    const auto g = correlation_matrix_tl(occupation_profile(OperatorSpec::infinite(flips)), t, p, w);
    CHECK(max_abs(g.gamma - Eigen::MatrixXd::Identity(w, w)) < 1e-12);
}

TEST_CASE("single Majorana is rank one with the Bessel trace") {
    const double t = 4.0;
    const auto g = correlation_matrix_tl(occupation_profile(OperatorSpec::finite({1})), t);
    const auto row = bessel_row(4.0 * t, 0, 400);
    double trace = 0.0;
    for (int k = 1; k <= 400; ++k) trace += row(k) * row(k);  // m <= 0 gives order 1 - m >= 1
    CHECK(g.gamma.trace() == doctest::Approx(trace).epsilon(1e-12));
    const auto spectrum = symmetric_spectrum(g.gamma);
    CHECK(spectrum(spectrum.size() - 2) < 1e-12);
    CHECK(spectrum(spectrum.size() - 1) == doctest::Approx(trace).epsilon(1e-12));
}

TEST_CASE("direct and complement summation agree") {
    const TruncationPolicy p;
    for (const char* op : {"X1,Y-2,X4", "F;X1,Y-3", "F"}) {
        const auto occ = occupation_profile(parse_operator_spec(op, kThermodynamicLimit));
        for (double t : {0.5, 3.0, 11.0}) {
            const int w = required_window(occ, t, p);
            const auto direct = correlation_matrix_tl(occ, t, p, w, TlSummation::Direct);
            const auto complement = correlation_matrix_tl(occ, t, p, w, TlSummation::Complement);
            CAPTURE(op);
            CAPTURE(t);
            CHECK(max_abs(direct.gamma - complement.gamma) < 1e-10);
            CHECK(max_abs(direct.gamma - direct.gamma.transpose()) == 0.0);
        }
    }
}

TEST_CASE("window stability under a doubled pad") {
    const TruncationPolicy p;
    for (const char* op : {"X1", "X1,Y1", "F", "F;Y1"}) {
        const auto occ = occupation_profile(parse_operator_spec(op, kThermodynamicLimit));
        for (double t : {1.0, 10.0, 50.0}) {
            const double a = entropy_from_correlation(correlation_matrix_tl(occ, t, p));
            const double b = entropy_from_correlation(correlation_matrix_tl(occ, t, p.doubled()));
            CAPTURE(op);
            CAPTURE(t);
            CHECK(std::abs(a - b) < 1e-8);
        }
    }
}

TEST_CASE("spectrum within the unit interval") {
    for (const char* op : {"X1,Y1,X2", "F;X1", "F;Y0"}) {
        const auto occ = occupation_profile(parse_operator_spec(op, kThermodynamicLimit));
        const auto s = symmetric_spectrum(correlation_matrix_tl(occ, 7.5).gamma);
        CHECK(s.minCoeff() >= -1e-9);
        CHECK(s.maxCoeff() <= 1.0 + 1e-9);
    }
}

TEST_CASE("reflection and guards") {
    const auto g = correlation_matrix_tl(occupation_profile(OperatorSpec::infinite({})), 2.0);
    const Eigen::MatrixXd r = reflect_window(g);
    const int w = g.window.size();
    for (int m = 0; m < w; ++m) {
        for (int n = 0; n < w; ++n) CHECK(r(m, n) == g(-m, -n));
    }
    CHECK_THROWS_AS(correlation_matrix_tl(occupation_profile(OperatorSpec::finite({1})), 5.0, {}, 10),
                    ConfigError);
    CHECK_THROWS_AS(require_critical_field(0.5), ConfigError);
    CHECK_NOTHROW(require_critical_field(1.0));
}
