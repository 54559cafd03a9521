#include <doctest.h>

#include <cmath>
#include <numbers>

#include "osee/entropy.hpp"
#include "osee/errors.hpp"

using namespace osee;

// e(1/2 + 1/pi) and 2 e(1/2 + 1/pi), evaluated to 30 digits with mpmath.
constexpr double kSingleTwoIndexTerm = 0.47394663373377752;
constexpr double kTwoIndexSaturation = 0.94789326746755504;

TEST_CASE("binary entropy values") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
    CHECK(binary_entropy(0.5 + 1.0 / std::numbers::pi) == doctest::Approx(kSingleTwoIndexTerm).epsilon(1e-14));
    CHECK(binary_entropy(-5e-10) == 0.0);
    CHECK(binary_entropy(1.0 + 5e-10) == 0.0);
    CHECK_THROWS_AS(binary_entropy(-1e-8), NumericalError);
    CHECK_THROWS_AS(binary_entropy(1.5), NumericalError);
    CHECK_THROWS_AS(binary_entropy(std::nan("")), NumericalError);
}

TEST_CASE("binary entropy symmetry and maximum") {
    for (double x = 0.01; x < 1.0; x += 0.0137) {
        CHECK(binary_entropy(x) == doctest::Approx(binary_entropy(1.0 - x)).epsilon(1e-13));
        CHECK(binary_entropy(x) <= std::numbers::ln2 + 1e-15);
    }
}

TEST_CASE("entropy from correlation matrices") {
    CHECK(entropy_from_correlation(Eigen::MatrixXd::Zero(5, 5)) == 0.0);
    CHECK(entropy_from_correlation(Eigen::MatrixXd::Constant(1, 1, 0.5)) ==
          doctest::Approx(std::numbers::ln2).epsilon(1e-15));

    // Rotate diag(1/2 + 1/pi, 1/2 - 1/pi) so the spectrum is not read off a diagonal.
    const double g = 1.0 / std::numbers::pi;
    Eigen::Matrix2d d;
    d << 0.5 + g, 0.0, 0.0, 0.5 - g;
    const double c = std::cos(0.3), s = std::sin(0.3);
    Eigen::Matrix2d r;
    r << c, -s, s, c;
    const Eigen::MatrixXd gamma = r * d * r.transpose();
    CHECK(entropy_from_correlation(gamma) == doctest::Approx(kTwoIndexSaturation).epsilon(1e-13));

    Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
    asym(0, 1) = 1e-6;
    CHECK_THROWS_AS(entropy_from_correlation(asym), NumericalError);
    CHECK_THROWS_AS(entropy_from_correlation(Eigen::MatrixXd::Identity(2, 2) * 1.1), NumericalError);
}

TEST_CASE("clamping only absorbs round-off") {
    const double raw[] = {-1e-12, 0.25, 1.0 + 1e-12};
    CHECK(entropy_from_spectrum(raw) == doctest::Approx(binary_entropy(0.25)).epsilon(1e-15));
    const double bad[] = {0.3, -2e-6};
    CHECK_THROWS_AS(entropy_from_spectrum(bad), NumericalError);
}

TEST_CASE("identity operator has zero entropy on every engine") {
    const auto times = uniform_time_grid(20.0, 2.5);
    const auto spec = OperatorSpec::finite({});
    for (double s : entropy_series(spec, FiniteEngine{ChainConfig(20, 0.8)}, times).entropies) CHECK(s == 0.0);
    for (double s : entropy_series(spec, TlEngine{}, times).entropies) CHECK(s == 0.0);
}

TEST_CASE("finite and tl engines agree inside the light cone") {
    const std::vector<double> times{0.0, 1.0, 4.0, 9.5, 15.0, 25.0};
    for (const char* op : {"X1", "X1,Y1", "F", "F;Y1"}) {
        const auto spec_tl = parse_operator_spec(op, kThermodynamicLimit);
        const ChainConfig chain(200, 1.0);
        const auto spec_finite = parse_operator_spec(op, chain);
        const auto a = entropy_series(spec_finite, FiniteEngine{chain}, times);
        const auto b = entropy_series(spec_tl, TlEngine{}, times);
        for (std::size_t i = 0; i < times.size(); ++i) {
            CAPTURE(op);
            CAPTURE(times[i]);
            CHECK(std::abs(a.entropies[i] - b.entropies[i]) < 1e-6);
        }
    }
}

TEST_CASE("series bookkeeping") {
    const std::vector<double> times{0.0, 1.0, 2.0, 3.0};
    const auto spec = OperatorSpec::finite({1});
    const auto serial = entropy_series(spec, FiniteEngine{ChainConfig(10, 1.0)}, times, 1);
    const auto threaded = entropy_series(spec, FiniteEngine{ChainConfig(10, 1.0)}, times, 3);
    CHECK(serial.entropies == threaded.entropies);
    CHECK(serial.times == times);
    CHECK(serial.provenance.engine == Engine::Finite);
    CHECK(serial.provenance.spec == "X1");
    for (double s : serial.entropies) CHECK(s >= 0.0);

    const std::vector<double> unordered{1.0, 0.5};
    CHECK_THROWS_AS(entropy_series(spec, TlEngine{}, unordered), ConfigError);
    const std::vector<double> negative{-1.0};
    CHECK_THROWS_AS(entropy_series(spec, TlEngine{}, negative), ConfigError);
    CHECK_THROWS_AS(entropy_series(spec, TlEngine{{}, 0.5}, times), ConfigError);
    CHECK(uniform_time_grid(1.0, 0.25).size() == 5);
    CHECK(uniform_time_grid(0.0, 0.25) == std::vector<double>{0.0});
    CHECK_THROWS_AS(uniform_time_grid(1.0, 0.0), ConfigError);
}

TEST_CASE("dynamic saturation approaches the closed forms") {
    const std::vector<double> times{30.0, 40.0, 50.0};
    const ChainConfig chain(100, 1.0);
    for (double s : entropy_series(OperatorSpec::finite({1}), FiniteEngine{chain}, times).entropies) {
        CHECK(std::abs(s - std::numbers::ln2) < 1e-2);
    }
    for (double s : entropy_series(OperatorSpec::finite({1, 2}), FiniteEngine{chain}, times).entropies) {
        CHECK(std::abs(s - kTwoIndexSaturation) < 1e-2);
    }
}
