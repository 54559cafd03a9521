#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "osee/ed_oracle.hpp"
#include "osee/entropy.hpp"
#include "osee/errors.hpp"
#include "osee/finite_propagator.hpp"

using namespace osee;
using namespace osee::ed;

namespace {

Eigen::VectorXd energies(const DenseOperator& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

PauliString random_string(std::mt19937& rng, int sites) {
    std::uniform_int_distribution<int> letter(0, 3);
    PauliString p{std::vector<int>(static_cast<std::size_t>(sites)), 0};
    for (int& l : p.letters) l = letter(rng);
    return p;
}

double free_fermion_entropy(const std::string& op, const ChainConfig& chain, double t) {
    const Propagator prop(build_generator(chain));
    const auto occ = occupation_profile(parse_operator_spec(op, chain));
    return entropy_from_correlation(correlation_matrix_finite(prop, t, occ, IndexWindow::left_half(chain)));
}

}  // namespace

TEST_CASE("two-site spectra") {
    const auto e0 = energies(build_hamiltonian(ChainConfig(1, 0.0)));
    CHECK(e0(0) == doctest::Approx(-1.0));
    CHECK(e0(1) == doctest::Approx(-1.0));
    CHECK(e0(2) == doctest::Approx(1.0));
    CHECK(e0(3) == doctest::Approx(1.0));
    const auto e1 = energies(build_hamiltonian(ChainConfig(1, 1.0)));
    const double r5 = std::sqrt(5.0);
    CHECK(e1(0) == doctest::Approx(-r5).epsilon(1e-14));
    CHECK(e1(1) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e1(2) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e1(3) == doctest::Approx(r5).epsilon(1e-14));
    for (double h : {0.0, 0.3, 2.0}) CHECK(std::abs(build_hamiltonian(ChainConfig(2, h)).m.trace()) < 1e-14);
}

TEST_CASE("majorana algebra") {
    const ChainConfig chain(2, 1.0);
    for (MajoranaIndex a = chain.first_mode(); a <= chain.last_mode(); ++a) {
        const auto oa = majorana_operator(chain, {a});
        CHECK((oa.m - oa.m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        for (MajoranaIndex b = chain.first_mode(); b <= chain.last_mode(); ++b) {
            const auto ob = majorana_operator(chain, {b});
            const Eigen::MatrixXcd anti = oa.m * ob.m + ob.m * oa.m;
            const double expect = a == b ? 2.0 : 0.0;
            CHECK((anti - expect * Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-15);
        }
    }
    // X_n Y_n = i sigma^z_n
    const auto xy = majorana_operator(chain, {1, 2});
    const auto z = pauli_operator(chain, {{1, PauliLetter::Z}});
    CHECK((xy.m - Complex(0.0, 1.0) * z.m).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("heisenberg evolution") {
    const ChainConfig chain(2, 0.7);
    const auto h = build_hamiltonian(chain);
    const HeisenbergEvolver evolver(h);
    const auto a = pauli_operator(chain, {{0, PauliLetter::X}, {1, PauliLetter::Y}});
    CHECK((evolver.evolve(a, 0.0).m - a.m).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((evolver.evolve(h, 2.3).m - h.m).cwiseAbs().maxCoeff() < 1e-12);
    std::mt19937 rng(3);
    for (int k = 0; k < 5; ++k) {
        const auto p = to_dense(random_string(rng, chain.site_count()));
        for (double t : {0.3, 1.7}) {
            const auto at = evolver.evolve(p, t);
            CHECK(std::abs(hs_inner(at, at) - hs_inner(p, p)) < 1e-12);
            CHECK((at.m - heisenberg_evolve(p, h, t).m).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("coefficient expansions") {
    const ChainConfig chain(2, 1.0);
    const HeisenbergEvolver evolver(build_hamiltonian(chain));
    std::mt19937 rng(11);
    for (int k = 0; k < 4; ++k) {
        const auto a = evolver.evolve(to_dense(random_string(rng, 4)), 0.9);
        for (auto basis : {OperatorBasis::Pauli, OperatorBasis::Majorana}) {
            double norm = 0.0;
            for (const auto& c : operator_coefficients(a, basis)) norm += std::norm(c);
            CHECK(std::abs(norm - hs_inner(a, a).real()) < 1e-12);
        }
    }
    const auto z = pauli_operator(chain, {{1, PauliLetter::Z}});
    CHECK(operator_entropy_ed(z, OperatorBasis::Pauli) < 1e-14);
    CHECK(operator_entropy_ed(z, OperatorBasis::Majorana) < 1e-14);
    CHECK_THROWS_AS(operator_entropy_ed(DenseOperator{4, Eigen::MatrixXcd::Zero(16, 16)}, OperatorBasis::Pauli),
                    NumericalError);
}

TEST_CASE("evolution conserves the Majorana index") {
    const ChainConfig chain(2, 0.7);
    const HeisenbergEvolver evolver(build_hamiltonian(chain));
    for (const std::vector<MajoranaIndex>& modes : {std::vector<MajoranaIndex>{1}, {-1, 2}, {-3, 0, 1}}) {
        const auto w = index_weights(evolver.evolve(majorana_operator(chain, modes), 1.3));
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k != modes.size()) CHECK(w[k] < 1e-20);
        }
        CHECK(w[modes.size()] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("generator check") {
    for (double h : {0.0, 0.7, 1.0}) {
        const auto report = verify_generator(ChainConfig(2, h));
        CHECK(report.passed());
    }
    const auto report = verify_generator(ChainConfig(2, 0.0));
    const ChainConfig& c = report.chain;
    // At h = 0, i[H, X_n] couples only to Y_{n-1}.
    for (int n = c.first_site() + 1; n <= c.last_site(); ++n) {
        const int row = c.position(x_mode(n));
        for (MajoranaIndex b = c.first_mode(); b <= c.last_mode(); ++b) {
            const double v = report.ed(row, c.position(b));
            CHECK(v == (b == y_mode(n - 1) ? 2.0 : 0.0));
        }
    }
    // Open boundary: nothing to the left of the first site.
    const auto open = verify_generator(ChainConfig(2, 0.7));
    const int first = c.position(x_mode(c.first_site()));
    CHECK(open.ed.row(first).cwiseAbs().sum() == doctest::Approx(1.4));
    CHECK_THROWS_AS(verify_generator(ChainConfig(4, 1.0)), ConfigError);
}

TEST_CASE("basis independence of the entropy") {
    for (int half : {2, 3}) {
        const ChainConfig chain(half, 0.9);
        const HeisenbergEvolver evolver(build_hamiltonian(chain));
        std::mt19937 rng(100 + half);
        for (int k = 0; k < 6; ++k) {
            const auto a = evolver.evolve(to_dense(random_string(rng, chain.site_count())), 0.4 + k * 0.5);
            const double sp = operator_entropy_ed(a, OperatorBasis::Majorana);
            const double sq = operator_entropy_ed(a, OperatorBasis::Pauli);
            CHECK(std::abs(sp - sq) < 1e-12);
        }
    }
}

TEST_CASE("free-fermion equivalence") {
    for (double h : {0.7, 1.0}) {
        const ChainConfig chain(3, h);
        const HeisenbergEvolver evolver(build_hamiltonian(chain));
        for (const char* op : {"X1", "pauli:z@1", "pauli:x@1", "X0,Y2", "pauli:y@0 z@2"}) {
            const auto a = operator_from_text(op, chain);
            for (double t : {0.3, 1.0, 2.7}) {
                const double s_ed = operator_entropy_ed(evolver.evolve(a, t), OperatorBasis::Pauli);
                CAPTURE(op);
                CAPTURE(t);
                CHECK(std::abs(s_ed - free_fermion_entropy(op, chain, t)) < 1e-8);
            }
        }
    }
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(build_hamiltonian(ChainConfig(5, 1.0)), ConfigError);
}
