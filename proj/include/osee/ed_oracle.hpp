#pragma once

// Brute-force reference for small chains (2L <= 8).
//
// Operators are dense 2^{2L} x 2^{2L} matrices; site j = -L+1 is the most
// significant qubit. The Hamiltonian is written in the frame where the
// Jordan-Wigner strings run over sigma^z:
//   H = sum_j sigma^x_j sigma^x_{j+1} + h sum_j sigma^z_j,
// which is the transverse Ising chain with coupling along x and field along z.
// In this frame X_j Y_j = i sigma^z_j and the Majorana equations of motion are
//   dX_n/dt = 2 (Y_{n-1} - h Y_n),  dY_n/dt = -2 (X_{n+1} - h X_n).
//
// Operator-space entropy: expand A in a product basis of 4^{2L} strings, one
// base-4 digit per site (site -L+1 most significant), reshape the coefficients
// into a 4^L x 4^L matrix across the cut between sites 0 and 1 and take the
// Schmidt spectrum.

#include <Eigen/Dense>
#include <complex>
#include <string_view>
#include <vector>

#include "osee/lattice.hpp"

namespace osee::ed {

inline constexpr int kMaxSites = 8;
inline constexpr int kMaxGeneratorSites = 6;

using Complex = std::complex<double>;

struct DenseOperator {
    int sites = 0;
    Eigen::MatrixXcd m;
};

/// A product of single-site Paulis with a phase i^phase. Letters: 0 = 1, 1 = x, 2 = y, 3 = z.
struct PauliString {
    std::vector<int> letters;
    int phase = 0;

    PauliString operator*(const PauliString& rhs) const;
};

PauliString majorana_pauli_string(int sites, int first_site, MajoranaIndex b);

DenseOperator to_dense(const PauliString& p);

DenseOperator build_hamiltonian(const ChainConfig& chain);

DenseOperator pauli_operator(const ChainConfig& chain, const std::vector<PauliFactor>& factors);

/// Product of Majoranas O_b in increasing b.
DenseOperator majorana_operator(const ChainConfig& chain, const std::vector<MajoranaIndex>& modes);

/// Operator string in the CLI grammar. Pauli forms are built from Pauli
/// matrices directly; Majorana and Fermi-sea forms from Majorana products.
DenseOperator operator_from_text(std::string_view text, const ChainConfig& chain);

/// <A|B> = 2^{-2L} tr(A^dagger B).
Complex hs_inner(const DenseOperator& a, const DenseOperator& b);

/// Heisenberg evolution A(t) = e^{iHt} A e^{-iHt} from one eigendecomposition of H.
class HeisenbergEvolver {
public:
    explicit HeisenbergEvolver(const DenseOperator& hamiltonian);
    DenseOperator evolve(const DenseOperator& a, double t) const;

private:
    int sites_;
    Eigen::VectorXd energies_;
    Eigen::MatrixXcd vectors_;
};

DenseOperator heisenberg_evolve(const DenseOperator& a, const DenseOperator& hamiltonian, double t);

enum class OperatorBasis {
    Majorana,  // P strings X^{n} Y^{n'} per site; digit 2n + n'
    Pauli,     // Q strings; digit 0, x, y, z
};

std::vector<Complex> pauli_coefficients(const DenseOperator& a);
std::vector<Complex> majorana_coefficients(const DenseOperator& a);
std::vector<Complex> operator_coefficients(const DenseOperator& a, OperatorBasis basis);

/// Operator-space entanglement entropy across the middle cut (nats).
/// A is normalised internally; a zero operator throws NumericalError.
double operator_entropy_ed(const DenseOperator& a, OperatorBasis basis);

/// Squared weight of A on Majorana strings of each index 0..4L.
std::vector<double> index_weights(const DenseOperator& a);

struct GeneratorMismatch {
    MajoranaIndex row;
    MajoranaIndex col;
    double ed;
    double expected;
};

struct GeneratorReport {
    ChainConfig chain;
    /// ed(b, c): coefficient of O_c in i[H, O_b].
    Eigen::MatrixXd ed;
    std::vector<GeneratorMismatch> mismatches;
    /// Norm of the part of i[H, O_b] outside single Majoranas, max over b.
    double residual = 0.0;

    bool passed() const { return mismatches.empty() && residual < 1e-12; }
};

/// Compares i[H, O_b] with the rows of M^T = -M (the Majorana strings evolve
/// with the transpose of the a-fermion Heisenberg generator M).
GeneratorReport verify_generator(const ChainConfig& chain);

}  // namespace osee::ed
