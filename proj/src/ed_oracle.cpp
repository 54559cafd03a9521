#include "osee/ed_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <bit>
#include <cmath>
#include <string>

#include "osee/errors.hpp"
#include "osee/finite_propagator.hpp"

namespace osee::ed {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

void check_size(const ChainConfig& chain, int limit) {
    if (chain.site_count() > limit) {
        throw ConfigError("exact diagonalization limited to 2L <= " + std::to_string(limit) + ", got " +
                          std::to_string(chain.site_count()));
    }
}

std::size_t pow4(int n) { return std::size_t{1} << (2 * n); }

int mode_site(MajoranaIndex b) { return (b % 2 != 0) ? (b + 1) / 2 : b / 2; }

PauliString identity_string(int sites) { return {std::vector<int>(static_cast<std::size_t>(sites), 0), 0}; }

}  // namespace

PauliString PauliString::operator*(const PauliString& rhs) const {
    PauliString out{letters, phase + rhs.phase};
    for (std::size_t q = 0; q < letters.size(); ++q) {
        const int a = letters[q];
        const int b = rhs.letters[q];
        if (a == 0) {
            out.letters[q] = b;
        } else if (b == 0 || a == b) {
            out.letters[q] = (a == b) ? 0 : a;
        } else {
            // sigma^a sigma^b = i eps_abc sigma^c
            out.letters[q] = 6 - a - b;
            out.phase += ((b - a + 3) % 3 == 1) ? 1 : 3;
        }
    }
    out.phase %= 4;
    return out;
}

PauliString majorana_pauli_string(int sites, int first_site, MajoranaIndex b) {
    PauliString p = identity_string(sites);
    const int q = mode_site(b) - first_site;
    if (q < 0 || q >= sites) throw RangeError("Majorana index " + std::to_string(b) + " outside the chain");
    for (int k = 0; k < q; ++k) p.letters[k] = 3;
    p.letters[q] = (b % 2 != 0) ? 1 : 2;
    return p;
}

DenseOperator to_dense(const PauliString& p) {
    const int n = static_cast<int>(p.letters.size());
    const std::size_t dim = std::size_t{1} << n;
    std::size_t flip_mask = 0;
    for (int q = 0; q < n; ++q) {
        if (p.letters[q] == 1 || p.letters[q] == 2) flip_mask |= std::size_t{1} << (n - 1 - q);
    }
    DenseOperator out{n, Eigen::MatrixXcd::Zero(dim, dim)};
    const Complex global = i_power(p.phase);
    for (std::size_t col = 0; col < dim; ++col) {
        Complex amp = global;
        for (int q = 0; q < n; ++q) {
            const bool bit = (col >> (n - 1 - q)) & 1U;
            switch (p.letters[q]) {
                case 2: amp *= bit ? -kI : kI; break;
                case 3: if (bit) amp = -amp; break;
                default: break;
            }
        }
        out.m(col ^ flip_mask, col) = amp;
    }
    return out;
}

DenseOperator build_hamiltonian(const ChainConfig& chain) {
    check_size(chain, kMaxSites);
    const int n = chain.site_count();
    const std::size_t dim = std::size_t{1} << n;
    DenseOperator h{n, Eigen::MatrixXcd::Zero(dim, dim)};
    for (int q = 0; q < n; ++q) {
        PauliString field = identity_string(n);
        field.letters[q] = 3;
        h.m += chain.field * to_dense(field).m;
        if (q + 1 < n) {
            PauliString bond = identity_string(n);
            bond.letters[q] = 1;
            bond.letters[q + 1] = 1;
            h.m += to_dense(bond).m;
        }
    }
    return h;
}

DenseOperator pauli_operator(const ChainConfig& chain, const std::vector<PauliFactor>& factors) {
    check_size(chain, kMaxSites);
    PauliString p = identity_string(chain.site_count());
    for (const auto& f : factors) {
        if (!chain.contains_site(f.site)) throw RangeError("site " + std::to_string(f.site) + " outside the chain");
        PauliString one = identity_string(chain.site_count());
        one.letters[f.site - chain.first_site()] =
            f.letter == PauliLetter::X ? 1 : (f.letter == PauliLetter::Y ? 2 : 3);
        p = p * one;
    }
    return to_dense(p);
}

DenseOperator majorana_operator(const ChainConfig& chain, const std::vector<MajoranaIndex>& modes) {
    check_size(chain, kMaxSites);
    PauliString p = identity_string(chain.site_count());
    for (MajoranaIndex b : modes) p = p * majorana_pauli_string(chain.site_count(), chain.first_site(), b);
    return to_dense(p);
}

DenseOperator operator_from_text(std::string_view text, const ChainConfig& chain) {
    if (auto factors = parse_pauli_form(text)) return pauli_operator(chain, *factors);
    const OperatorSpec spec = parse_operator_spec(text, chain);
    return majorana_operator(chain, occupation_profile(spec).occupied_modes(chain));
}

Complex hs_inner(const DenseOperator& a, const DenseOperator& b) {
    return a.m.conjugate().cwiseProduct(b.m).sum() / static_cast<double>(a.m.rows());
}

HeisenbergEvolver::HeisenbergEvolver(const DenseOperator& hamiltonian) : sites_(hamiltonian.sites) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian.m);
    if (solver.info() != Eigen::Success) throw NumericalError("Hamiltonian eigendecomposition failed");
    energies_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
}

DenseOperator HeisenbergEvolver::evolve(const DenseOperator& a, double t) const {
    Eigen::MatrixXcd b = vectors_.adjoint() * a.m * vectors_;
    for (Eigen::Index l = 0; l < b.cols(); ++l) {
        for (Eigen::Index k = 0; k < b.rows(); ++k) {
            b(k, l) *= std::exp(kI * ((energies_(k) - energies_(l)) * t));
        }
    }
    return {sites_, vectors_ * b * vectors_.adjoint()};
}

DenseOperator heisenberg_evolve(const DenseOperator& a, const DenseOperator& hamiltonian, double t) {
    return HeisenbergEvolver(hamiltonian).evolve(a, t);
}

std::vector<Complex> pauli_coefficients(const DenseOperator& a) {
    const int n = a.sites;
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> coeff(pow4(n));
    // Interleave row and column bits: site digit = 2 r_q + c_q.
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            std::size_t idx = 0;
            for (int q = 0; q < n; ++q) {
                const std::size_t shift = static_cast<std::size_t>(n - 1 - q);
                idx = idx * 4 + 2 * ((r >> shift) & 1U) + ((c >> shift) & 1U);
            }
            coeff[idx] = a.m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    // Per site, (A00, A01, A10, A11) -> coefficients of (1, x, y, z).
    for (int q = 0; q < n; ++q) {
        const std::size_t stride = pow4(n - 1 - q);
        for (std::size_t hi = 0; hi < pow4(q); ++hi) {
            for (std::size_t lo = 0; lo < stride; ++lo) {
                const std::size_t base = hi * 4 * stride + lo;
                const Complex a00 = coeff[base], a01 = coeff[base + stride];
                const Complex a10 = coeff[base + 2 * stride], a11 = coeff[base + 3 * stride];
                coeff[base] = 0.5 * (a00 + a11);
                coeff[base + stride] = 0.5 * (a01 + a10);
                coeff[base + 2 * stride] = 0.5 * kI * (a01 - a10);
                coeff[base + 3 * stride] = 0.5 * (a00 - a11);
            }
        }
    }
    return coeff;
}

std::vector<Complex> majorana_coefficients(const DenseOperator& a) {
    const int n = a.sites;
    const auto pauli = pauli_coefficients(a);
    const int first_site = 1 - n / 2;
    std::vector<PauliString> x_strings, y_strings;
    for (int q = 0; q < n; ++q) {
        x_strings.push_back(majorana_pauli_string(n, first_site, x_mode(first_site + q)));
        y_strings.push_back(majorana_pauli_string(n, first_site, y_mode(first_site + q)));
    }
    std::vector<Complex> out(pow4(n));
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        PauliString p = identity_string(n);
        for (int q = 0; q < n; ++q) {
            const auto digit = (idx >> (2 * (n - 1 - q))) & 3U;
            if (digit & 2U) p = p * x_strings[q];
            if (digit & 1U) p = p * y_strings[q];
        }
        std::size_t q_idx = 0;
        for (int letter : p.letters) q_idx = q_idx * 4 + static_cast<std::size_t>(letter);
        // P = i^k Q  =>  <P|A> = i^{-k} <Q|A>
        out[idx] = i_power(-p.phase) * pauli[q_idx];
    }
    return out;
}

std::vector<Complex> operator_coefficients(const DenseOperator& a, OperatorBasis basis) {
    return basis == OperatorBasis::Pauli ? pauli_coefficients(a) : majorana_coefficients(a);
}

double operator_entropy_ed(const DenseOperator& a, OperatorBasis basis) {
    if (a.sites % 2 != 0) throw ConfigError("operator entropy needs an even number of sites");
    const auto coeff = operator_coefficients(a, basis);
    double norm2 = 0.0;
    for (const auto& c : coeff) norm2 += std::norm(c);
    if (!(norm2 > 1e-300)) throw NumericalError("cannot normalise the zero operator");

    const auto side = static_cast<Eigen::Index>(pow4(a.sites / 2));
    using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMajor> schmidt(coeff.data(), side, side);
    // JacobiSVD rather than BDCSVD: the divide-and-conquer path loses the small
    // Schmidt values of some 16 x 16 cases at the 1e-5 level.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(schmidt);
    double s = 0.0;
    for (double sigma : svd.singularValues()) {
        const double p = sigma * sigma / norm2;
        if (p > 0.0) s -= p * std::log(p);
    }
    return s;
}

std::vector<double> index_weights(const DenseOperator& a) {
    const auto coeff = majorana_coefficients(a);
    std::vector<double> weights(static_cast<std::size_t>(2 * a.sites) + 1, 0.0);
    for (std::size_t idx = 0; idx < coeff.size(); ++idx) {
        weights[static_cast<std::size_t>(std::popcount(idx))] += std::norm(coeff[idx]);
    }
    return weights;
}

GeneratorReport verify_generator(const ChainConfig& chain) {
    check_size(chain, kMaxGeneratorSites);
    const DenseOperator h = build_hamiltonian(chain);
    const GeneratorMatrix generator = build_generator(chain);
    const int modes = chain.mode_count();

    std::vector<DenseOperator> majoranas;
    for (MajoranaIndex b = chain.first_mode(); b <= chain.last_mode(); ++b) {
        majoranas.push_back(majorana_operator(chain, {b}));
    }

    GeneratorReport report{chain, Eigen::MatrixXd::Zero(modes, modes), {}, 0.0};
    for (int pb = 0; pb < modes; ++pb) {
        const MajoranaIndex b = chain.first_mode() + pb;
        DenseOperator commutator{h.sites, kI * (h.m * majoranas[pb].m - majoranas[pb].m * h.m)};
        DenseOperator rest = commutator;
        for (int pc = 0; pc < modes; ++pc) {
            const MajoranaIndex c = chain.first_mode() + pc;
            const Complex coef = hs_inner(majoranas[pc], commutator);
            report.ed(pb, pc) = coef.real();
            rest.m -= coef * majoranas[pc].m;
            const double expected = generator(c, b);
            if (std::abs(coef.real() - expected) > 1e-12 || std::abs(coef.imag()) > 1e-12) {
                report.mismatches.push_back({b, c, coef.real(), expected});
            }
        }
        report.residual = std::max(report.residual, std::sqrt(std::abs(hs_inner(rest, rest))));
    }
    return report;
}

}  // namespace osee::ed
