#pragma once

// Lattice and operator descriptions for the open transverse Ising chain.
//
// Sites are j = -L+1 .. L. Majorana modes use the staggered index
// b = 2j-1 for X_j and b = 2j for Y_j, so b runs over -2L+1 .. 2L.
// A basis operator is a Majorana string and is described only by which
// modes it occupies; overall phases are dropped.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace osee {

using MajoranaIndex = int;

struct ChainConfig {
    int half_length = 1;  // L
    double field = 1.0;   // h

    ChainConfig() = default;
    ChainConfig(int half_length, double field);

    int site_count() const { return 2 * half_length; }
    int first_site() const { return -half_length + 1; }
    int last_site() const { return half_length; }

    int mode_count() const { return 4 * half_length; }
    MajoranaIndex first_mode() const { return -2 * half_length + 1; }
    MajoranaIndex last_mode() const { return 2 * half_length; }
    bool contains_mode(MajoranaIndex b) const { return b >= first_mode() && b <= last_mode(); }
    bool contains_site(int j) const { return j >= first_site() && j <= last_site(); }

    /// Row/column position of mode b in 4L x 4L mode matrices.
    int position(MajoranaIndex b) const { return b - first_mode(); }
};

/// Finite lattice (a chain) or the thermodynamic limit (no chain).
using LatticeMode = std::optional<ChainConfig>;
inline const LatticeMode kThermodynamicLimit = std::nullopt;

constexpr MajoranaIndex x_mode(int site) { return 2 * site - 1; }
constexpr MajoranaIndex y_mode(int site) { return 2 * site; }

enum class IndexClass { Finite, Infinite };

/// A single Majorana basis string.
///
/// Finite: `flips` are the occupied modes. Infinite: `flips` are the modes
/// whose occupation differs from the Fermi sea F, which fills every b <= 0.
struct OperatorSpec {
    IndexClass kind = IndexClass::Finite;
    std::vector<MajoranaIndex> flips;  // sorted, unique

    static OperatorSpec finite(std::vector<MajoranaIndex> modes);
    static OperatorSpec infinite(std::vector<MajoranaIndex> flips);

    bool is_finite() const { return kind == IndexClass::Finite; }
    /// Number of Majorana factors K; only meaningful for finite specs.
    std::size_t index() const { return flips.size(); }

    friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;
};

class OccupationProfile {
public:
    OccupationProfile() = default;
    OccupationProfile(bool left_fill, std::vector<MajoranaIndex> flip_set);

    bool left_fill() const { return left_fill_; }
    const std::vector<MajoranaIndex>& flip_set() const { return flips_; }

    /// <n_b> for the basis string, 0 or 1.
    int operator()(MajoranaIndex b) const;

    /// Fermi-sea value before flips: 1 for b <= 0 when left_fill is set.
    int background(MajoranaIndex b) const { return (left_fill_ && b <= 0) ? 1 : 0; }

    /// Total occupation; only valid when left_fill is unset.
    std::size_t finite_total() const;

    /// Occupied modes restricted to a finite chain. The Fermi sea is truncated to
    /// b in {-2L+1..0}.
    std::vector<MajoranaIndex> occupied_modes(const ChainConfig& chain) const;

private:
    bool left_fill_ = false;
    std::vector<MajoranaIndex> flips_;
};

struct ParseOptions {
    /// Accept `F` on a finite chain, truncating the sea to the chain's left half.
    bool truncate_fermi_sea = true;
};

/// Parses the operator grammar:
///   `X1,Y1,X3`      finite-index Majorana string
///   `I`             identity
///   `F` / `F;X1`    Fermi sea, optionally with flipped modes
///   `pauli:z@1 x@2` product of Pauli matrices
OperatorSpec parse_operator_spec(std::string_view text, const LatticeMode& mode,
                                 const ParseOptions& options = {});

/// Canonical text form; parse_operator_spec(format_operator_spec(s)) == s.
std::string format_operator_spec(const OperatorSpec& spec);

enum class PauliLetter { X, Y, Z };

struct PauliFactor {
    int site;
    PauliLetter letter;
};

PauliLetter parse_pauli_letter(char c);

/// Factors of a `pauli:` operator string, or nullopt for the Majorana forms.
std::optional<std::vector<PauliFactor>> parse_pauli_form(std::string_view text);

/// Majorana occupation pattern of a product of Pauli matrices, phases dropped.
/// Factors compose by symmetric difference of occupations. On a finite chain
/// sigma^x/y strings start at b = -2L+1 and give a finite spec; in the
/// thermodynamic limit they give an infinite-index spec.
OperatorSpec pauli_to_majorana(const std::vector<PauliFactor>& factors, const LatticeMode& mode);

OccupationProfile occupation_profile(const OperatorSpec& spec);

/// Sorted symmetric difference of two sorted sets.
std::vector<MajoranaIndex> symmetric_difference(const std::vector<MajoranaIndex>& a,
                                                const std::vector<MajoranaIndex>& b);

}  // namespace osee
