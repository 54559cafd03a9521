#include "osee/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <sstream>

#include "osee/errors.hpp"

namespace osee {

ChainConfig::ChainConfig(int half_length, double field) : half_length(half_length), field(field) {
    if (half_length < 1) {
        throw ConfigError("chain half-length L must be >= 1, got " + std::to_string(half_length));
    }
}

namespace {

std::vector<MajoranaIndex> sorted_unique(std::vector<MajoranaIndex> v) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw SemanticError("operator string lists the same Majorana mode twice");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view token) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw SyntaxError("malformed integer in token '" + std::string(token) + "'");
    }
    return value;
}

std::vector<MajoranaIndex> parse_majorana_list(std::string_view list) {
    std::vector<MajoranaIndex> modes;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        if (comma == std::string_view::npos) comma = list.size();
        std::string_view token = trim(list.substr(start, comma - start));
        if (token.size() < 2) {
            throw SyntaxError("malformed Majorana token '" + std::string(token) + "'");
        }
        int site = parse_int(token.substr(1), token);
        switch (token.front()) {
            case 'X': modes.push_back(x_mode(site)); break;
            case 'Y': modes.push_back(y_mode(site)); break;
            default:
                throw SyntaxError("Majorana token must start with X or Y: '" + std::string(token) + "'");
        }
        start = comma + 1;
    }
    return sorted_unique(std::move(modes));
}

std::vector<PauliFactor> parse_pauli_list(std::string_view list) {
    std::vector<PauliFactor> factors;
    std::istringstream in{std::string(list)};
    std::string token;
    while (in >> token) {
        auto at = token.find('@');
        if (at != 1) throw SyntaxError("Pauli token must look like z@1, got '" + token + "'");
        factors.push_back({parse_int(std::string_view(token).substr(2), token),
                           parse_pauli_letter(token[0])});
    }
    return factors;
}

void check_modes_in_chain(const std::vector<MajoranaIndex>& modes, const LatticeMode& mode) {
    if (!mode) return;
    for (MajoranaIndex b : modes) {
        if (!mode->contains_mode(b)) {
            throw RangeError("Majorana index " + std::to_string(b) + " outside {" +
                             std::to_string(mode->first_mode()) + ".." +
                             std::to_string(mode->last_mode()) + "}");
        }
    }
}

// All modes a <= b <= c as a sorted vector (empty when a > c).
std::vector<MajoranaIndex> mode_range(MajoranaIndex a, MajoranaIndex c) {
    std::vector<MajoranaIndex> out;
    for (MajoranaIndex b = a; b <= c; ++b) out.push_back(b);
    return out;
}

}  // namespace

OperatorSpec OperatorSpec::finite(std::vector<MajoranaIndex> modes) {
    return {IndexClass::Finite, sorted_unique(std::move(modes))};
}

OperatorSpec OperatorSpec::infinite(std::vector<MajoranaIndex> flips) {
    return {IndexClass::Infinite, sorted_unique(std::move(flips))};
}

OccupationProfile::OccupationProfile(bool left_fill, std::vector<MajoranaIndex> flip_set)
    : left_fill_(left_fill), flips_(sorted_unique(std::move(flip_set))) {}

int OccupationProfile::operator()(MajoranaIndex b) const {
    bool flipped = std::binary_search(flips_.begin(), flips_.end(), b);
    return background(b) ^ (flipped ? 1 : 0);
}

std::size_t OccupationProfile::finite_total() const {
    if (left_fill_) throw SemanticError("Fermi-sea profile has infinite total occupation");
    return flips_.size();
}

std::vector<MajoranaIndex> OccupationProfile::occupied_modes(const ChainConfig& chain) const {
    check_modes_in_chain(flips_, chain);
    std::vector<MajoranaIndex> out;
    for (MajoranaIndex b = chain.first_mode(); b <= chain.last_mode(); ++b) {
        if ((*this)(b)) out.push_back(b);
    }
    return out;
}

std::vector<MajoranaIndex> symmetric_difference(const std::vector<MajoranaIndex>& a,
                                                const std::vector<MajoranaIndex>& b) {
    std::vector<MajoranaIndex> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PauliLetter parse_pauli_letter(char c) {
    switch (c) {
        case 'x': return PauliLetter::X;
        case 'y': return PauliLetter::Y;
        case 'z': return PauliLetter::Z;
        default: throw SyntaxError(std::string("unknown Pauli letter '") + c + "'");
    }
}

OperatorSpec pauli_to_majorana(const std::vector<PauliFactor>& factors, const LatticeMode& mode) {
    bool left_fill = false;
    std::vector<MajoranaIndex> flips;
    for (const auto& f : factors) {
        if (mode && !mode->contains_site(f.site)) {
            throw RangeError("site " + std::to_string(f.site) + " outside the chain");
        }
        const int n = f.site;
        std::vector<MajoranaIndex> occ;
        bool fill = false;
        if (f.letter == PauliLetter::Z) {
            occ = {x_mode(n), y_mode(n)};
        } else {
            // sigma^{x,y}_n = (prod_{j<n} sigma^z_j) X_n / Y_n, and sigma^z_j ~ X_j Y_j.
            const MajoranaIndex last = f.letter == PauliLetter::X ? x_mode(n) : y_mode(n);
            if (mode) {
                occ = mode_range(mode->first_mode(), 2 * n - 2);
            } else {
                // {b <= 2n-2} relative to the sea {b <= 0}.
                occ = 2 * n - 2 >= 0 ? mode_range(1, 2 * n - 2) : mode_range(2 * n - 1, 0);
                fill = true;
            }
            occ = symmetric_difference(occ, {last});
        }
        left_fill ^= fill;
        flips = symmetric_difference(flips, occ);
    }
    return {left_fill ? IndexClass::Infinite : IndexClass::Finite, std::move(flips)};
}

std::optional<std::vector<PauliFactor>> parse_pauli_form(std::string_view text) {
    constexpr std::string_view kPauliPrefix = "pauli:";
    std::string_view s = trim(text);
    if (s.substr(0, kPauliPrefix.size()) != kPauliPrefix) return std::nullopt;
    return parse_pauli_list(s.substr(kPauliPrefix.size()));
}

OperatorSpec parse_operator_spec(std::string_view text, const LatticeMode& mode,
                                 const ParseOptions& options) {
    std::string_view s = trim(text);
    if (s.empty()) throw SyntaxError("empty operator string");

    if (auto factors = parse_pauli_form(s)) return pauli_to_majorana(*factors, mode);
    if (s == "I") return OperatorSpec::finite({});

    if (s.front() == 'F') {
        std::string_view rest = trim(s.substr(1));
        std::vector<MajoranaIndex> flips;
        if (!rest.empty()) {
            if (rest.front() != ';') throw SyntaxError("expected ';' after F in '" + std::string(s) + "'");
            flips = parse_majorana_list(rest.substr(1));
        }
        if (mode && !options.truncate_fermi_sea) {
            throw SemanticError("Fermi sea F requested on a finite chain without the truncation convention");
        }
        check_modes_in_chain(flips, mode);
        return OperatorSpec::infinite(std::move(flips));
    }

    auto modes = parse_majorana_list(s);
    check_modes_in_chain(modes, mode);
    return OperatorSpec::finite(std::move(modes));
}

std::string format_operator_spec(const OperatorSpec& spec) {
    std::string list;
    for (MajoranaIndex b : spec.flips) {
        if (!list.empty()) list += ',';
        // b = 2j-1 -> X_j, b = 2j -> Y_j; both divisions are exact.
        list += (b % 2 != 0) ? "X" + std::to_string((b + 1) / 2) : "Y" + std::to_string(b / 2);
    }
    if (spec.is_finite()) return list.empty() ? "I" : list;
    return list.empty() ? "F" : "F;" + list;
}

OccupationProfile occupation_profile(const OperatorSpec& spec) {
    return OccupationProfile(!spec.is_finite(), spec.flips);
}

}  // namespace osee
