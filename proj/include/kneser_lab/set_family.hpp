#pragma once

// Families of subsets of [n] stored as 64-bit masks (element i <-> bit i).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "kneser_lab/error.hpp"
#include "kneser_lab/report.hpp"

namespace kneser_lab {

using Subset = std::uint64_t;

inline constexpr std::size_t max_ground_size = 64;

inline Subset full_set(std::size_t n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

inline std::size_t cardinality(Subset s) { return static_cast<std::size_t>(std::popcount(s)); }

/// Lexicographic order of the bitstring forms (element 1 is the first character).
inline bool lex_less(Subset a, Subset b) {
    if (a == b) return false;
    const auto d = std::countr_zero(a ^ b);
    return (b >> d) & 1u;
}

inline std::string to_bitstring(Subset s, std::size_t n) {
    std::string out(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if ((s >> i) & 1u) out[i] = '1';
    return out;
}

inline Subset parse_bitstring(std::string_view text, std::size_t n) {
    if (text.size() != n)
        fail(ErrorKind::format, "bitstring '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                                    ", expected " + std::to_string(n));
    Subset s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (text[i] == '1')
            s |= Subset{1} << i;
        else if (text[i] != '0')
            fail(ErrorKind::format, "bitstring '" + std::string(text) + "' must contain only 0 and 1");
    }
    return s;
}

inline Subset subset_of(std::initializer_list<std::size_t> zero_based) {
    Subset s = 0;
    for (auto i : zero_based) s |= Subset{1} << i;
    return s;
}

inline std::vector<std::size_t> elements(Subset s) {
    std::vector<std::size_t> out;
    while (s != 0) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

/// Moves the bits of `s` selected by `mask` down to consecutive low positions.
inline Subset compress(Subset s, Subset mask) {
    Subset out = 0;
    std::size_t k = 0;
    while (mask != 0) {
        const auto i = std::countr_zero(mask);
        if ((s >> i) & 1u) out |= Subset{1} << k;
        ++k;
        mask &= mask - 1;
    }
    return out;
}

class SetFamily {
public:
    explicit SetFamily(std::size_t n) : n_(n) {
        require(n <= max_ground_size, "ground set larger than 64 is not supported");
    }
    SetFamily(std::size_t n, std::vector<Subset> members) : SetFamily(n) {
        const Subset universe = full_set(n);
        for (auto m : members) require((m & ~universe) == 0, "member not contained in [n]");
        std::sort(members.begin(), members.end(), lex_less);
        members.erase(std::unique(members.begin(), members.end()), members.end());
        members_ = std::move(members);
    }

    std::size_t ground_size() const noexcept { return n_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<Subset>& members() const noexcept { return members_; }
    bool contains(Subset s) const { return std::binary_search(members_.begin(), members_.end(), s, lex_less); }

    Subset support() const {
        Subset s = 0;
        for (auto m : members_) s |= m;
        return s;
    }
    bool full_support() const { return support() == full_set(n_); }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    std::size_t n_;
    std::vector<Subset> members_;
};

struct AtomPartition {
    std::vector<Subset> atoms;  // ordered by smallest element

    std::vector<std::size_t> sizes() const {
        std::vector<std::size_t> out;
        for (auto a : atoms) out.push_back(cardinality(a));
        return out;
    }
    std::size_t count() const noexcept { return atoms.size(); }
    friend bool operator==(const AtomPartition&, const AtomPartition&) = default;
};

/// Maximal subsets of supp(F) on which every member is constant.
inline AtomPartition atoms(const SetFamily& family) {
    AtomPartition out;
    const Subset supp = family.support();
    if (supp == 0) return out;
    std::vector<Subset> classes{supp};
    for (auto member : family.members()) {
        std::vector<Subset> refined;
        refined.reserve(classes.size() * 2);
        for (auto c : classes) {
            const Subset in = c & member, out_part = c & ~member;
            if (in) refined.push_back(in);
            if (out_part) refined.push_back(out_part);
        }
        classes = std::move(refined);
    }
    std::sort(classes.begin(), classes.end(),
              [](Subset a, Subset b) { return std::countr_zero(a) < std::countr_zero(b); });
    for (auto member : family.members())
        for (auto atom : classes) ensure((atom & member) == 0 || (atom & member) == atom, "atom is inside or outside every member");
    out.atoms = std::move(classes);
    return out;
}

namespace detail {

// Intersection closure of increasing depth. `provenance` records, for each set
// first reached at some depth, the member indices whose intersection produced it.
struct ClosureLevels {
    std::vector<Subset> sets;
    std::unordered_map<Subset, std::vector<std::size_t>> provenance;
};

// Visits each new set of F^1, F^2, ..., F^k once, in BFS order. The visitor
// returns false to stop.
template <class Visitor>
ClosureLevels closure_walk(const SetFamily& family, std::size_t k, Visitor&& visit) {
    ClosureLevels levels;
    std::vector<Subset> frontier;
    for (std::size_t i = 0; i < family.members().size(); ++i) {
        const Subset m = family.members()[i];
        levels.provenance.emplace(m, std::vector<std::size_t>{i});
        levels.sets.push_back(m);
        frontier.push_back(m);
        if (!visit(m, levels.provenance.at(m))) return levels;
    }
    for (std::size_t depth = 2; depth <= k && !frontier.empty(); ++depth) {
        std::vector<Subset> next;
        for (auto a : frontier) {
            for (std::size_t i = 0; i < family.members().size(); ++i) {
                const Subset c = a & family.members()[i];
                if (levels.provenance.contains(c)) continue;
                auto prov = levels.provenance.at(a);
                prov.push_back(i);
                auto [it, _] = levels.provenance.emplace(c, std::move(prov));
                levels.sets.push_back(c);
                next.push_back(c);
                if (!visit(c, it->second)) return levels;
            }
        }
        frontier = std::move(next);
    }
    return levels;
}

}  // namespace detail

/// F^k: all intersections of k (not necessarily distinct) members.
inline SetFamily product_family(const SetFamily& family, std::size_t k) {
    require(k >= 1, "product_family: k must be positive");
    require(!family.empty(), "product_family: family must be nonempty");
    auto levels = detail::closure_walk(family, k, [](Subset, const auto&) { return true; });
    return SetFamily(family.ground_size(), std::move(levels.sets));
}

/// Every member of F^k has cardinality divisible by ℓ. Stops at the first violation.
inline VerificationReport is_kwise_divisible(const SetFamily& family, std::size_t k, std::size_t ell) {
    require(k >= 1 && ell >= 1, "is_kwise_divisible: k and l must be positive");
    VerificationReport report;
    report.check = "kwise_divisible";
    report.details = {{"k", k}, {"l", ell}, {"n", family.ground_size()}, {"family_size", family.size()}};
    if (family.empty()) return report;
    const auto n = family.ground_size();
    detail::closure_walk(family, k, [&](Subset s, const std::vector<std::size_t>& prov) {
        if (cardinality(s) % ell == 0) return true;
        json tuple = json::array();
        for (std::size_t j = 0; j < k; ++j)
            tuple.push_back(to_bitstring(family.members()[prov[std::min(j, prov.size() - 1)]], n));
        report.pass = false;
        report.witness = {{"members", tuple}, {"intersection", to_bitstring(s, n)}, {"cardinality", cardinality(s)}};
        return false;
    });
    return report;
}

/// F|_A re-indexed to the |A| elements of A in increasing order.
inline SetFamily restrict(const SetFamily& family, Subset a) {
    require((a & ~full_set(family.ground_size())) == 0, "restrict: A must be a subset of [n]");
    std::vector<Subset> out;
    out.reserve(family.size());
    for (auto m : family.members()) out.push_back(compress(m & a, a));
    return SetFamily(cardinality(a), std::move(out));
}

inline json atom_sizes_json(const AtomPartition& partition) { return json(partition.sizes()); }

/// Every atom of F has cardinality exactly ℓ, i.e. F lies in the atomic family
/// on its atoms and those all have size ℓ.
inline VerificationReport atomic_structure_check(const SetFamily& family, std::size_t ell) {
    require(ell >= 1, "atomic_structure_check: l must be positive");
    const auto partition = atoms(family);
    VerificationReport report;
    report.check = "atomic_structure";
    report.details = {{"l", ell}, {"atom_sizes", atom_sizes_json(partition)}};
    for (auto a : partition.atoms) {
        if (cardinality(a) != ell) {
            report.pass = false;
            report.witness = {{"atom", to_bitstring(a, family.ground_size())}, {"size", cardinality(a)}};
            break;
        }
    }
    return report;
}

/// F^r has the same atoms as F.
inline VerificationReport family_product_atoms_check(const SetFamily& family, std::size_t r) {
    require(!family.empty() && family.support() != 0, "family_product_atoms_check: needs nonempty support");
    const auto base = atoms(family);
    const auto powered = atoms(product_family(family, r));
    VerificationReport report;
    report.check = "product_atoms";
    report.pass = base == powered;
    report.details = {{"r", r}, {"atom_count", base.count()}, {"product_atom_count", powered.count()}};
    if (!report.pass) {
        json a = json::array(), b = json::array();
        for (auto x : base.atoms) a.push_back(to_bitstring(x, family.ground_size()));
        for (auto x : powered.atoms) b.push_back(to_bitstring(x, family.ground_size()));
        report.witness = {{"atoms", a}, {"product_atoms", b}};
    }
    return report;
}

/// With a = #atoms, F^a contains some atom of F as a member.
inline VerificationReport atom_in_power_check(const SetFamily& family) {
    require(!family.empty() && family.support() != 0, "atom_in_power_check: needs nonempty support");
    const auto partition = atoms(family);
    const auto powered = product_family(family, partition.count());
    VerificationReport report;
    report.check = "atom_in_power";
    report.details = {{"a", partition.count()}, {"power_size", powered.size()}};
    report.pass = false;
    for (auto atom : partition.atoms) {
        if (powered.contains(atom)) {
            report.pass = true;
            report.details["atom"] = to_bitstring(atom, family.ground_size());
            break;
        }
    }
    if (!report.pass) report.witness = {{"family_size", family.size()}};
    return report;
}

// Family file: "n" then one length-n bitstring per member. JSON alternative:
// {"n": int, "members": ["0101", ...]}.

inline void write_family(std::ostream& os, const SetFamily& family) {
    os << family.ground_size() << '\n';
    for (auto m : family.members()) os << to_bitstring(m, family.ground_size()) << '\n';
}

inline std::string to_text(const SetFamily& family) {
    std::ostringstream os;
    write_family(os, family);
    return os.str();
}

inline json to_json(const SetFamily& family) {
    json members = json::array();
    for (auto m : family.members()) members.push_back(to_bitstring(m, family.ground_size()));
    return json{{"n", family.ground_size()}, {"members", members}};
}

inline SetFamily family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("members") || !j["n"].is_number_unsigned() ||
        !j["members"].is_array())
        fail(ErrorKind::format, "family JSON must be {\"n\": int, \"members\": [bitstrings]}");
    const auto n = j["n"].get<std::size_t>();
    if (n > max_ground_size) fail(ErrorKind::format, "ground set larger than 64 is not supported");
    std::vector<Subset> members;
    for (const auto& m : j["members"]) {
        if (!m.is_string()) fail(ErrorKind::format, "family JSON members must be bitstrings");
        members.push_back(parse_bitstring(m.get<std::string>(), n));
    }
    return SetFamily(n, std::move(members));
}

inline SetFamily read_family(std::istream& is) {
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) fail(ErrorKind::format, "family JSON does not parse");
        return family_from_json(j);
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line) && line.find_first_not_of(" \t\r") == std::string::npos) {}
    std::istringstream header(line);
    long long n = -1;
    std::string extra;
    if (!(header >> n) || n < 0 || (header >> extra)) fail(ErrorKind::format, "family file: first line must be 'n'");
    if (n > static_cast<long long>(max_ground_size)) fail(ErrorKind::format, "ground set larger than 64 is not supported");
    std::vector<Subset> members;
    while (std::getline(lines, line)) {
        std::istringstream row(line);
        std::string token;
        if (!(row >> token)) {
            // With n == 0 the empty set is written as a blank line.
            if (n == 0) members.push_back(0);
            continue;
        }
        if (row >> extra) fail(ErrorKind::format, "family file: one bitstring per line");
        members.push_back(parse_bitstring(token, static_cast<std::size_t>(n)));
    }
    return SetFamily(static_cast<std::size_t>(n), std::move(members));
}

}  // namespace kneser_lab
