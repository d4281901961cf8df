#pragma once

// The family <-> code dictionary: k-wise p-divisibility of F is the statement
// V^<k> ⊆ 1^⊥ for V = span_{F_p}(F), together with the counting bounds and
// structural lemmas that sit on top of it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kneser_lab/error.hpp"
#include "kneser_lab/linear_code.hpp"
#include "kneser_lab/report.hpp"
#include "kneser_lab/set_family.hpp"
#include "kneser_lab/stabilizer.hpp"

namespace kneser_lab {

inline FieldVector characteristic_vector(PrimeField field, std::size_t n, Subset s) {
    Row cells(n, 0);
    for (std::size_t i = 0; i < n; ++i) cells[i] = static_cast<Cell>((s >> i) & 1u);
    return FieldVector::from_cells(field, std::move(cells));
}

inline Subset subset_from_row(const Row& row) {
    Subset s = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) s |= Subset{1} << i;
    return s;
}

inline Subset subset_from_indices(std::span<const std::size_t> indices) {
    Subset s = 0;
    for (auto i : indices) s |= Subset{1} << i;
    return s;
}

inline LinearCode span_family(const SetFamily& family, std::uint32_t p) {
    const PrimeField field(p);
    std::vector<FieldVector> vectors;
    vectors.reserve(family.size());
    for (auto m : family.members()) vectors.push_back(characteristic_vector(field, family.ground_size(), m));
    return span(field, family.ground_size(), vectors);
}

/// V ∩ {0,1}^n as a family on [n].
inline SetFamily binary_family(const LinearCode& code) {
    require(code.length() <= max_ground_size, "binary_family: length exceeds 64");
    std::vector<Subset> members;
    for_each_binary_point(code, [&](const Row& r) { members.push_back(subset_from_row(r)); });
    return SetFamily(code.length(), std::move(members));
}

struct DivisibilityCertificate {
    SetFamily family;
    std::size_t k;
    std::uint32_t p;
    LinearCode code;
    bool combinatorial;
    bool algebraic;
    json witness;

    bool agree() const noexcept { return combinatorial == algebraic; }

    VerificationReport report() const {
        VerificationReport r;
        r.check = "bridge";
        r.pass = agree();
        r.details = {{"k", k}, {"p", p}, {"dim_v", code.dim()}, {"combinatorial", combinatorial}, {"algebraic", algebraic}};
        r.witness = witness;
        return r;
    }
};

/// Evaluates k-wise p-divisibility combinatorially and via V^<k> ⊆ 1^⊥; the two must agree.
inline DivisibilityCertificate bridge_check(const SetFamily& family, std::size_t k, std::uint32_t p) {
    require(k >= 1, "bridge_check: k must be positive");
    auto code = span_family(family, p);
    const auto combinatorial = is_kwise_divisible(family, k, p);
    const bool algebraic = orthogonal_to_ones(power(code, k));
    DivisibilityCertificate cert{family, k, p, std::move(code), combinatorial.pass, algebraic, combinatorial.witness};
    if (!cert.agree())
        cert.witness = {{"family", to_json(family)}, {"combinatorial_witness", combinatorial.witness}};
    return cert;
}

struct OdlyzkoCount {
    std::uint64_t count;
    std::uint64_t bound;
    bool pass;
};

/// |V ∩ {0,1}^n| against 2^dim V.
inline OdlyzkoCount odlyzko_count(const LinearCode& code) {
    std::uint64_t count = 0;
    for_each_binary_point(code, [&](const Row&) { ++count; });
    const std::uint64_t bound = std::uint64_t{1} << code.dim();
    ensure(count <= bound, "|V ∩ {0,1}^n| <= 2^dim V");
    return {count, bound, count <= bound};
}

/// If St(V^<3>) is trivial then |V ∩ {0,1}^n| <= 2^(dim V - 1).
inline VerificationReport improved_odlyzko_check(const SetFamily& family, std::uint32_t p) {
    require(p >= 3, "improved_odlyzko_check: requires p >= 3");
    const auto nonzero = std::count_if(family.members().begin(), family.members().end(), [](Subset s) { return s != 0; });
    require(nonzero >= 2, "improved_odlyzko_check: family needs at least two nonzero members");
    const auto v = span_family(family, p);
    const auto cube = power(v, 3);
    const auto stab_dim = stabilizer_on_support(cube).dim();
    json details = {{"p", p}, {"dim_v", v.dim()}, {"dim_v3", cube.dim()}, {"dim_st_v3", stab_dim}};
    if (stab_dim != 1) return VerificationReport::vacuous("improved_odlyzko", std::move(details));
    const auto counted = odlyzko_count(v);
    const std::uint64_t bound = std::uint64_t{1} << (v.dim() - 1);
    details["count"] = counted.count;
    details["bound"] = bound;
    VerificationReport report{"improved_odlyzko", true, counted.count <= bound, nullptr, std::move(details)};
    if (!report.pass) report.witness = {{"family", to_json(family)}, {"v", to_text(v)}};
    return report;
}

inline std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    while (exp-- > 0) out *= base;
    return out;
}

/// φ(p^α) = p^(α-1) (p - 1).
inline std::uint64_t totient_prime_power(std::uint64_t p, std::uint64_t alpha) {
    require(alpha >= 1, "totient_prime_power: alpha must be positive");
    return ipow(p, alpha - 1) * (p - 1);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp != 0) {
        if (exp & 1u) result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % mod);
        base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % mod);
        exp >>= 1;
    }
    return result;
}

/// Lifts v ∈ V^<k> ∩ {0,1}^n to an integer combination w of members of F^k and
/// checks both congruences of the Fermat–Euler argument:
///   Σ w(i)^φ(p^α) ≡ 0 (mod p^α)   and   Σ w(i)^φ(p^α) ≡ |supp v| (mod p^α),
/// then that |supp v| ≡ 0 (mod p^α).
inline VerificationReport prime_power_lift_check(const SetFamily& family, std::size_t k, std::uint32_t p,
                                                 std::size_t alpha, const FieldVector& v) {
    require(k >= 1 && alpha >= 1, "prime_power_lift_check: k and alpha must be positive");
    const PrimeField field(p);
    const std::size_t n = family.ground_size();
    const std::uint64_t modulus = ipow(p, alpha);
    const std::uint64_t phi = totient_prime_power(p, alpha);
    require(v.field() == field && v.size() == n, "prime_power_lift_check: v must be a vector of F_p^n");
    require(v.is_binary(), "prime_power_lift_check: v must be a {0,1}-vector");
    require(is_kwise_divisible(family, k * phi, modulus).pass,
            "prime_power_lift_check: family is not k*phi(p^alpha)-wise p^alpha-divisible");
    const auto code = span_family(family, p);
    require(contains(power(code, k), v), "prime_power_lift_check: v is not in V^<k>");

    const auto products = product_family(family, k);
    std::vector<FieldVector> generators;
    for (auto m : products.members()) generators.push_back(characteristic_vector(field, n, m));
    const auto lambda = solve_combination(generators, v);
    ensure(lambda.has_value(), "v ∈ V^<k> is a combination of members of F^k");

    std::vector<std::uint64_t> w(n, 0);
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) w[i] += static_cast<std::uint64_t>((*lambda)[j]) * generators[j][i];

    std::uint64_t power_sum = 0;
    for (auto wi : w) power_sum = (power_sum + powmod(wi, phi, modulus)) % modulus;
    const std::uint64_t support_size = support(v).size();

    const bool palpha = power_sum == 0;
    const bool support_congruence = power_sum == support_size % modulus;
    const bool divisible = support_size % modulus == 0;

    VerificationReport report;
    report.check = "prime_power_lift";
    report.pass = palpha && support_congruence && divisible;
    json lam = json::array();
    for (auto x : *lambda) lam.push_back(x);
    report.details = {{"p", p},
                      {"alpha", alpha},
                      {"k", k},
                      {"modulus", modulus},
                      {"phi", phi},
                      {"generators", generators.size()},
                      {"lambda", lam},
                      {"w", w},
                      {"power_sum_mod", power_sum},
                      {"support_size", support_size},
                      {"power_sum_vanishes", palpha},
                      {"power_sum_matches_support", support_congruence},
                      {"support_divisible", divisible}};
    if (!report.pass) report.witness = {{"family", to_json(family)}, {"v", to_string(v)}};
    return report;
}

struct FamilySplit {
    SetFamily first;
    SetFamily second;
    Subset first_block;
    Subset second_block;
};

/// Splits along the stabilizer decomposition of V^<k>: first part vs the rest.
/// std::nullopt means V^<k> has trivial stabilizer (indecomposable).
inline std::optional<FamilySplit> split_family(const SetFamily& family, std::size_t k, std::uint32_t p) {
    require(!family.empty() && family.full_support(), "split_family: family must be full-support");
    require(is_kwise_divisible(family, k, p).pass, "split_family: family is not k-wise p-divisible");
    const auto vk = power(span_family(family, p), k);
    const auto decomposition = decompose(vk);
    if (decomposition.m < 2) return std::nullopt;

    const Subset first_block = subset_from_indices(decomposition.parts.front());
    const Subset second_block = full_set(family.ground_size()) & ~first_block;
    FamilySplit out{restrict(family, first_block), restrict(family, second_block), first_block, second_block};

    ensure(is_kwise_divisible(out.first, k, p).pass && is_kwise_divisible(out.second, k, p).pass,
           "both restrictions stay k-wise p-divisible");
    const auto e1 = elements(first_block), e2 = elements(second_block);
    ensure(vk.dim() == restrict_code(vk, e1).dim() + restrict_code(vk, e2).dim(),
           "dim V^<k> splits across the two blocks");
    // F -> F1 x F2, M -> (M ∩ S1, M ∩ S2) is injective.
    std::vector<std::pair<Subset, Subset>> images;
    for (auto m : family.members()) images.emplace_back(m & first_block, m & second_block);
    std::sort(images.begin(), images.end());
    ensure(std::adjacent_find(images.begin(), images.end()) == images.end(), "F -> F1 x F2 is injective");
    ensure(family.size() <= out.first.size() * out.second.size(), "|F| <= |F1||F2|");
    return out;
}

/// Every coordinate outside S (the union of the components of V^<t> of
/// dimension >= 2) lies in an atom of F of size divisible by p^α.
inline VerificationReport tphi_atom_report(const SetFamily& family, std::size_t t, std::uint32_t p, std::size_t alpha,
                                           std::size_t ell, std::size_t k) {
    require(t >= 1 && alpha >= 1 && ell >= 1 && k >= 1, "tphi_atom_report: parameters must be positive");
    const std::uint64_t modulus = ipow(p, alpha);
    require(ell % modulus == 0, "tphi_atom_report: p^alpha must divide l");
    require(k >= t * totient_prime_power(p, alpha), "tphi_atom_report: k must be at least t*phi(p^alpha)");
    require(!family.empty() && family.full_support(), "tphi_atom_report: family must be full-support");
    require(is_kwise_divisible(family, k, ell).pass, "tphi_atom_report: family is not k-wise l-divisible");

    const std::size_t n = family.ground_size();
    const auto decomposition = decompose(power(span_family(family, p), t));
    Subset s = 0;
    for (std::size_t i = 0; i < decomposition.m; ++i)
        if (decomposition.components[i].dim() >= 2) s |= subset_from_indices(decomposition.parts[i]);

    const auto partition = atoms(family);
    VerificationReport report;
    report.check = "tphi_atoms";
    json evidence = json::array();
    for (std::size_t j = 0; j < n; ++j) {
        if ((s >> j) & 1u) continue;
        const auto atom = *std::find_if(partition.atoms.begin(), partition.atoms.end(),
                                        [&](Subset a) { return (a >> j) & 1u; });
        const bool ok = cardinality(atom) % modulus == 0;
        evidence.push_back({{"coordinate", j + 1}, {"atom", to_bitstring(atom, n)}, {"atom_size", cardinality(atom)}});
        if (!ok && report.pass) {
            report.pass = false;
            report.witness = {{"coordinate", j + 1}, {"atom", to_bitstring(atom, n)}, {"family", to_json(family)}};
        }
    }
    report.details = {{"t", t},   {"p", p}, {"alpha", alpha}, {"l", ell}, {"k", k}, {"m", decomposition.m},
                      {"s", to_bitstring(s, n)}, {"evidence", evidence}};
    return report;
}

}  // namespace kneser_lab
