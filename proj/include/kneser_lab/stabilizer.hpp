#pragma once

// Stabilizer algebras St(C) = {x : x*C ⊆ C}, the disjoint-support decomposition
// they induce, and diagnostics for Kneser's theorem for codes.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "kneser_lab/error.hpp"
#include "kneser_lab/linear_code.hpp"
#include "kneser_lab/report.hpp"

namespace kneser_lab {

/// St(C), computed on the ambient space of C.
///
/// x*b ∈ C for a basis row b iff h·(x*b) = (h*b)·x = 0 for every parity-check
/// row h, so St(C) is the dual of the span of all h*b, i.e. dual(C^⊥ * C).
inline LinearCode stabilizer(const LinearCode& code) {
    return dual(schur_product(dual(code), code));
}

/// St(C) evaluated on supp(C): the notion used by "trivial stabilizer".
inline LinearCode stabilizer_on_support(const LinearCode& code) {
    const auto supp = code.support();
    return stabilizer(restrict_code(code, supp));
}

inline bool has_trivial_stabilizer(const LinearCode& code) {
    return !code.is_zero() && stabilizer_on_support(code).dim() == 1;
}

struct StabDecomposition {
    LinearCode parent;
    LinearCode stab;
    std::size_t m = 0;
    std::vector<std::vector<std::size_t>> parts;  // 0-based, each sorted, ordered by first element
    std::vector<LinearCode> components;           // ambient length n, supp(components[i]) = parts[i]

    std::vector<std::size_t> component_dims() const {
        std::vector<std::size_t> out;
        for (const auto& c : components) out.push_back(c.dim());
        return out;
    }

    /// JSON with 1-based coordinates.
    json to_json() const {
        json jparts = json::array();
        for (const auto& part : parts) {
            json jp = json::array();
            for (auto i : part) jp.push_back(i + 1);
            jparts.push_back(std::move(jp));
        }
        return json{{"m", m}, {"parts", jparts}, {"component_dims", component_dims()}, {"stab_dim", stab.dim()}};
    }
};

namespace detail {

inline LinearCode mask_code(const LinearCode& code, const std::vector<std::size_t>& part) {
    std::vector<char> keep(code.length(), 0);
    for (auto i : part) keep[i] = 1;
    std::vector<FieldVector> rows;
    for (const auto& r : code.rows()) {
        Row masked(r.size(), 0);
        for (std::size_t j = 0; j < r.size(); ++j)
            if (keep[j]) masked[j] = r[j];
        rows.push_back(FieldVector::from_cells(code.field(), std::move(masked)));
    }
    return span(code.field(), code.length(), rows);
}

}  // namespace detail

/// The unique maximal splitting C = C_1 ⊕ ... ⊕ C_m of a full-support code.
///
/// Coordinates are grouped by their signature (the column of the stabilizer
/// basis matrix); the stabilizer has a basis of disjoint constant-on-support
/// indicators, so signature classes are exactly the supports of the C_i.
inline StabDecomposition decompose(const LinearCode& code) {
    require(!code.is_zero(), "decompose: zero code has no decomposition");
    require(code.full_support(), "decompose: code is not full-support; restrict to its support first");
    LinearCode stab = stabilizer(code);
    const std::size_t n = code.length();

    std::map<std::vector<Cell>, std::size_t> class_of;
    std::vector<std::vector<std::size_t>> parts;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Cell> signature;
        signature.reserve(stab.dim());
        for (const auto& r : stab.rows()) signature.push_back(r[j]);
        auto [it, inserted] = class_of.emplace(std::move(signature), parts.size());
        if (inserted) parts.emplace_back();
        parts[it->second].push_back(j);
    }
    ensure(parts.size() == stab.dim(), "number of signature classes equals dim St(C)");

    StabDecomposition out{code, stab, stab.dim(), std::move(parts), {}};
    std::size_t total = 0;
    LinearCode assembled(code.field(), n);
    for (const auto& part : out.parts) {
        auto component = detail::mask_code(code, part);
        ensure(component.support() == part, "component support equals its part");
        total += component.dim();
        assembled = sum(assembled, component);
        out.components.push_back(std::move(component));
    }
    ensure(total == code.dim() && assembled == code, "C equals the direct sum of its components");
    return out;
}

/// dim CD >= dim C + dim D - dim St(CD).
inline VerificationReport kneser_check(const LinearCode& c, const LinearCode& d) {
    require_compatible(c, d);
    require(!c.is_zero() && !d.is_zero(), "kneser_check: codes must be nonzero");
    const auto product = schur_product(c, d);
    const auto stab = stabilizer(product);
    const long long lhs = static_cast<long long>(product.dim());
    const long long rhs = static_cast<long long>(c.dim() + d.dim()) - static_cast<long long>(stab.dim());
    VerificationReport report;
    report.check = "kneser";
    report.pass = lhs >= rhs;
    report.details = {{"dim_c", c.dim()}, {"dim_d", d.dim()}, {"dim_cd", product.dim()}, {"dim_st_cd", stab.dim()},
                      {"p", c.field().p()}, {"n", c.length()}};
    if (!report.pass) report.witness = {{"c", to_text(c)}, {"d", to_text(d)}, {"cd", to_text(product)}};
    return report;
}

/// dim C^<k> >= k dim C - k + 1 whenever C^<k> has trivial stabilizer.
inline VerificationReport kneser_chain_bound(const LinearCode& code, std::size_t k) {
    require(!code.is_zero(), "kneser_chain_bound: code must be nonzero");
    const auto powered = power(code, k);
    const auto stab_dim = stabilizer_on_support(powered).dim();
    json details = {{"k", k}, {"dim_c", code.dim()}, {"dim_ck", powered.dim()}, {"dim_st_ck", stab_dim}};
    if (stab_dim != 1) return VerificationReport::vacuous("kneser_chain_bound", std::move(details));
    const long long bound = static_cast<long long>(k * code.dim()) - static_cast<long long>(k) + 1;
    details["bound"] = bound;
    VerificationReport report{"kneser_chain_bound", true, static_cast<long long>(powered.dim()) >= bound, nullptr,
                              std::move(details)};
    if (!report.pass) report.witness = {{"c", to_text(code)}};
    return report;
}

/// dim V^<r> >= dim V^<r-1> + dim W / 2 for 2 <= r <= t, where W is V restricted
/// to the union of the components of V^<t> of dimension >= 2.
inline VerificationReport growth_check(const LinearCode& v, std::size_t t) {
    require(t >= 1, "growth_check: t must be positive");
    require(!v.is_zero() && v.full_support(), "growth_check: V must be nonzero and full-support");
    const auto chain = power_chain(v, t);
    const auto decomposition = decompose(chain.back());
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < decomposition.m; ++i)
        if (decomposition.components[i].dim() >= 2)
            s.insert(s.end(), decomposition.parts[i].begin(), decomposition.parts[i].end());
    std::sort(s.begin(), s.end());
    const auto w = restrict_code(v, s);

    std::vector<std::size_t> dims;
    for (const auto& c : chain) dims.push_back(c.dim());
    VerificationReport report;
    report.check = "growth";
    json s_json = json::array();
    for (auto i : s) s_json.push_back(i + 1);
    report.details = {{"t", t}, {"power_dims", dims}, {"s", s_json}, {"dim_w", w.dim()}, {"m", decomposition.m}};
    for (std::size_t r = 2; r <= t; ++r) {
        // Doubled to stay in integers.
        if (2 * dims[r - 1] < 2 * dims[r - 2] + w.dim()) {
            report.pass = false;
            report.witness = {{"v", to_text(v)}, {"r", r}};
            break;
        }
    }
    return report;
}

}  // namespace kneser_lab
