#pragma once

// Exhaustive desk-scale verification.
//
// Theorems about p-divisible families are checked by sweeping subspaces rather
// than families: a family F is k-wise p-divisible iff V = span(F) satisfies
// V^<k> ⊆ 1^⊥, and F ⊆ V ∩ {0,1}^n, which is itself k-wise p-divisible. So the
// largest admissible family on [n] is max |V ∩ {0,1}^n| over all admissible V.
// The composite-ℓ sweep has no such reduction and walks families directly.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kneser_lab/bridge.hpp"
#include "kneser_lab/error.hpp"
#include "kneser_lab/linear_code.hpp"
#include "kneser_lab/parallel.hpp"
#include "kneser_lab/random_instances.hpp"
#include "kneser_lab/report.hpp"
#include "kneser_lab/set_family.hpp"
#include "kneser_lab/stabilizer.hpp"

namespace kneser_lab {

inline constexpr std::uint64_t default_subspace_budget = 10'000'000;
inline constexpr std::uint64_t default_node_budget = 100'000'000;
inline constexpr std::size_t max_reported_instances = 4;

/// Number of r-dimensional subspaces of F_p^n by the product formula
/// Π_{i<r} (p^(n-i) - 1) / (p^(i+1) - 1); std::nullopt on overflow.
inline std::optional<std::uint64_t> gaussian_binomial(std::uint64_t p, std::size_t n, std::size_t r) {
    if (r > n) return 0;
    using u128 = unsigned __int128;
    auto pow128 = [&](std::size_t e) -> std::optional<u128> {
        u128 out = 1;
        for (std::size_t i = 0; i < e; ++i) {
            if (out > (~u128{0}) / p) return std::nullopt;
            out *= p;
        }
        return out;
    };
    u128 result = 1;
    for (std::size_t i = 0; i < r; ++i) {
        const auto num = pow128(n - i), den = pow128(i + 1);
        if (!num || !den) return std::nullopt;
        const u128 factor = *num - 1;
        if (factor != 0 && result > (~u128{0}) / factor) return std::nullopt;
        // Each partial product is itself a Gaussian binomial, so the division is exact.
        result = result * factor / (*den - 1);
    }
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return static_cast<std::uint64_t>(result);
}

inline std::optional<std::uint64_t> total_subspaces(std::uint64_t p, std::size_t n, std::size_t lo, std::size_t hi) {
    std::uint64_t total = 0;
    for (std::size_t r = lo; r <= hi && r <= n; ++r) {
        const auto g = gaussian_binomial(p, n, r);
        if (!g || total > std::numeric_limits<std::uint64_t>::max() - *g) return std::nullopt;
        total += *g;
    }
    return total;
}

/// Every subspace of F_p^n with dimension in [min_dim, max_dim], each exactly
/// once, in canonical order: by dimension, then pivot-column set, then free
/// entries as a base-p counter. Pivot sets are the unit of parallel work.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(PrimeField field, std::size_t n, std::size_t min_dim, std::size_t max_dim)
        : field_(field), n_(n), min_dim_(min_dim), max_dim_(std::min(max_dim, n)) {
        require(min_dim <= max_dim, "SubspaceEnumerator: empty dimension range");
        for (std::size_t r = min_dim_; r <= max_dim_; ++r) {
            std::vector<std::size_t> pivots(r);
            for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
            for (;;) {
                pivot_sets_.push_back(pivots);
                // next r-combination of [0, n) in lex order
                std::size_t i = r;
                while (i > 0 && pivots[i - 1] == n_ - r + i - 1) --i;
                if (i == 0) break;
                ++pivots[i - 1];
                for (std::size_t j = i; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
            }
        }
    }
    SubspaceEnumerator(PrimeField field, std::size_t n) : SubspaceEnumerator(field, n, 0, n) {}

    const PrimeField& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t task_count() const noexcept { return pivot_sets_.size(); }
    const std::vector<std::vector<std::size_t>>& pivot_sets() const noexcept { return pivot_sets_; }

    /// Σ_r [n choose r]_p over the dimension range.
    std::optional<std::uint64_t> expected_count() const { return total_subspaces(field_.p(), n_, min_dim_, max_dim_); }

    /// Visits every subspace with the given pivot set; returns how many.
    template <class Visitor>
    std::uint64_t enumerate_task(std::size_t task, Visitor&& visit) const {
        const auto& pivots = pivot_sets_[task];
        const std::size_t r = pivots.size();
        std::vector<char> is_pivot(n_, 0);
        for (auto c : pivots) is_pivot[c] = 1;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = pivots[i] + 1; j < n_; ++j)
                if (!is_pivot[j]) free.emplace_back(i, j);
        std::vector<Row> rows(r, Row(n_, 0));
        for (std::size_t i = 0; i < r; ++i) rows[i][pivots[i]] = 1;
        const auto p = field_.p();
        std::uint64_t visited = 0;
        for (;;) {
            visit(LinearCode::from_rref(field_, n_, rows));
            ++visited;
            std::size_t pos = free.size();
            while (pos > 0) {
                auto& cell = rows[free[pos - 1].first][free[pos - 1].second];
                if (cell + 1u < p) {
                    ++cell;
                    break;
                }
                cell = 0;
                --pos;
            }
            if (pos == 0) break;
        }
        return visited;
    }

    /// Sequential sweep; checks the count against the Gaussian binomial total.
    template <class Visitor>
    std::uint64_t for_each(Visitor&& visit) const {
        std::uint64_t visited = 0;
        for (std::size_t t = 0; t < task_count(); ++t) visited += enumerate_task(t, visit);
        const auto expected = expected_count();
        ensure(expected && *expected == visited, "subspace count equals the Gaussian binomial total");
        return visited;
    }

private:
    PrimeField field_;
    std::size_t n_;
    std::size_t min_dim_;
    std::size_t max_dim_;
    std::vector<std::vector<std::size_t>> pivot_sets_;
};

/// Outcome of an exhaustive theorem sweep.
struct SearchReport {
    std::string theorem;
    json params = json::object();
    std::string method;
    std::uint64_t universe_size = 0;
    std::uint64_t admissible = 0;
    std::uint64_t max_found = 0;
    std::uint64_t bound = 0;
    std::uint64_t extremal_count = 0;
    json extremal_instances = json::array();
    bool pass = true;
    bool inconclusive = false;
    json counterexample = nullptr;
    json details = json::object();

    json to_json() const {
        return json{{"schema", schema_version},
                    {"check", theorem},
                    {"hypothesis_met", true},
                    {"pass", pass},
                    {"inconclusive", inconclusive},
                    {"witness", counterexample},
                    {"params", params},
                    {"method", method},
                    {"universe_size", universe_size},
                    {"admissible", admissible},
                    {"max", max_found},
                    {"bound", bound},
                    {"extremal_count", extremal_count},
                    {"extremal_instances", extremal_instances},
                    {"details", details}};
    }
};

inline constexpr const char* subspace_reduction_note =
    "swept all subspaces V of F_p^n; every k-wise p-divisible family F satisfies F ⊆ V ∩ {0,1}^n for "
    "V = span(F) with V^<k> ⊆ 1^⊥, so max |V ∩ {0,1}^n| over admissible V is the largest family size";

namespace detail {

inline std::uint64_t pow2(std::size_t e) { return std::uint64_t{1} << e; }

// Runs before the enumerator is built, since its pivot-set table alone can be huge.
inline void check_subspace_budget(std::uint32_t p, std::size_t n) {
    const auto expected = total_subspaces(p, n, 0, n);
    const auto budget = budget_from_env(default_subspace_budget);
    if (!expected || *expected > budget)
        fail(ErrorKind::budget, "subspace sweep of F_" + std::to_string(p) + "^" + std::to_string(n) + " needs " +
                                    (expected ? std::to_string(*expected) : std::string("> 2^64")) +
                                    " subspaces, budget is " + std::to_string(budget) +
                                    " (raise KNESER_LAB_BUDGET to override)");
}

struct SweepTask {
    std::uint64_t visited = 0;
    std::uint64_t admissible = 0;
    std::uint64_t max_found = 0;
    std::uint64_t extremal_count = 0;
    std::vector<json> extremal;
    std::uint64_t checked_large = 0;
    std::optional<json> violation;
};

inline json code_instance(const LinearCode& v, const SetFamily& points) {
    json members = json::array();
    for (auto m : points.members()) members.push_back(to_bitstring(m, points.ground_size()));
    return json{{"code", to_text(v)}, {"dim", v.dim()}, {"binary_points", members.size()}, {"members", members}};
}

inline void note_extremal(SweepTask& task, std::uint64_t count, const json& instance) {
    if (count > task.max_found) {
        task.max_found = count;
        task.extremal_count = 0;
        task.extremal.clear();
    }
    if (count == task.max_found) {
        ++task.extremal_count;
        if (task.extremal.size() < max_reported_instances) task.extremal.push_back(instance);
    }
}

inline void merge_sweeps(SearchReport& report, const std::vector<SweepTask>& tasks) {
    for (const auto& t : tasks) {
        report.universe_size += t.visited;
        report.admissible += t.admissible;
        report.max_found = std::max(report.max_found, t.max_found);
    }
    for (const auto& t : tasks) {
        if (t.max_found != report.max_found || t.extremal_count == 0) continue;
        report.extremal_count += t.extremal_count;
        for (const auto& e : t.extremal)
            if (report.extremal_instances.size() < max_reported_instances) report.extremal_instances.push_back(e);
    }
    for (const auto& t : tasks)
        if (t.violation && report.counterexample.is_null()) report.counterexample = *t.violation;
}

}  // namespace detail

/// Every p-wise p-divisible family on [n] has at most 2^⌊n/p⌋ members.
inline SearchReport verify_theorem1(std::uint32_t p, std::size_t n, unsigned threads = default_threads()) {
    const PrimeField field(p);
    detail::check_subspace_budget(p, n);
    SubspaceEnumerator en(field, n);
    const std::uint64_t bound = detail::pow2(n / p);

    auto tasks = parallel_tasks<detail::SweepTask>(en.task_count(), threads, [&](std::size_t t) {
        detail::SweepTask out;
        out.visited = en.enumerate_task(t, [&](const LinearCode& v) {
            if (!orthogonal_to_ones(power(v, p))) return;
            ++out.admissible;
            const auto points = binary_family(v);
            const std::uint64_t count = points.size();
            detail::note_extremal(out, count, detail::code_instance(v, points));
            if (count > bound && !out.violation) {
                // Re-validate combinatorially, without the code machinery.
                const bool divisible = is_kwise_divisible(points, p, p).pass;
                out.violation = json{{"instance", detail::code_instance(v, points)}, {"revalidated_divisible", divisible}};
            }
        });
        return out;
    });

    SearchReport report;
    report.theorem = "theorem1";
    report.params = {{"p", p}, {"n", n}, {"k", p}};
    report.method = subspace_reduction_note;
    report.bound = bound;
    detail::merge_sweeps(report, tasks);
    const auto expected = en.expected_count();
    ensure(expected && *expected == report.universe_size, "subspace count equals the Gaussian binomial total");
    report.pass = report.max_found <= bound;
    report.details = {{"gaussian_binomial_total", *expected}, {"bound_attained", report.max_found == bound}};
    return report;
}

/// A (p+1)-wise p-divisible family on [n] with more than 2^(⌊n/p⌋-1) members
/// has all atoms of size p.
inline SearchReport verify_theorem2(std::uint32_t p, std::size_t n, unsigned threads = default_threads()) {
    const PrimeField field(p);
    detail::check_subspace_budget(p, n);
    SubspaceEnumerator en(field, n);
    const std::uint64_t full_bound = detail::pow2(n / p);  // threshold is full_bound / 2, compared doubled

    auto tasks = parallel_tasks<detail::SweepTask>(en.task_count(), threads, [&](std::size_t t) {
        detail::SweepTask out;
        out.visited = en.enumerate_task(t, [&](const LinearCode& v) {
            if (!orthogonal_to_ones(power(v, p + 1))) return;
            ++out.admissible;
            const auto points = binary_family(v);
            const std::uint64_t count = points.size();
            detail::note_extremal(out, count, detail::code_instance(v, points));
            if (2 * count <= full_bound) return;
            ++out.checked_large;
            const auto structure = atomic_structure_check(points, p);
            if (!structure.pass && !out.violation) {
                const bool divisible = is_kwise_divisible(points, p + 1, p).pass;
                out.violation = json{{"instance", detail::code_instance(v, points)},
                                     {"atom_sizes", structure.details["atom_sizes"]},
                                     {"revalidated_divisible", divisible}};
            }
        });
        return out;
    });

    SearchReport report;
    report.theorem = "theorem2";
    report.params = {{"p", p}, {"n", n}, {"k", p + 1}};
    report.method = subspace_reduction_note;
    report.bound = full_bound;
    detail::merge_sweeps(report, tasks);
    std::uint64_t large = 0;
    for (const auto& t : tasks) large += t.checked_large;
    const auto expected = en.expected_count();
    ensure(expected && *expected == report.universe_size, "subspace count equals the Gaussian binomial total");
    report.pass = report.counterexample.is_null();
    report.details = {{"gaussian_binomial_total", *expected},
                      {"threshold", full_bound / 2},
                      {"threshold_exponent", static_cast<long long>(n / p) - 1},
                      {"families_above_threshold", large}};
    return report;
}

namespace detail {

struct FamilyDfsTask {
    std::uint64_t nodes = 0;
    bool truncated = false;
    std::uint64_t max_found = 0;
    std::uint64_t extremal_count = 0;
    std::vector<json> extremal;
    std::uint64_t checked_large = 0;
    std::optional<json> violation;
};

class FamilyDfs {
public:
    FamilyDfs(std::size_t n, std::size_t ell, std::uint64_t node_cap)
        : n_(n), ell_(ell), cap_(node_cap), in_closure_(std::size_t{1} << n, 0) {
        for (Subset s = 0; s <= full_set(n); ++s)
            if (cardinality(s) % ell == 0) candidates_.push_back(s);
        std::sort(candidates_.begin(), candidates_.end(), lex_less);
        full_bound_ = pow2(n / ell);
    }

    const std::vector<Subset>& candidates() const noexcept { return candidates_; }

    FamilyDfsTask run_from(std::size_t first) {
        FamilyDfsTask out;
        std::vector<Subset> family;
        std::vector<Subset> closure;
        if (push(candidates_[first], family, closure)) {
            visit(family, out);
            descend(first + 1, family, closure, out);
        }
        return out;
    }

private:
    // Adds s and all s ∩ c; false (state restored) if some new set is not ℓ-divisible.
    bool push(Subset s, std::vector<Subset>& family, std::vector<Subset>& closure) {
        const std::size_t mark = closure.size();
        auto add = [&](Subset x) {
            if (in_closure_[x]) return true;
            if (cardinality(x) % ell_ != 0) return false;
            in_closure_[x] = 1;
            closure.push_back(x);
            return true;
        };
        bool ok = add(s);
        for (std::size_t i = 0; ok && i < mark; ++i) ok = add(closure[i] & s);
        if (!ok) {
            pop_to(mark, closure);
            return false;
        }
        family.push_back(s);
        marks_.push_back(mark);
        return true;
    }

    void pop(std::vector<Subset>& family, std::vector<Subset>& closure) {
        family.pop_back();
        pop_to(marks_.back(), closure);
        marks_.pop_back();
    }

    void pop_to(std::size_t mark, std::vector<Subset>& closure) {
        while (closure.size() > mark) {
            in_closure_[closure.back()] = 0;
            closure.pop_back();
        }
    }

    void visit(const std::vector<Subset>& family, FamilyDfsTask& out) {
        ++out.nodes;
        const std::uint64_t size = family.size();
        if (size >= out.max_found) {
            const SetFamily f(n_, family);
            if (size > out.max_found) {
                out.max_found = size;
                out.extremal_count = 0;
                out.extremal.clear();
            }
            ++out.extremal_count;
            if (out.extremal.size() < max_reported_instances) out.extremal.push_back(to_json(f));
        }
        if (2 * size > full_bound_) {
            ++out.checked_large;
            const SetFamily f(n_, family);
            const auto structure = atomic_structure_check(f, ell_);
            if (!structure.pass && !out.violation)
                out.violation = json{{"family", to_json(f)},
                                     {"atom_sizes", structure.details["atom_sizes"]},
                                     {"revalidated_divisible", is_kwise_divisible(f, 4 * ell_ * ell_, ell_).pass}};
        }
        if (size > full_bound_ && !out.violation)
            out.violation = json{{"family", to_json(SetFamily(n_, family))},
                                 {"revalidated_divisible", is_kwise_divisible(SetFamily(n_, family), 4 * ell_ * ell_, ell_).pass}};
    }

    void descend(std::size_t from, std::vector<Subset>& family, std::vector<Subset>& closure, FamilyDfsTask& out) {
        for (std::size_t i = from; i < candidates_.size(); ++i) {
            if (out.nodes >= cap_) {
                out.truncated = true;
                return;
            }
            if (!push(candidates_[i], family, closure)) continue;
            visit(family, out);
            descend(i + 1, family, closure, out);
            pop(family, closure);
            if (out.truncated) return;
        }
    }

    std::size_t n_;
    std::size_t ell_;
    std::uint64_t cap_;
    std::uint64_t full_bound_ = 0;
    std::vector<Subset> candidates_;
    std::vector<char> in_closure_;
    std::vector<std::size_t> marks_;
};

}  // namespace detail

inline constexpr std::size_t max_theorem4_ground = 10;

/// Every 4ℓ²-wise ℓ-divisible family on [n] has at most 2^⌊n/ℓ⌋ members, and
/// above 2^(⌊n/ℓ⌋-1) all its atoms have size ℓ. With 4ℓ² >= n, k-wise
/// divisibility is divisibility of the whole intersection closure, which the
/// search maintains incrementally while adding members in lexicographic order.
inline SearchReport verify_theorem4(std::size_t ell, std::size_t n, unsigned threads = default_threads()) {
    require(ell >= 1, "verify_theorem4: l must be positive");
    require(n >= 1 && n <= max_theorem4_ground, "verify_theorem4: n must lie in [1, 10]");
    require(4 * ell * ell >= n, "verify_theorem4: needs 4l^2 >= n so that closure divisibility is exact");
    const auto budget = budget_from_env(default_node_budget);
    const detail::FamilyDfs prototype(n, ell, budget);
    const std::size_t roots = prototype.candidates().size();

    auto tasks = parallel_tasks<detail::FamilyDfsTask>(roots, threads, [&](std::size_t first) {
        detail::FamilyDfs dfs(n, ell, budget);
        return dfs.run_from(first);
    });

    SearchReport report;
    report.theorem = "theorem4";
    report.params = {{"l", ell}, {"n", n}, {"k", 4 * ell * ell}};
    report.method =
        "depth-first search over families of l-divisible subsets added in lexicographic order, pruning any "
        "branch whose intersection closure contains a set of size not divisible by l";
    report.bound = detail::pow2(n / ell);

    // Merge whole tasks in order while they fit the node budget; the empty family is the root.
    std::uint64_t nodes = 1, large = 0;
    std::vector<detail::SweepTask> merged;
    for (const auto& t : tasks) {
        if (t.truncated || nodes + t.nodes > budget) {
            report.inconclusive = true;
            break;
        }
        nodes += t.nodes;
        large += t.checked_large;
        merged.push_back({t.nodes, t.nodes, t.max_found, t.extremal_count, t.extremal, t.checked_large, t.violation});
    }
    detail::merge_sweeps(report, merged);
    report.universe_size = nodes;
    report.admissible = nodes;
    report.pass = report.counterexample.is_null();
    report.details = {{"candidate_sets", roots},
                      {"node_budget", budget},
                      {"threshold", report.bound / 2},
                      {"families_above_threshold", large},
                      {"bound_attained", report.max_found == report.bound}};
    return report;
}

struct CheckTally {
    std::uint64_t runs = 0;
    std::uint64_t passed = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t failed = 0;

    void add(const VerificationReport& r) {
        ++runs;
        if (!r.hypothesis_met) ++vacuous;
        if (r.pass) ++passed;
        else ++failed;
    }
    void merge(const CheckTally& o) {
        runs += o.runs;
        passed += o.passed;
        vacuous += o.vacuous;
        failed += o.failed;
    }
    json to_json() const { return json{{"runs", runs}, {"passed", passed}, {"vacuous", vacuous}, {"failed", failed}}; }
};

inline const std::vector<std::string>& suite_checks() {
    static const std::vector<std::string> names{"kneser",         "kneser_chain_bound", "growth",
                                                "bridge",         "odlyzko_count",      "improved_odlyzko"};
    return names;
}

namespace detail {

struct SuiteTrial {
    std::vector<CheckTally> tallies;
    std::vector<json> failures;
};

inline SuiteTrial run_suite_trial(std::uint64_t seed, std::uint64_t trial) {
    InstanceRng rng(seed, trial);
    SuiteTrial out;
    out.tallies.resize(suite_checks().size());
    auto record = [&](std::size_t idx, const VerificationReport& r) {
        out.tallies[idx].add(r);
        if (!r.pass) {
            json f = r.to_json();
            f["trial"] = trial;
            out.failures.push_back(std::move(f));
        }
    };
    static const std::vector<std::uint32_t> primes{2, 3, 5};
    const PrimeField field(rng.pick(primes));
    const std::size_t n = rng.between(1, 10);
    const auto c = random_nonzero_code(rng, field, n);
    const auto d = random_nonzero_code(rng, field, n);

    record(0, kneser_check(c, d));
    record(1, kneser_chain_bound(c, rng.between(1, 4)));
    record(2, growth_check(restrict_code(c, c.support()), rng.between(1, 4)));

    const std::size_t fn = rng.between(1, 8);
    const std::uint32_t fp = rng.pick(primes);
    const auto family = random_family(rng, fn, fp);
    record(3, bridge_check(family, rng.between(1, 4), fp).report());

    const auto counted = odlyzko_count(c);
    VerificationReport odlyzko{"odlyzko_count", true, counted.pass, nullptr,
                               {{"count", counted.count}, {"bound", counted.bound}}};
    record(4, odlyzko);

    static const std::vector<std::uint32_t> odd_primes{3, 5};
    const std::uint32_t op = rng.pick(odd_primes);
    const auto odd_family = random_family(rng, rng.between(2, 8), op);
    const auto nonzero =
        std::count_if(odd_family.members().begin(), odd_family.members().end(), [](Subset s) { return s != 0; });
    if (nonzero >= 2) record(5, improved_odlyzko_check(odd_family, op));
    return out;
}

}  // namespace detail

/// Seeded batch of the code and bridge property checks; identical output for
/// a given (trials, seed) regardless of thread count.
inline SearchReport random_property_suite(std::uint64_t trials, std::uint64_t seed, unsigned threads = default_threads()) {
    require(trials >= 1, "random_property_suite: trials must be positive");
    constexpr std::uint64_t chunk = 256;
    const std::size_t chunks = static_cast<std::size_t>((trials + chunk - 1) / chunk);
    auto results = parallel_tasks<detail::SuiteTrial>(chunks, threads, [&](std::size_t c) {
        detail::SuiteTrial acc;
        acc.tallies.resize(suite_checks().size());
        const std::uint64_t end = std::min<std::uint64_t>(trials, (c + 1) * chunk);
        for (std::uint64_t t = c * chunk; t < end; ++t) {
            auto one = detail::run_suite_trial(seed, t);
            for (std::size_t i = 0; i < acc.tallies.size(); ++i) acc.tallies[i].merge(one.tallies[i]);
            for (auto& f : one.failures) acc.failures.push_back(std::move(f));
        }
        return acc;
    });

    std::vector<CheckTally> totals(suite_checks().size());
    json failures = json::array();
    std::uint64_t failure_count = 0;
    for (const auto& r : results) {
        for (std::size_t i = 0; i < totals.size(); ++i) totals[i].merge(r.tallies[i]);
        for (const auto& f : r.failures) {
            ++failure_count;
            if (failures.size() < 10) failures.push_back(f);
        }
    }
    SearchReport report;
    report.theorem = "suite";
    report.params = {{"trials", trials}, {"seed", seed}};
    report.method = "seeded random instances: p in {2,3,5}, n <= 10 for codes, n <= 8 for families";
    report.universe_size = trials;
    report.pass = failure_count == 0;
    json per_check = json::object();
    for (std::size_t i = 0; i < totals.size(); ++i) per_check[suite_checks()[i]] = totals[i].to_json();
    report.details = {{"checks", per_check}, {"failures", failure_count}};
    if (failure_count != 0) report.counterexample = failures;
    return report;
}

}  // namespace kneser_lab
