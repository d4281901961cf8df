#pragma once

// Linear codes (subspaces of F_p^n) kept in canonical reduced row-echelon form.
//
// Two codes are equal iff their RREF generator matrices are identical, so
// equality is a plain comparison of rows. Every operation returns a fresh
// canonical code; nothing is mutated after construction.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "kneser_lab/error.hpp"
#include "kneser_lab/prime_field.hpp"

namespace kneser_lab {

class LinearCode;

namespace detail {

// Incremental RREF: rows are kept fully reduced, pivot entries equal 1.
class EchelonBasis {
public:
    EchelonBasis(PrimeField field, std::size_t n) : field_(field), n_(n) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == n_; }

    // Reduces `v` in place against the basis; returns true iff it ends up zero.
    bool reduce(Row& v) const {
        const auto p = field_.p();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Residue c = v[pivots_[r]];
            if (c == 0) continue;
            axpy(v, p - c, rows_[r]);
        }
        return std::all_of(v.begin(), v.end(), [](Cell x) { return x == 0; });
    }

    bool insert(Row v) {
        if (full()) return false;
        if (reduce(v)) return false;
        std::size_t lead = 0;
        while (v[lead] == 0) ++lead;
        const Residue scale = field_.inv(v[lead]);
        if (scale != 1)
            for (auto& x : v) x = static_cast<Cell>(field_.mul(x, scale));
        const auto p = field_.p();
        for (auto& row : rows_) {
            const Residue c = row[lead];
            if (c != 0) axpy(row, p - c, v);
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(lead);
        return true;
    }

    inline LinearCode finish() &&;

private:
    void axpy(Row& target, Residue coef, const Row& source) const {
        const auto p = field_.p();
        if (p == 2) {
            for (std::size_t j = 0; j < n_; ++j) target[j] ^= source[j];
            return;
        }
        for (std::size_t j = 0; j < n_; ++j)
            if (source[j] != 0)
                target[j] = static_cast<Cell>((target[j] + std::uint64_t{coef} * source[j]) % p);
    }

    PrimeField field_;
    std::size_t n_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace detail

class LinearCode {
public:
    /// The zero code of F_p^n.
    LinearCode(PrimeField field, std::size_t n) : field_(field), n_(n) {}

    static LinearCode full_space(PrimeField field, std::size_t n) {
        detail::EchelonBasis basis(field, n);
        for (std::size_t i = 0; i < n; ++i) {
            Row e(n, 0);
            e[i] = 1;
            basis.insert(std::move(e));
        }
        return std::move(basis).finish();
    }

    /// Builds directly from rows already in RREF. Validates the form.
    static LinearCode from_rref(PrimeField field, std::size_t n, std::vector<Row> rows) {
        LinearCode code(field, n);
        std::size_t last = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            require(rows[r].size() == n, "row length mismatch");
            std::size_t lead = 0;
            while (lead < n && rows[r][lead] == 0) ++lead;
            require(lead < n && rows[r][lead] == 1, "RREF rows need a unit pivot");
            require(r == 0 || lead > last, "RREF pivots must strictly increase");
            for (std::size_t s = 0; s < rows.size(); ++s)
                require(s == r || rows[s][lead] == 0, "RREF pivot column must be otherwise zero");
            code.pivots_.push_back(lead);
            last = lead;
        }
        code.rows_ = std::move(rows);
        return code;
    }

    const PrimeField& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    bool is_zero() const noexcept { return rows_.empty(); }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    FieldVector row(std::size_t i) const { return FieldVector::from_cells(field_, rows_[i]); }
    std::vector<FieldVector> basis() const {
        std::vector<FieldVector> out;
        for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(row(i));
        return out;
    }

    /// 0-based indices where some codeword is nonzero.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n_; ++j)
            for (const auto& r : rows_)
                if (r[j] != 0) {
                    out.push_back(j);
                    break;
                }
        return out;
    }
    bool full_support() const { return support().size() == n_; }

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

private:
    friend class detail::EchelonBasis;

    PrimeField field_;
    std::size_t n_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivots_;
};

inline LinearCode detail::EchelonBasis::finish() && {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    LinearCode code(field_, n_);
    for (auto i : order) {
        code.rows_.push_back(std::move(rows_[i]));
        code.pivots_.push_back(pivots_[i]);
    }
    return code;
}

inline void require_compatible(const LinearCode& c, const LinearCode& d) {
    require(c.field() == d.field(), "codes live over different fields");
    require(c.length() == d.length(), "code lengths differ: " + std::to_string(c.length()) + " vs " +
                                          std::to_string(d.length()));
}

/// Row space of `vectors`, or the zero code of F_p^n when empty.
inline LinearCode span(PrimeField field, std::size_t n, std::span<const FieldVector> vectors) {
    detail::EchelonBasis basis(field, n);
    for (const auto& v : vectors) {
        require(v.field() == field, "span: vector over a different field");
        require(v.size() == n, "span: vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
        basis.insert(v.cells());
    }
    return std::move(basis).finish();
}

inline LinearCode span(std::span<const FieldVector> vectors) {
    require(!vectors.empty(), "span of an empty list needs an explicit field and length");
    return span(vectors.front().field(), vectors.front().size(), vectors);
}

inline LinearCode span(std::initializer_list<FieldVector> vectors) {
    return span(std::span<const FieldVector>(vectors.begin(), vectors.size()));
}

/// Orthogonal complement under the standard inner product.
inline LinearCode dual(const LinearCode& code) {
    const auto& f = code.field();
    const std::size_t n = code.length();
    std::vector<char> is_pivot(n, 0);
    for (auto c : code.pivots()) is_pivot[c] = 1;
    detail::EchelonBasis basis(f, n);
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Row x(n, 0);
        x[free_col] = 1;
        for (std::size_t r = 0; r < code.dim(); ++r)
            x[code.pivots()[r]] = static_cast<Cell>(f.neg(code.rows()[r][free_col]));
        basis.insert(std::move(x));
    }
    auto out = std::move(basis).finish();
    ensure(out.dim() + code.dim() == n, "dim C + dim dual(C) = n");
    return out;
}

inline bool contains(const LinearCode& code, const FieldVector& v) {
    require(v.field() == code.field() && v.size() == code.length(), "membership: vector incompatible with code");
    Row cells = v.cells();
    for (std::size_t r = 0; r < code.dim(); ++r) {
        const Residue c = cells[code.pivots()[r]];
        if (c == 0) continue;
        const Residue coef = code.field().neg(c);
        for (std::size_t j = 0; j < cells.size(); ++j)
            cells[j] = static_cast<Cell>(code.field().add(cells[j], code.field().mul(coef, code.rows()[r][j])));
    }
    return std::all_of(cells.begin(), cells.end(), [](Cell x) { return x == 0; });
}

/// C ⊆ D.
inline bool is_subcode(const LinearCode& c, const LinearCode& d) {
    require_compatible(c, d);
    for (std::size_t i = 0; i < c.dim(); ++i)
        if (!contains(d, c.row(i))) return false;
    return true;
}

inline LinearCode sum(const LinearCode& c, const LinearCode& d) {
    require_compatible(c, d);
    detail::EchelonBasis basis(c.field(), c.length());
    for (const auto& r : c.rows()) basis.insert(r);
    for (const auto& r : d.rows()) basis.insert(r);
    return std::move(basis).finish();
}

inline LinearCode intersect(const LinearCode& c, const LinearCode& d) {
    require_compatible(c, d);
    return dual(sum(dual(c), dual(d)));
}

/// Projection onto the 0-based coordinate list `coords` (order preserved, ambient length |coords|).
inline LinearCode restrict_code(const LinearCode& code, std::span<const std::size_t> coords) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
        require(coords[i] < code.length(), "restrict_code: coordinate out of range");
        for (std::size_t j = 0; j < i; ++j) require(coords[i] != coords[j], "restrict_code: repeated coordinate");
    }
    detail::EchelonBasis basis(code.field(), coords.size());
    for (const auto& r : code.rows()) {
        Row projected(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) projected[i] = r[coords[i]];
        basis.insert(std::move(projected));
    }
    return std::move(basis).finish();
}

/// Span of all b * b' over basis rows of C and D.
inline LinearCode schur_product(const LinearCode& c, const LinearCode& d) {
    require_compatible(c, d);
    const auto& f = c.field();
    const std::size_t n = c.length();
    detail::EchelonBasis basis(f, n);
    const bool same = (&c == &d) || c == d;
    Row prod(n);
    for (std::size_t i = 0; i < c.dim() && !basis.full(); ++i) {
        const auto& a = c.rows()[i];
        for (std::size_t j = same ? i : 0; j < d.dim() && !basis.full(); ++j) {
            const auto& b = d.rows()[j];
            for (std::size_t k = 0; k < n; ++k) prod[k] = static_cast<Cell>(f.mul(a[k], b[k]));
            basis.insert(prod);
        }
    }
    return std::move(basis).finish();
}

/// C^<k> = C^<k-1> * C, stopping early at the first fixed point.
inline LinearCode power(const LinearCode& code, std::size_t k) {
    require(k >= 1, "power: exponent must be at least 1");
    LinearCode current = code;
    for (std::size_t i = 2; i <= k; ++i) {
        LinearCode next = schur_product(current, code);
        if (next == current) break;
        current = std::move(next);
    }
    return current;
}

/// All powers C^<1>, ..., C^<k> (index 0 holds C^<1>).
inline std::vector<LinearCode> power_chain(const LinearCode& code, std::size_t k) {
    require(k >= 1, "power_chain: exponent must be at least 1");
    std::vector<LinearCode> out{code};
    bool fixed = false;
    for (std::size_t i = 2; i <= k; ++i) {
        if (fixed) {
            out.push_back(out.back());
            continue;
        }
        LinearCode next = schur_product(out.back(), code);
        fixed = next == out.back();
        out.push_back(std::move(next));
    }
    return out;
}

/// True iff every codeword of `code` has coordinate sum 0, i.e. code ⊆ 1^⊥.
inline bool orthogonal_to_ones(const LinearCode& code) {
    const auto p = code.field().p();
    for (const auto& r : code.rows()) {
        std::uint64_t s = 0;
        for (auto x : r) s += x;
        if (s % p != 0) return false;
    }
    return true;
}

inline constexpr std::size_t max_binary_enumeration_dim = 30;

/// Visits every v in C ∩ {0,1}^n as a row of 0/1 cells.
///
/// The RREF basis is in systematic form on its pivot columns, so a combination
/// is binary only if every coefficient is 0 or 1. The 2^dim tuples are walked in
/// Gray-code order with an incremental count of non-binary coordinates.
template <class Visitor>
void for_each_binary_point(const LinearCode& code, Visitor&& visit) {
    const std::size_t r = code.dim();
    if (r > max_binary_enumeration_dim)
        fail(ErrorKind::budget, "binary_points: enumeration too large (dim " + std::to_string(r) + " > " +
                                    std::to_string(max_binary_enumeration_dim) + ")");
    const std::size_t n = code.length();
    const auto p = code.field().p();
    Row acc(n, 0);
    std::size_t non_binary = 0;
    visit(static_cast<const Row&>(acc));
    const std::uint64_t total = std::uint64_t{1} << r;
    std::uint64_t gray = 0;
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(step));
        gray ^= std::uint64_t{1} << bit;
        const bool adding = (gray >> bit) & 1u;
        const auto& row = code.rows()[bit];
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] == 0) continue;
            const bool was_bad = acc[j] > 1;
            acc[j] = static_cast<Cell>(adding ? (acc[j] + row[j]) % p : (acc[j] + p - row[j]) % p);
            const bool is_bad = acc[j] > 1;
            non_binary += is_bad;
            non_binary -= was_bad;
        }
        if (non_binary == 0) visit(static_cast<const Row&>(acc));
    }
}

inline std::vector<FieldVector> binary_points(const LinearCode& code) {
    std::vector<Row> rows;
    for_each_binary_point(code, [&](const Row& r) { rows.push_back(r); });
    ensure(rows.size() <= (std::uint64_t{1} << code.dim()), "|V ∩ {0,1}^n| <= 2^dim V");
    std::sort(rows.begin(), rows.end());
    std::vector<FieldVector> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(FieldVector::from_cells(code.field(), std::move(r)));
    return out;
}

/// Solves Σ λ_i g_i = target over F_p. Free variables are set to 0.
inline std::optional<std::vector<Residue>> solve_combination(std::span<const FieldVector> generators,
                                                             const FieldVector& target) {
    const auto& f = target.field();
    const std::size_t n = target.size();
    const std::size_t m = generators.size();
    for (const auto& g : generators) require(g.field() == f && g.size() == n, "solve: incompatible generator");
    // Augmented n x (m+1) system, one equation per coordinate.
    std::vector<std::vector<Residue>> a(n, std::vector<Residue>(m + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = generators[j][i];
        a[i][m] = target[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(a[sel], a[row]);
        const Residue scale = f.inv(a[row][col]);
        for (auto& x : a[row]) x = f.mul(x, scale);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Residue c = a[i][col];
            for (std::size_t j = 0; j <= m; ++j) a[i][j] = f.sub(a[i][j], f.mul(c, a[row][j]));
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (a[i][m] != 0) return std::nullopt;
    std::vector<Residue> lambda(m, 0);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) lambda[pivot_cols[i]] = a[i][m];
    return lambda;
}

// Code file: "p n" then one generator row per line (space-separated residues).

inline void write_code(std::ostream& os, const LinearCode& code) {
    os << code.field().p() << ' ' << code.length() << '\n';
    for (const auto& r : code.rows()) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
        os << '\n';
    }
}

inline std::string to_text(const LinearCode& code) {
    std::ostringstream os;
    write_code(os, code);
    return os.str();
}

inline LinearCode read_code(std::istream& is) {
    auto bad = [](const std::string& why) -> void { fail(ErrorKind::format, "code file: " + why); };
    std::string line;
    while (std::getline(is, line) && line.find_first_not_of(" \t\r") == std::string::npos) {}
    std::istringstream header(line);
    long long p = 0, n = -1;
    if (!(header >> p >> n) || n < 0) bad("first line must be 'p n'");
    std::string extra;
    if (header >> extra) bad("unexpected text after 'p n'");
    if (p < 2 || p > PrimeField::max_modulus || !is_prime(static_cast<std::uint64_t>(p))) bad("p must be a supported prime");
    PrimeField field(static_cast<std::uint32_t>(p));
    std::vector<FieldVector> gens;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        std::vector<std::int64_t> values;
        std::string token;
        while (row >> token) {
            if (token.size() > 6 || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
                bad("row entries must be residues");
            const auto v = std::stoll(token);
            if (v >= p) bad("residue " + token + " not in [0, p)");
            values.push_back(v);
        }
        if (values.size() != static_cast<std::size_t>(n)) bad("row has " + std::to_string(values.size()) + " entries, expected " + std::to_string(n));
        gens.emplace_back(field, values);
    }
    return span(field, static_cast<std::size_t>(n), gens);
}

}  // namespace kneser_lab
