#pragma once

// Arithmetic in F_p and coordinate vectors of F_p^n.
//
// Residues are stored normalized to [0, p) in 16-bit cells, which covers every
// supported modulus (2 <= p <= 2^16). All values are immutable once built.

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kneser_lab/error.hpp"

namespace kneser_lab {

using Residue = std::uint32_t;
using Cell = std::uint16_t;
using Row = std::vector<Cell>;

inline bool is_prime(std::uint64_t value) {
    if (value < 2) return false;
    for (std::uint64_t d = 2; d * d <= value; ++d)
        if (value % d == 0) return false;
    return true;
}

class PrimeField {
public:
    static constexpr std::uint32_t max_modulus = 1u << 16;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        require(p >= 2 && p <= max_modulus, "field modulus must lie in [2, 65536], got " + std::to_string(p));
        require(is_prime(p), "field modulus must be prime, got " + std::to_string(p));
    }

    std::uint32_t p() const noexcept { return p_; }

    Residue normalize(std::int64_t value) const noexcept {
        auto r = value % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const noexcept { return (a + b) % p_; }
    Residue sub(Residue a, Residue b) const noexcept { return (a + p_ - b) % p_; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Residue pow(Residue base, std::uint64_t exponent) const noexcept {
        Residue result = 1 % p_;
        while (exponent != 0) {
            if (exponent & 1u) result = mul(result, base);
            base = mul(base, base);
            exponent >>= 1;
        }
        return result;
    }
    Residue inv(Residue a) const {
        require(a % p_ != 0, "zero has no inverse in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

class FieldVector {
public:
    FieldVector(PrimeField field, std::span<const std::int64_t> values) : field_(field) {
        coords_.reserve(values.size());
        for (auto v : values) coords_.push_back(static_cast<Cell>(field.normalize(v)));
    }
    FieldVector(PrimeField field, std::initializer_list<std::int64_t> values)
        : FieldVector(field, std::span<const std::int64_t>(values.begin(), values.size())) {}

    /// Takes cells that are already reduced mod p.
    static FieldVector from_cells(PrimeField field, Row cells) {
        for (auto c : cells) require(c < field.p(), "residue out of range for F_" + std::to_string(field.p()));
        return FieldVector(field, std::move(cells), 0);
    }
    static FieldVector zeros(PrimeField field, std::size_t n) { return FieldVector(field, Row(n, 0), 0); }
    static FieldVector ones(PrimeField field, std::size_t n) { return FieldVector(field, Row(n, 1), 0); }
    /// Characteristic vector 1_A of a 0-based index set.
    static FieldVector indicator(PrimeField field, std::size_t n, std::span<const std::size_t> indices) {
        Row cells(n, 0);
        for (auto i : indices) {
            require(i < n, "indicator index out of range");
            cells[i] = 1;
        }
        return FieldVector(field, std::move(cells), 0);
    }

    const PrimeField& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return coords_.size(); }
    Residue operator[](std::size_t i) const { return coords_[i]; }
    const Row& cells() const noexcept { return coords_; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](Cell c) { return c == 0; });
    }
    bool is_binary() const {
        return std::all_of(coords_.begin(), coords_.end(), [](Cell c) { return c <= 1; });
    }

    friend bool operator==(const FieldVector&, const FieldVector&) = default;
    friend auto operator<=>(const FieldVector& a, const FieldVector& b) { return a.coords_ <=> b.coords_; }

private:
    FieldVector(PrimeField field, Row cells, int) : field_(field), coords_(std::move(cells)) {}

    PrimeField field_;
    Row coords_;
};

inline void require_compatible(const FieldVector& u, const FieldVector& v) {
    require(u.field() == v.field(), "vectors live over different fields");
    require(u.size() == v.size(), "vector lengths differ: " + std::to_string(u.size()) + " vs " +
                                      std::to_string(v.size()));
}

/// Coordinate-wise (Schur) product.
inline FieldVector star(const FieldVector& u, const FieldVector& v) {
    require_compatible(u, v);
    const auto& f = u.field();
    Row out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Cell>(f.mul(u[i], v[i]));
    return FieldVector::from_cells(f, std::move(out));
}

inline FieldVector add(const FieldVector& u, const FieldVector& v) {
    require_compatible(u, v);
    const auto& f = u.field();
    Row out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Cell>(f.add(u[i], v[i]));
    return FieldVector::from_cells(f, std::move(out));
}

inline Residue inner(const FieldVector& u, const FieldVector& v) {
    require_compatible(u, v);
    std::uint64_t acc = 0;
    const std::uint64_t p = u.field().p();
    for (std::size_t i = 0; i < u.size(); ++i) acc = (acc + static_cast<std::uint64_t>(u[i]) * v[i]) % p;
    return static_cast<Residue>(acc);
}

/// 0-based indices of the nonzero coordinates.
inline std::vector<std::size_t> support(const FieldVector& u) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) out.push_back(i);
    return out;
}

// Text form: digit string for p <= 7 ("10210"), space-separated residues otherwise.

inline std::string to_string(const FieldVector& v) {
    std::ostringstream os;
    const bool compact = v.field().p() <= 7;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!compact && i != 0) os << ' ';
        os << v[i];
    }
    return os.str();
}

inline FieldVector parse_vector(PrimeField field, std::string_view text) {
    std::vector<std::int64_t> values;
    auto bad = [&](const std::string& why) { fail(ErrorKind::format, "bad vector '" + std::string(text) + "': " + why); };
    if (field.p() <= 7 && text.find(' ') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') bad("expected digits");
            values.push_back(c - '0');
        }
    } else {
        std::istringstream is{std::string(text)};
        std::string token;
        while (is >> token) {
            if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
                bad("expected non-negative integers");
            if (token.size() > 6) bad("residue too large");
            values.push_back(std::stoll(token));
        }
    }
    for (auto v : values)
        if (v >= static_cast<std::int64_t>(field.p())) bad("residue " + std::to_string(v) + " not in [0, p)");
    return FieldVector(field, values);
}

}  // namespace kneser_lab
