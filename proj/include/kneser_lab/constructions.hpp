#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "kneser_lab/error.hpp"
#include "kneser_lab/set_family.hpp"

namespace kneser_lab {

inline constexpr std::size_t max_atomic_parts = 20;
inline constexpr std::size_t max_atomic_ground = 24;

/// All 2^a unions of consecutive blocks of the given sizes (∅ and [n] included).
inline SetFamily atomic_family(std::span<const std::size_t> part_sizes) {
    require(part_sizes.size() <= max_atomic_parts, "atomic_family: at most 20 parts");
    for (auto s : part_sizes) require(s >= 1, "atomic_family: part sizes must be positive");
    const std::size_t n = std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0});
    require(n <= max_atomic_ground, "atomic_family: total size must be at most 24");
    std::vector<Subset> blocks;
    std::size_t offset = 0;
    for (auto s : part_sizes) {
        blocks.push_back(full_set(s) << offset);
        offset += s;
    }
    std::vector<Subset> members;
    members.reserve(std::size_t{1} << blocks.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks.size()); ++mask) {
        Subset u = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if ((mask >> b) & 1u) u |= blocks[b];
        members.push_back(u);
    }
    return SetFamily(n, std::move(members));
}

inline SetFamily atomic_family(std::initializer_list<std::size_t> part_sizes) {
    return atomic_family(std::span<const std::size_t>(part_sizes.begin(), part_sizes.size()));
}

class HadamardMatrix {
public:
    explicit HadamardMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
        const std::size_t n = entries_.size();
        require(n >= 1, "Hadamard matrix must be nonempty");
        for (const auto& row : entries_) {
            require(row.size() == n, "Hadamard matrix must be square");
            for (int x : row) require(x == 1 || x == -1, "Hadamard entries must be +1 or -1");
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long dot = 0;
                for (std::size_t c = 0; c < n; ++c) dot += entries_[i][c] * entries_[j][c];
                require(dot == (i == j ? static_cast<long>(n) : 0), "H H^T must equal n I");
            }
    }

    std::size_t order() const noexcept { return entries_.size(); }
    int operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const std::vector<std::vector<int>>& entries() const noexcept { return entries_; }

private:
    std::vector<std::vector<int>> entries_;
};

/// Order-12 Hadamard matrix, Paley type I over F_11.
///
/// H = I + S with S = [[0, 1ᵀ], [-1, Q]] and Q the Jacobsthal matrix
/// Q(i,j) = χ(j - i). The first row comes out all +1.
inline HadamardMatrix paley_hadamard_12() {
    constexpr int q = 11;
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (int x = 1; x < q; ++x) chi[(x * x) % q] = 1;
    const std::size_t n = q + 1;
    std::vector<std::vector<int>> h(n, std::vector<int>(n, 0));
    for (std::size_t j = 1; j < n; ++j) {
        h[0][j] = 1;
        h[j][0] = -1;
    }
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) h[i + 1][j + 1] = chi[((j - i) % q + q) % q];
    for (std::size_t i = 0; i < n; ++i) h[i][i] += 1;
    return HadamardMatrix(std::move(h));
}

inline void write_matrix(std::ostream& os, const HadamardMatrix& h) {
    os << h.order() << '\n';
    for (const auto& row : h.entries()) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << '\n';
    }
}

inline constexpr std::size_t max_frankl_odlyzko_m = 3;

/// The 24 sets {i : H(r,i) = +1} and their complements on [12], and for m > 1
/// all unions of independent choices on m disjoint blocks of 12.
inline SetFamily frankl_odlyzko_family(std::size_t m) {
    require(m >= 1 && m <= max_frankl_odlyzko_m, "frankl_odlyzko_family: m must lie in [1, 3]");
    const auto h = paley_hadamard_12();
    std::vector<Subset> base;
    for (std::size_t r = 0; r < h.order(); ++r) {
        Subset s = 0;
        for (std::size_t i = 0; i < h.order(); ++i)
            if (h(r, i) == 1) s |= Subset{1} << i;
        base.push_back(s);
        base.push_back(full_set(12) & ~s);
    }
    const SetFamily block(12, base);
    ensure(block.size() == 24, "row/complement construction yields 24 distinct sets");

    std::vector<Subset> members{0};
    for (std::size_t b = 0; b < m; ++b) {
        std::vector<Subset> next;
        next.reserve(members.size() * block.size());
        for (auto prefix : members)
            for (auto s : block.members()) next.push_back(prefix | (s << (12 * b)));
        members = std::move(next);
    }
    return SetFamily(12 * m, std::move(members));
}

}  // namespace kneser_lab
