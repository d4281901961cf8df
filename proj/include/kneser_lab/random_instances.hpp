#pragma once

// Seeded generators for codes and families used by the property harnesses.
// Only raw engine output is consumed (no std distributions), so a seed gives
// the same instances on every standard library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "kneser_lab/linear_code.hpp"
#include "kneser_lab/set_family.hpp"

namespace kneser_lab {

class InstanceRng {
public:
    /// Independent stream per (seed, index) pair.
    InstanceRng(std::uint64_t seed, std::uint64_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish integer in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }
    bool chance(unsigned percent) { return next() % 100 < percent; }
    template <class T>
    const T& pick(const std::vector<T>& items) { return items[next() % items.size()]; }

private:
    std::mt19937_64 engine_;
};

enum class CodeShape { dense, sparse, binary, block };

/// A random code of F_p^n generated by `gens` vectors of the given shape.
/// Block codes are direct sums over a random set partition, so they have
/// nontrivial stabilizers.
inline LinearCode random_code(InstanceRng& rng, PrimeField field, std::size_t n, std::size_t gens, CodeShape shape) {
    const auto p = field.p();
    std::vector<FieldVector> vectors;
    std::vector<std::size_t> block_of(n, 0);
    if (shape == CodeShape::block) {
        const auto blocks = rng.between(1, std::max<std::size_t>(1, std::min<std::size_t>(n, 4)));
        for (auto& b : block_of) b = rng.between(0, blocks - 1);
    }
    for (std::size_t g = 0; g < gens; ++g) {
        std::vector<std::int64_t> cells(n, 0);
        const auto target_block = shape == CodeShape::block ? block_of[rng.between(0, n - 1)] : 0;
        for (std::size_t i = 0; i < n; ++i) {
            switch (shape) {
                case CodeShape::dense: cells[i] = static_cast<std::int64_t>(rng.between(0, p - 1)); break;
                case CodeShape::sparse: cells[i] = rng.chance(30) ? static_cast<std::int64_t>(rng.between(1, p - 1)) : 0; break;
                case CodeShape::binary: cells[i] = rng.chance(50) ? 1 : 0; break;
                case CodeShape::block:
                    cells[i] = block_of[i] == target_block ? static_cast<std::int64_t>(rng.between(0, p - 1)) : 0;
                    break;
            }
        }
        vectors.emplace_back(field, cells);
    }
    return span(field, n, vectors);
}

/// Random nonzero code; retries until nonzero (n >= 1 required).
inline LinearCode random_nonzero_code(InstanceRng& rng, PrimeField field, std::size_t n) {
    static const std::vector<CodeShape> shapes{CodeShape::dense, CodeShape::sparse, CodeShape::binary, CodeShape::block};
    for (;;) {
        const auto shape = rng.pick(shapes);
        auto code = random_code(rng, field, n, rng.between(1, n), shape);
        if (!code.is_zero()) return code;
    }
}

/// Random family on [n]: either uniform subsets, or unions of blocks of a
/// random partition whose block sizes are multiples of `block_unit` (so the
/// family is divisible to every order), optionally with one noisy member.
inline SetFamily random_family(InstanceRng& rng, std::size_t n, std::size_t block_unit) {
    const auto size = rng.between(1, 10);
    std::vector<Subset> members;
    if (rng.chance(50) || block_unit > n) {
        for (std::size_t i = 0; i < size; ++i) members.push_back(rng.next() & full_set(n));
        return SetFamily(n, std::move(members));
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.between(0, i - 1)]);
    std::vector<Subset> blocks;
    std::size_t used = 0;
    while (used + block_unit <= n) {
        const auto units = rng.between(1, std::max<std::size_t>(1, (n - used) / block_unit));
        Subset b = 0;
        for (std::size_t j = 0; j < units * block_unit; ++j) b |= Subset{1} << perm[used + j];
        blocks.push_back(b);
        used += units * block_unit;
        if (rng.chance(30)) break;
    }
    for (std::size_t i = 0; i < size; ++i) {
        Subset u = 0;
        for (auto b : blocks)
            if (rng.chance(50)) u |= b;
        members.push_back(u);
    }
    if (rng.chance(25)) members.push_back(rng.next() & full_set(n));
    return SetFamily(n, std::move(members));
}

/// Random unions of `blocks` consecutive blocks of size `block` on
/// [block * blocks]; divisible by `block` to every order.
inline SetFamily random_block_family(InstanceRng& rng, std::size_t block, std::size_t blocks) {
    const std::size_t n = block * blocks;
    std::vector<Subset> members;
    const auto count = rng.between(2, 8);
    for (std::size_t i = 0; i < count; ++i) {
        Subset u = 0;
        for (std::size_t b = 0; b < blocks; ++b)
            if (rng.chance(50)) u |= full_set(block) << (b * block);
        members.push_back(u);
    }
    return SetFamily(n, std::move(members));
}

/// d members whose coordinates realize random nonzero membership signatures
/// (each of the 2^d - 1 kept with the given percentage, once or twice). Dense
/// signature sets make V^<3> a hyperplane of the atom algebra, so these
/// families meet trivial-stabilizer hypotheses that need n >= 10.
inline SetFamily random_signature_family(InstanceRng& rng, std::size_t d, unsigned keep_percent) {
    std::vector<std::uint64_t> columns;
    for (std::uint64_t sig = 1; sig < (std::uint64_t{1} << d); ++sig) {
        if (!rng.chance(keep_percent)) continue;
        const auto copies = rng.between(1, 2);
        for (std::uint64_t j = 0; j < copies; ++j) columns.push_back(sig);
    }
    for (std::size_t i = columns.size(); i > 1; --i) std::swap(columns[i - 1], columns[rng.between(0, i - 1)]);
    if (columns.size() > max_ground_size) columns.resize(max_ground_size);
    std::vector<Subset> members(d, 0);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t g = 0; g < d; ++g)
            if ((columns[c] >> g) & 1u) members[g] |= Subset{1} << c;
    return SetFamily(columns.size(), std::move(members));
}

}  // namespace kneser_lab
