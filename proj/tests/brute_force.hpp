#pragma once

// Test-only oracles that work on explicit sets of codewords. They never call
// the RREF machinery, so they stay independent of the code under test.

#include <cstdint>
#include <set>
#include <vector>

#include "kneser_lab/linear_code.hpp"

namespace brute {

using Word = std::vector<std::uint32_t>;
using WordSet = std::set<Word>;

inline Word word(const kneser_lab::FieldVector& v) { return Word(v.cells().begin(), v.cells().end()); }

/// Closure of {0} under adding multiples of each generator.
inline WordSet span_words(const std::vector<Word>& gens, std::uint32_t p, std::size_t n) {
    WordSet space{Word(n, 0)};
    for (const auto& g : gens) {
        WordSet next;
        for (const auto& w : space)
            for (std::uint32_t c = 0; c < p; ++c) {
                Word x(n);
                for (std::size_t i = 0; i < n; ++i) x[i] = (w[i] + c * g[i]) % p;
                next.insert(std::move(x));
            }
        space = std::move(next);
    }
    return space;
}

inline WordSet words_of(const kneser_lab::LinearCode& code) {
    std::vector<Word> gens;
    for (const auto& r : code.rows()) gens.emplace_back(r.begin(), r.end());
    return span_words(gens, code.field().p(), code.length());
}

inline std::vector<Word> all_words(std::uint32_t p, std::size_t n) {
    std::vector<Word> out;
    Word x(n, 0);
    for (;;) {
        out.push_back(x);
        std::size_t i = 0;
        while (i < n && ++x[i] == p) x[i++] = 0;
        if (i == n) break;
    }
    return out;
}

inline Word star(const Word& a, const Word& b, std::uint32_t p) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i] % p;
    return out;
}

inline std::uint32_t dot(const Word& a, const Word& b, std::uint32_t p) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return static_cast<std::uint32_t>(s % p);
}

/// Span of all c*d over every pair of codewords.
inline WordSet product_words(const WordSet& c, const WordSet& d, std::uint32_t p, std::size_t n) {
    std::set<Word> gens;
    for (const auto& a : c)
        for (const auto& b : d) gens.insert(star(a, b, p));
    return span_words(std::vector<Word>(gens.begin(), gens.end()), p, n);
}

inline WordSet dual_words(const WordSet& c, std::uint32_t p, std::size_t n) {
    WordSet out;
    for (const auto& x : all_words(p, n)) {
        bool ok = true;
        for (const auto& w : c)
            if (dot(x, w, p) != 0) {
                ok = false;
                break;
            }
        if (ok) out.insert(x);
    }
    return out;
}

/// {x : x*c ∈ C for every codeword c}.
inline WordSet stabilizer_words(const WordSet& c, std::uint32_t p, std::size_t n) {
    WordSet out;
    for (const auto& x : all_words(p, n)) {
        bool ok = true;
        for (const auto& w : c)
            if (!c.contains(star(x, w, p))) {
                ok = false;
                break;
            }
        if (ok) out.insert(x);
    }
    return out;
}

inline std::size_t log_p(std::size_t size, std::uint32_t p) {
    std::size_t d = 0;
    while (size > 1) {
        size /= p;
        ++d;
    }
    return d;
}

}  // namespace brute
