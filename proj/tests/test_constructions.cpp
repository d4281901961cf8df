#include <catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "kneser_lab/bridge.hpp"
#include "kneser_lab/constructions.hpp"

using namespace kneser_lab;

TEST_CASE("atomic families", "[constructions]") {
    const auto f = atomic_family({2, 2, 2});
    CHECK(f.ground_size() == 6);
    CHECK(f.size() == 8);
    CHECK(atomic_family({3, 3}).size() == 4);
    const auto single = atomic_family({5});
    CHECK(single.members() == std::vector<Subset>{0, full_set(5)});

    const auto g = atomic_family({1, 2, 3});
    for (auto a : g.members())
        for (auto b : g.members()) {
            CHECK(g.contains(a & b));
            CHECK(g.contains(a | b));
        }
    for (std::size_t k = 1; k <= 6; ++k) {
        CHECK(is_kwise_divisible(atomic_family({2, 4, 6}), k, 2).pass);
        CHECK_FALSE(is_kwise_divisible(atomic_family({2, 3}), k, 2).pass);
    }

    CHECK_THROWS_AS(atomic_family({0, 2}), Error);
    CHECK_THROWS_AS(atomic_family({20, 5}), Error);
    CHECK_THROWS_AS(atomic_family(std::vector<std::size_t>(21, 1)), Error);
    CHECK(atomic_family(std::vector<std::size_t>(20, 1)).size() == (1u << 20));
}

TEST_CASE("order-12 Hadamard matrix", "[constructions]") {
    const auto h = paley_hadamard_12();
    REQUIRE(h.order() == 12);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) {
            int dot = 0;
            for (std::size_t c = 0; c < 12; ++c) dot += h(i, c) * h(j, c);
            CHECK(dot == (i == j ? 12 : 0));
        }
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = i + 1; j < 12; ++j) {
            int agree = 0;
            for (std::size_t c = 0; c < 12; ++c) agree += h(i, c) == h(j, c);
            CHECK(agree == 6);
        }
    for (std::size_t c = 0; c < 12; ++c) CHECK(h(0, c) == 1);

    std::ostringstream os;
    write_matrix(os, h);
    CHECK(os.str().rfind("12\n1 1 1 1 1 1 1 1 1 1 1 1\n", 0) == 0);

    CHECK_THROWS_AS(HadamardMatrix({{1, 1}, {1, 1}}), Error);
    CHECK_THROWS_AS(HadamardMatrix({{1, 0}, {1, -1}}), Error);
    CHECK_NOTHROW(HadamardMatrix({{1, 1}, {1, -1}}));
}

TEST_CASE("Frankl-Odlyzko family, one block", "[constructions]") {
    const auto f = frankl_odlyzko_family(1);
    CHECK(f.ground_size() == 12);
    CHECK(f.size() == 24);
    CHECK(f.size() > (1u << (12 / 3)));
    CHECK(f.contains(0));
    CHECK(f.contains(full_set(12)));

    std::set<std::size_t> sizes;
    for (auto a : f.members())
        for (auto b : f.members()) sizes.insert(cardinality(a & b));
    CHECK(sizes == std::set<std::size_t>{0, 3, 6, 12});
    CHECK(is_kwise_divisible(f, 2, 3).pass);
    CHECK_FALSE(is_kwise_divisible(f, 3, 3).pass);

    // |A ∩ B| = (n + Σa + Σb + Σab) / 4 for the ±1 rows a, b of A, B
    auto signs = [](Subset s) {
        std::vector<int> v(12);
        for (std::size_t i = 0; i < 12; ++i) v[i] = ((s >> i) & 1u) ? 1 : -1;
        return v;
    };
    for (auto a : f.members())
        for (auto b : f.members()) {
            const auto x = signs(a), y = signs(b);
            int sa = 0, sb = 0, sab = 0;
            for (std::size_t i = 0; i < 12; ++i) {
                sa += x[i];
                sb += y[i];
                sab += x[i] * y[i];
            }
            CHECK(4 * static_cast<int>(cardinality(a & b)) == 12 + sa + sb + sab);
        }

    const auto part = atoms(f);
    CHECK(part.count() == 12);
    for (auto a : part.atoms) CHECK(cardinality(a) == 1);
}

TEST_CASE("Frankl-Odlyzko family, several blocks", "[constructions]") {
    const auto f = frankl_odlyzko_family(2);
    CHECK(f.ground_size() == 24);
    CHECK(f.size() == 576);
    CHECK(is_kwise_divisible(f, 2, 3).pass);
    CHECK(restrict(f, full_set(12)) == frankl_odlyzko_family(1));
    CHECK(restrict(f, full_set(24) & ~full_set(12)) == frankl_odlyzko_family(1));
    CHECK(frankl_odlyzko_family(3).size() == 13824);
    CHECK_THROWS_AS(frankl_odlyzko_family(0), Error);
    CHECK_THROWS_AS(frankl_odlyzko_family(4), Error);
}
