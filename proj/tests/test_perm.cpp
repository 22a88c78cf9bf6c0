#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dpo/canon.hpp"
#include "dpo/oracle.hpp"
#include "dpo/perm.hpp"

#include "support.hpp"

using namespace dpo;

namespace {

std::set<Perm> closure(std::size_t degree, const std::vector<Perm>& gens) {
    std::set<Perm> seen{identity_perm(degree)};
    std::vector<Perm> frontier{identity_perm(degree)};
    while (!frontier.empty()) {
        Perm cur = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            Perm nxt = compose(g, cur);
            if (seen.insert(nxt).second)
                frontier.push_back(nxt);
        }
    }
    return seen;
}

} // namespace

TEST_CASE("build_group") {
    SECTION("no generators give the trivial group") {
        auto g = build_group(4, {});
        REQUIRE(g.order() == 1);
        bool trunc = true;
        auto elems = g.elements(10, &trunc);
        REQUIRE(!trunc);
        REQUIRE(elems == std::vector<Perm>{identity_perm(4)});
    }
    SECTION("transposition and 4-cycle generate S4") {
        Perm t{1, 0, 2, 3};
        Perm c{1, 2, 3, 0};
        auto g = build_group(4, {t, c});
        REQUIRE(g.order() == 24);
        bool trunc = false;
        auto elems = g.elements(1000, &trunc);
        REQUIRE(!trunc);
        REQUIRE(std::set<Perm>(elems.begin(), elems.end()) == closure(4, {t, c}));
    }
    SECTION("4-cycle automorphism generators give order 8") {
        auto gens = canonicalize(dpotest::cycle_graph(4)).generators;
        REQUIRE(build_group(4, gens).order() == 8);
    }
    SECTION("invalid permutations are rejected") {
        REQUIRE_THROWS_AS(build_group(3, {Perm{0, 0, 1}}), InvalidPermutation);
        REQUIRE_THROWS_AS(build_group(3, {Perm{0, 1}}), InvalidPermutation);
    }
}

TEST_CASE("membership") {
    dpotest::Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = dpotest::random_graph(rng, 6, {"A"}, {"-"}, 0.4);
        auto gens = canonicalize(g).generators;
        auto group = build_group(g.vertex_count(), gens);
        bool trunc = false;
        for (const auto& e : group.elements(100000, &trunc))
            REQUIRE(group.contains(e));
        for (const auto& gen : gens)
            REQUIRE(group.contains(gen));
        // a random non-member is rejected
        auto all = closure(g.vertex_count(), gens);
        Perm outside = dpotest::random_perm(rng, g.vertex_count());
        if (!all.count(outside))
            REQUIRE(!group.contains(outside));
    }
}

TEST_CASE("element enumeration caps and reports truncation") {
    Perm t{1, 0, 2, 3};
    Perm c{1, 2, 3, 0};
    auto s4 = build_group(4, {t, c});
    bool trunc = false;
    auto elems = s4.elements(10, &trunc);
    REQUIRE(trunc);
    REQUIRE(elems.size() == 10);

    auto s3 = build_group(3, {Perm{1, 0, 2}, Perm{1, 2, 0}});
    auto all = s3.elements(100, &trunc);
    REQUIRE(!trunc);
    REQUIRE(all.size() == 6);
}

TEST_CASE("pointwise stabilizers match brute force") {
    auto square = dpotest::cycle_graph(4);
    auto gens = canonicalize(square).generators;
    auto aut = build_group(4, gens);

    SECTION("empty point set is the whole group") {
        REQUIRE(aut.pointwise_stabilizer({}).order() == aut.order());
    }
    SECTION("fixing one vertex of the 4-cycle leaves the reflection") {
        REQUIRE(aut.pointwise_stabilizer({0}).order() == 2);
    }
    SECTION("fixing two adjacent vertices is trivial") {
        REQUIRE(aut.pointwise_stabilizer({0, 1}).order() == 1);
    }
    SECTION("random graphs up to 9 vertices vs brute force") {
        dpotest::Rng rng(17);
        for (int trial = 0; trial < 25; ++trial) {
            auto g = dpotest::random_graph(rng, 7, {"A", "B"}, {"-"}, 0.4);
            auto group = build_group(g.vertex_count(), canonicalize(g).generators);
            std::vector<Vertex> points;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (rng.chance(0.3))
                    points.push_back(v);
            auto stab = group.pointwise_stabilizer(points);
            std::size_t expect = 0;
            for (const auto& p : brute_force_aut(g)) {
                bool fixes = true;
                for (Vertex pt : points)
                    fixes = fixes && p[pt] == pt;
                if (fixes)
                    ++expect;
            }
            REQUIRE(stab.order() == expect);
            bool trunc = false;
            for (const auto& e : stab.elements(10000, &trunc))
                for (Vertex pt : points)
                    REQUIRE(e[pt] == pt);
        }
    }
}

TEST_CASE("exists_smaller_image agrees with exhaustive search") {
    dpotest::Rng rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        auto g = dpotest::random_graph(rng, 6, {"A", "B"}, {"-"}, 0.5);
        const Vertex n = g.vertex_count();
        auto gens = canonicalize(g).generators;
        auto all = closure(n, gens);

        // random fixed set and disjoint test vector
        std::vector<Vertex> pool(n);
        for (Vertex v = 0; v < n; ++v)
            pool[v] = v;
        auto shuffled = dpotest::random_perm(rng, n);
        std::uint32_t nfixed = rng.below(n);
        std::uint32_t nvec = rng.below(n - nfixed + 1);
        std::vector<Vertex> fixed(shuffled.begin(), shuffled.begin() + nfixed);
        std::vector<Vertex> v(shuffled.begin() + nfixed, shuffled.begin() + nfixed + nvec);
        // w: a permutation of v's entries
        std::vector<Vertex> w = v;
        auto wperm = dpotest::random_perm(rng, static_cast<std::uint32_t>(w.size()));
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] = v[wperm[i]];

        bool expect = false;
        for (const auto& a : all) {
            bool fixes = true;
            for (Vertex f : fixed)
                fixes = fixes && a[f] == f;
            if (!fixes)
                continue;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (a[w[i]] < v[i]) {
                    expect = true;
                    break;
                }
                if (a[w[i]] > v[i])
                    break;
            }
            if (expect)
                break;
        }
        REQUIRE(exists_smaller_image(n, gens, fixed, w, v) == expect);
    }
}
