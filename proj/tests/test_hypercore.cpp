#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loomlab/canonical.hpp"
#include "loomlab/hypergraph.hpp"
#include "loomlab/weave.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace loomlab;

namespace {

Hypergraph vane_c() {
    return Hypergraph::make(9, {{0, 3, 6},
                                {1, 4, 7},
                                {2, 5, 8},
                                {0, 4, 8},
                                {0, 4, 7},
                                {1, 3, 6},
                                {1, 4, 8},
                                {2, 5, 7}});
}

Hypergraph vane_d() {
    return Hypergraph::make(9, {{0, 1, 2},
                                {3, 4, 5},
                                {6, 7, 8},
                                {2, 4, 6},
                                {0, 1, 5},
                                {2, 3, 4},
                                {3, 7, 8},
                                {4, 5, 6}});
}

Hypergraph grid3_rows_cols() {
    return Hypergraph::make(
        9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
}

Hypergraph grid3_perms() {
    return Hypergraph::make(
        9, {{0, 4, 8}, {0, 5, 7}, {1, 3, 8}, {1, 5, 6}, {2, 3, 7}, {2, 4, 6}});
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Hypergraph random_hypergraph(int n, int max_edges, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ne(1, max_edges);
    std::uniform_int_distribution<int> size(1, std::max(1, n / 2));
    std::uniform_int_distribution<int> vert(0, n - 1);
    std::vector<BitSet> edges;
    int count = ne(rng);
    for (int i = 0; i < count; ++i) {
        BitSet e(n);
        int k = size(rng);
        for (int j = 0; j < k; ++j) e.set(vert(rng));
        if (e.any()) edges.push_back(e);
    }
    if (edges.empty()) edges.push_back(BitSet::from_indices(n, {0}));
    return Hypergraph::from_edge_sets(n, edges);
}

}  // namespace

TEST_CASE("make_hypergraph canonicalizes and validates") {
    Hypergraph v = vane_c();
    CHECK(v.size() == 8);
    CHECK(v.n == 9);

    Hypergraph u = Hypergraph::make(1, {{0}});
    CHECK(u.size() == 1);
    CHECK(u.edges[0].count() == 1);

    Hypergraph d = Hypergraph::make(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(d.size() == 2);

    CHECK_THROWS_AS(Hypergraph::make(3, {{0, 5}}), IndexOutOfRange);
    CHECK_THROWS_AS(Hypergraph::make(3, {{}}), EmptyEdge);
}

TEST_CASE("edges are sorted by size then numeric value") {
    Hypergraph h = Hypergraph::make(5, {{2, 3, 4}, {0}, {1, 2}, {0, 1}});
    CHECK(h.edges[0].count() == 1);
    CHECK(h.edges[1].to_indices() == std::vector<int>{0, 1});
    CHECK(h.edges[2].to_indices() == std::vector<int>{1, 2});
    CHECK(h.edges[3].count() == 3);
}

TEST_CASE("is_uniform") {
    CHECK(is_uniform(vane_c()) == 3);
    CHECK_FALSE(is_uniform(Hypergraph::make(2, {{0}, {0, 1}})).has_value());
    CHECK_THROWS_AS(is_uniform(Hypergraph::from_edge_sets(3, {})), EmptyHypergraph);
    // stars of a 5-regular graph have size 5
    Hypergraph st = star_hypergraph(complete_graph(6));
    CHECK(is_uniform(st) == 5);
}

TEST_CASE("is_orthogonal with witness") {
    CHECK(is_orthogonal(vane_c(), vane_d()).ok);
    auto bad = is_orthogonal(Hypergraph::make(2, {{0, 1}}), Hypergraph::make(2, {{0, 1}}));
    CHECK_FALSE(bad.ok);
    CHECK(bad.a_index == 0);
    CHECK(bad.b_index == 0);
    CHECK(is_orthogonal(grid3_rows_cols(), grid3_perms()).ok);
    CHECK_THROWS_AS(is_orthogonal(vane_c(), Hypergraph::make(3, {{0}})), UniverseMismatch);
}

TEST_CASE("orthogonality is symmetric") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Hypergraph a = random_hypergraph(8, 4, rng);
        Hypergraph b = random_hypergraph(8, 4, rng);
        CHECK(is_orthogonal(a, b).ok == is_orthogonal(b, a).ok);
    }
}

TEST_CASE("join of singletons and counted joins") {
    Hypergraph a = Hypergraph::make(2, {{0}});
    Hypergraph b = Hypergraph::make(2, {{1}});
    Hypergraph j = join(a, b);
    CHECK(j.size() == 1);
    CHECK(j.edges[0].to_indices() == std::vector<int>{0, 1});

    // |PM(K6)| * |ST(K10)| = 15 * 10 = 150 edges of size 3 + 9
    Hypergraph pm6 = pm_hypergraph(complete_graph(6));   // on 15 vertices
    Hypergraph st10 = star_hypergraph(complete_graph(10));  // on 45 vertices
    // oracle for the factor sizes: (2k)!/(k! 2^k) = 15 matchings, degree stars = 10
    long long pm_count = 1;
    for (int i = 5; i >= 1; i -= 2) pm_count *= i;  // 5!! = 15
    CHECK(pm6.size() == (int)pm_count);
    CHECK(st10.size() == 10);
    int n = 15 + 45;
    Hypergraph big = join(shift(pm6, 0, n), shift(st10, 15, n));
    CHECK(big.size() == 150);
    CHECK(is_uniform(big) == 12);

    CHECK_THROWS_AS(join(Hypergraph::make(2, {{0}}), Hypergraph::make(2, {{0}})),
                    UniverseOverlap);
}

TEST_CASE("restrict drops empties and dedups") {
    Hypergraph h = Hypergraph::make(4, {{0, 1}, {2, 3}});
    int dropped = 0;
    Hypergraph r = restrict_to(h, BitSet::from_indices(4, {0, 1}), &dropped);
    CHECK(r.size() == 1);
    CHECK(dropped == 1);
    // identity on the full universe
    Hypergraph full = restrict_to(vane_c(), BitSet::full(9));
    CHECK(full == vane_c());
}

TEST_CASE("join then restrict recovers a factor") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        Hypergraph a = random_hypergraph(5, 4, rng);
        Hypergraph b0 = random_hypergraph(4, 3, rng);
        int n = 9;
        Hypergraph A = shift(a, 0, n), B = shift(b0, 5, n);
        Hypergraph j = join(A, B);
        BitSet va = BitSet::from_indices(n, {0, 1, 2, 3, 4});
        CHECK(restrict_to(j, va) == A);
    }
}

TEST_CASE("connected components partition edges") {
    Hypergraph h = Hypergraph::make(7, {{0, 1}, {1, 2}, {4, 5, 6}});
    Components c = connected_components(h);
    CHECK(c.parts.size() == 2);
    // every edge inside exactly one part
    for (int e = 0; e < h.size(); ++e) {
        int owners = 0;
        for (size_t p = 0; p < c.parts.size(); ++p)
            if (h.edges[e].is_subset_of(c.parts[p])) ++owners;
        CHECK(owners == 1);
    }
    Hypergraph single = Hypergraph::make(4, {{0, 1, 2, 3}});
    CHECK(connected_components(single).parts.size() == 1);
}

TEST_CASE("star") {
    Hypergraph tri = Hypergraph::make(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(star(tri, 1).size() == 2);
    Hypergraph k6 = complete_graph(6).h;
    CHECK(star(k6, 0).size() == 5);  // oracle: degree of K6
    CHECK_THROWS_AS(star(tri, 5), IndexOutOfRange);
}

TEST_CASE("is_r_partite") {
    // rows+columns of the 3x3 grid admit a 3-partition; verify returned sides
    auto sides = is_r_partite(grid3_rows_cols());
    REQUIRE(sides.has_value());
    CHECK(sides->size() == 3);
    for (const auto& e : grid3_rows_cols().edges)
        for (const auto& side : *sides) CHECK(e.intersection_count(side) == 1);

    auto single = is_r_partite(Hypergraph::make(4, {{0, 1, 2, 3}}));
    CHECK(single.has_value());

    CHECK_FALSE(is_r_partite(fano_plane()).has_value());
    CHECK_THROWS_AS(is_r_partite(Hypergraph::make(2, {{0}, {0, 1}})), NotUniform);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(23);
    std::vector<Hypergraph> pool = {vane_c(), grid3_rows_cols(), grid3_perms(),
                                    fano_plane()};
    for (const auto& h : pool) {
        auto [canon, cert] = canonical_form(h);
        for (int t = 0; t < 100; ++t) {
            auto p = random_perm(h.n, rng);
            auto [canon2, cert2] = canonical_form(apply_perm(h, p));
            CHECK(canon2 == canon);
        }
    }
}

TEST_CASE("isomorphic returns a checkable witness") {
    auto id = isomorphic(vane_c(), vane_c());
    REQUIRE(id.has_value());
    CHECK(apply_perm(vane_c(), id->perm) == vane_c());

    std::mt19937_64 rng(5);
    auto p = random_perm(9, rng);
    auto w = isomorphic(grid3_perms(), apply_perm(grid3_perms(), p));
    REQUIRE(w.has_value());
    CHECK(apply_perm(grid3_perms(), w->perm) == apply_perm(grid3_perms(), p));

    // rows+columns vs the vane first component: different structures
    CHECK_FALSE(isomorphic(grid3_rows_cols(), vane_c()).has_value());
}

TEST_CASE("pair canonicalization keeps the sides apart") {
    auto c1 = canonical_pair(grid3_rows_cols(), grid3_perms());
    auto c2 = canonical_pair(grid3_rows_cols(), grid3_perms());
    CHECK(c1.code == c2.code);
    std::mt19937_64 rng(3);
    auto p = random_perm(9, rng);
    auto c3 = canonical_pair(apply_perm(grid3_rows_cols(), p), apply_perm(grid3_perms(), p));
    CHECK(c3.code == c1.code);
    auto mixed = pair_isomorphic(grid3_rows_cols(), grid3_perms(), vane_c(), vane_d());
    CHECK_FALSE(mixed.has_value());
}

TEST_CASE("shift and compact round trip") {
    Hypergraph h = Hypergraph::make(4, {{0, 1}, {2, 3}});
    Hypergraph s = shift(h, 3, 8);
    CHECK(s.edges[0].to_indices() == std::vector<int>{3, 4});
    std::vector<int> old_ids;
    Hypergraph c = compact(s, &old_ids);
    CHECK(c.n == 4);
    CHECK(c == h);
    CHECK(old_ids == std::vector<int>{3, 4, 5, 6});
}

TEST_CASE("graph wrapper") {
    Graph p = petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(p.regularity() == 3);
    CHECK(complete_graph(6).regularity() == 5);
    CHECK_FALSE(Graph::make(3, {{0, 1}, {1, 2}}).regularity().has_value());
    CHECK_THROWS_AS(Graph::make(3, {{1, 1}}), EmptyEdge);
    CHECK_THROWS_AS(Graph::from_hypergraph(Hypergraph::make(3, {{0, 1, 2}})), NotUniform);
}
