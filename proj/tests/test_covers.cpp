#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loomlab/covers.hpp"
#include "loomlab/weave.hpp"

#include <algorithm>
#include <random>

using namespace loomlab;

namespace {

// Independent brute-force oracles over explicit subsets. These deliberately
// avoid the solver code paths.
bool subset_covers(const Hypergraph& h, const std::vector<int>& verts) {
    for (const auto& e : h.edges) {
        bool hit = false;
        for (int v : verts)
            if (e.test(v)) hit = true;
        if (!hit) return false;
    }
    return true;
}

int brute_tau_upto(const Hypergraph& h, int limit) {
    std::vector<int> cur;
    for (int k = 0; k <= limit; ++k) {
        bool found = false;
        auto rec = [&](auto&& self, int start) -> void {
            if (found) return;
            if ((int)cur.size() == k) {
                if (subset_covers(h, cur)) found = true;
                return;
            }
            for (int v = start; v < h.n && !found; ++v) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        if (found) return k;
    }
    return limit + 1;
}

std::vector<std::vector<int>> brute_covers_exact(const Hypergraph& h, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == k) {
            if (subset_covers(h, cur)) out.push_back(cur);
            return;
        }
        for (int v = start; v < h.n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Hypergraph random_uniform(int n, int r, int max_edges, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ne(1, max_edges);
    std::vector<BitSet> edges;
    int count = ne(rng);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < count; ++i) {
        std::shuffle(pool.begin(), pool.end(), rng);
        edges.push_back(BitSet::from_indices(n, {pool.begin(), pool.begin() + r}));
    }
    return Hypergraph::from_edge_sets(n, edges);
}

}  // namespace

TEST_CASE("tau on small instances against brute force") {
    CHECK(tau(Hypergraph::make(1, {{0}})).value == 1);

    Hypergraph st6 = star_hypergraph(complete_graph(6));
    IntCertificate t6 = tau(st6);
    CHECK(t6.value == 3);
    CHECK(t6.exact);
    CHECK(check_cover(st6, t6.witness[0]));
    CHECK(t6.witness[0].count() == 3);

    Hypergraph pmp = pm_hypergraph(petersen());
    CHECK(pmp.size() == 6);  // the Petersen graph has six perfect matchings
    CHECK(brute_tau_upto(pmp, 3) == 3);  // oracle: all 1-,2-,3-subsets of 15
    IntCertificate tp = tau(pmp);
    CHECK(tp.value == 3);
    CHECK(check_cover(pmp, tp.witness[0]));

    CHECK(brute_tau_upto(fano_plane(), 3) == 3);
    CHECK(tau(fano_plane()).value == 3);

    CHECK_THROWS_AS(tau(Hypergraph::from_edge_sets(3, {})), EmptyHypergraph);
}

TEST_CASE("tau splits over components") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        Hypergraph a = random_uniform(5, 2, 4, rng);
        Hypergraph b = random_uniform(4, 2, 3, rng);
        Hypergraph u = union_families(shift(a, 0, 9), shift(b, 5, 9));
        CHECK(tau(u).value == tau(a).value + tau(b).value);
    }
}

TEST_CASE("nu exact with witnesses") {
    CHECK(nu(Hypergraph::make(3, {{0, 1, 2}})).value == 1);

    Hypergraph st10 = star_hypergraph(complete_graph(10));
    // oracle: all pairs of distinct stars share the connecting edge
    for (int i = 0; i < st10.size(); ++i)
        for (int j = i + 1; j < st10.size(); ++j)
            CHECK(st10.edges[i].intersects(st10.edges[j]));
    CHECK(nu(st10).value == 1);

    Hypergraph pmp = pm_hypergraph(petersen());
    // oracle: any two perfect matchings of Petersen share an edge
    bool all_intersect = true;
    for (int i = 0; i < pmp.size(); ++i)
        for (int j = i + 1; j < pmp.size(); ++j)
            if (!pmp.edges[i].intersects(pmp.edges[j])) all_intersect = false;
    CHECK(all_intersect);
    CHECK(nu(pmp).value == 1);

    Hypergraph rows = Hypergraph::make(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 4, 8}});
    IntCertificate m = nu(rows);
    CHECK(m.value == 3);
    CHECK(check_matching(rows, m.witness));
    CHECK(nu(Hypergraph::from_edge_sets(4, {})).value == 0);
}

TEST_CASE("covers_of_size against subset brute force") {
    Hypergraph single = Hypergraph::make(1, {{0}});
    Hypergraph c1 = covers_of_size(single, 1);
    CHECK(c1.size() == 1);
    CHECK(c1.edges[0].to_indices() == std::vector<int>{0});

    Hypergraph pmp = pm_hypergraph(petersen());
    Hypergraph c3 = covers_of_size(pmp, 3);
    auto oracle = brute_covers_exact(pmp, 3);
    CHECK(c3.size() == (int)oracle.size());
    CHECK(c3.size() == 15);  // ten stars plus five matching triples
    Hypergraph stp = star_hypergraph(petersen());
    for (const auto& s : stp.edges)
        CHECK(std::find(c3.edges.begin(), c3.edges.end(), s) != c3.edges.end());

    std::mt19937_64 rng(29);
    for (int t = 0; t < 25; ++t) {
        Hypergraph h = random_uniform(7, 3, 4, rng);
        for (int k = 1; k <= 4; ++k) {
            Hypergraph mine = covers_of_size(h, k);
            auto ora = brute_covers_exact(h, k);
            CHECK(mine.size() == (int)ora.size());
        }
    }
}

TEST_CASE("covers_of_size monotone in the family") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        Hypergraph j = random_uniform(7, 3, 5, rng);
        if (j.size() < 2) continue;
        std::vector<int> keep;
        for (int e = 0; e + 1 < j.size(); ++e) keep.push_back(e);
        Hypergraph k = sub_hypergraph(j, keep);  // K ⊆ J
        for (int sz = 1; sz <= 4; ++sz) {
            Hypergraph cj = covers_of_size(j, sz);
            Hypergraph ck = covers_of_size(k, sz);
            for (const auto& e : cj.edges)
                CHECK(std::find(ck.edges.begin(), ck.edges.end(), e) != ck.edges.end());
        }
    }
}

TEST_CASE("minimal covers are minimal and complete") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 20; ++t) {
        Hypergraph h = random_uniform(6, 2, 5, rng);
        Hypergraph mc = minimal_covers(h);
        for (const auto& s : mc.edges) {
            CHECK(check_cover(h, s));
            s.for_each([&](int v) {
                BitSet smaller = s;
                smaller.reset(v);
                if (smaller.any()) CHECK_FALSE(check_cover(h, smaller));
                // size-1 covers shrink to empty, which never covers a
                // nonempty family
            });
        }
        // completeness: every cover of size <= 4 contains a minimal cover
        for (int k = 1; k <= 4; ++k)
            for (auto& verts : brute_covers_exact(h, k)) {
                BitSet s = BitSet::from_indices(h.n, verts);
                bool contains = false;
                for (const auto& m : mc.edges)
                    if (m.is_subset_of(s)) contains = true;
                CHECK(contains);
            }
    }
}

TEST_CASE("perp = exact-hit sets") {
    auto p = perp(Hypergraph::make(2, {{0, 1}}), 2);
    CHECK(p.size() == 2);
    CHECK(p[0].count() == 1);

    // triangle: no subset hits each edge exactly once (brute oracle)
    Hypergraph tri = Hypergraph::make(3, {{0, 1}, {1, 2}, {0, 2}});
    int oracle_count = 0;
    for (int mask = 0; mask < 8; ++mask) {
        bool good = true;
        for (const auto& e : tri.edges) {
            int c = 0;
            for (int v = 0; v < 3; ++v)
                if (((mask >> v) & 1) && e.test(v)) ++c;
            if (c != 1) good = false;
        }
        if (good) ++oracle_count;
    }
    CHECK(oracle_count == 0);
    CHECK(perp(tri, 3).empty());
    CHECK_FALSE(is_pinnable(tri).has_value());

    CHECK(is_pinnable(Hypergraph::make(3, {{0, 1, 2}})).has_value());

    // each side of an r-partite uniform hypergraph lies in the perp
    Hypergraph rc = Hypergraph::make(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                         {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
    auto sides = is_r_partite(rc);
    REQUIRE(sides.has_value());
    auto pp = perp(rc, 9);
    for (const auto& side : *sides)
        CHECK(std::find(pp.begin(), pp.end(), side) != pp.end());
}

TEST_CASE("rainbow matching number") {
    // cross-intersecting pair: every rainbow pair of edges meets
    Hypergraph a = Hypergraph::make(4, {{0, 1}, {0, 2}});
    Hypergraph b = Hypergraph::make(4, {{0, 3}, {0, 1}});
    CHECK(rainbow_matching_number({a, b}).value == 1);

    // m copies of a matching of size m
    Hypergraph m3 = Hypergraph::make(6, {{0, 1}, {2, 3}, {4, 5}});
    IntCertificate r = rainbow_matching_number({m3, m3, m3});
    CHECK(r.value == 3);
    CHECK(r.witness.size() == 3);
    CHECK(r.witness_members == std::vector<int>{0, 1, 2});

    Hypergraph g3a = Hypergraph::make(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                          {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
    Hypergraph g3b = Hypergraph::make(9, {{0, 4, 8}, {0, 5, 7}, {1, 3, 8},
                                          {1, 5, 6}, {2, 3, 7}, {2, 4, 6}});
    CHECK(is_orthogonal(g3a, g3b).ok);  // oracle: all pairs intersect
    CHECK(rainbow_matching_number({g3a, g3b}).value == 1);
}

TEST_CASE("has_perfect_matching") {
    Hypergraph rows_cols = Hypergraph::make(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                                {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
    auto pm = has_perfect_matching(rows_cols);
    REQUIRE(pm.has_value());
    CHECK(pm->size() == 3);
    BitSet u(9);
    for (const auto& e : *pm) u |= e;
    CHECK(u == BitSet::full(9));

    // PM(Petersen) on 15 edge-vertices admits no partition into matchings
    CHECK_FALSE(has_perfect_matching(pm_hypergraph(petersen())).has_value());

    // the 3-covers of PM(Petersen) do admit one (five disjoint triples)
    Hypergraph b = covers_of_size(pm_hypergraph(petersen()), 3);
    auto pmb = has_perfect_matching(b);
    REQUIRE(pmb.has_value());
    CHECK(pmb->size() == 5);
}

TEST_CASE("certificates re-validate") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
        Hypergraph h = random_uniform(8, 3, 5, rng);
        IntCertificate tc = tau(h);
        CHECK(tc.exact);
        CHECK(check_cover(h, tc.witness[0]));
        CHECK(tc.witness[0].count() == tc.value);
        IntCertificate mc = nu(h);
        CHECK(check_matching(h, mc.witness));
        CHECK((int)mc.witness.size() == mc.value);
        CHECK(mc.value <= tc.value);  // weak duality
    }
}

TEST_CASE("cover closure identities on random uniform instances") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
        int r = 2 + (int)(rng() % 2);
        Hypergraph h = random_uniform(7, r, 4, rng);
        int tv = tau(h).value;
        for (int s : {tv, tv + 1}) {
            if (s > h.n) continue;
            Hypergraph cs = covers_of_size(h, s);
            Hypergraph crcs = covers_of_size(cs, r);
            for (const auto& e : h.edges)
                CHECK(std::find(crcs.edges.begin(), crcs.edges.end(), e) != crcs.edges.end());
            CHECK(covers_of_size(crcs, s) == cs);
        }
    }
}

TEST_CASE("budget exhaustion returns bounds, not lies") {
    Hypergraph pmp = pm_hypergraph(petersen());
    IntCertificate c = tau(pmp, 2);
    if (!c.exact) {
        CHECK(c.lower <= 3);
        CHECK(c.upper >= 3);
        CHECK(check_cover(pmp, c.witness[0]));
    }
}
