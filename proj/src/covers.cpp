#include "loomlab/covers.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace loomlab {

namespace {

// Incidence structure for one solver call. Vertex -> mask of edges
// containing it (bits over edge ids).
struct Incidence {
    int n = 0, m = 0;
    std::vector<BitSet> vert_edges;

    explicit Incidence(const Hypergraph& H) : n(H.n), m(H.size()) {
        vert_edges.assign(n, BitSet(m));
        for (int e = 0; e < m; ++e)
            H.edges[e].for_each([&](int v) { vert_edges[v].set(e); });
    }
};

constexpr int kInfeasible = 1 << 28;

// Greedy packing of uncovered edges with pairwise disjoint allowed supports;
// each packed edge needs its own cover vertex. Returns kInfeasible when an
// uncovered edge has its whole support excluded.
int packing_lb(const Hypergraph& H, const BitSet& covered, const BitSet& excluded) {
    int lb = 0;
    BitSet used(H.n);
    for (int e = 0; e < H.size(); ++e) {
        if (covered.test(e)) continue;
        BitSet allowed = H.edges[e].minus(excluded);
        if (allowed.empty()) return kInfeasible;
        if (!allowed.intersects(used)) {
            ++lb;
            used |= allowed;
        }
    }
    return lb;
}

struct TauSolver {
    const Hypergraph& H;
    const Incidence inc;
    uint64_t budget;
    uint64_t nodes = 0;
    bool out_of_budget = false;
    int best_size;
    std::vector<int> best_cover;
    std::vector<int> chosen;
    int stop_at;  // proven global lower bound; stop once reached

    TauSolver(const Hypergraph& h, uint64_t b, int stop)
        : H(h), inc(h), budget(b), stop_at(stop) {
        greedy_init();
    }

    void greedy_init() {
        BitSet covered(inc.m);
        std::vector<int> cover;
        while (covered.count() < inc.m) {
            int best_v = -1, best_gain = -1;
            for (int v = 0; v < H.n; ++v) {
                int gain = inc.vert_edges[v].minus(covered).count();
                if (gain > best_gain) {
                    best_gain = gain;
                    best_v = v;
                }
            }
            cover.push_back(best_v);
            covered |= inc.vert_edges[best_v];
        }
        best_cover = cover;
        best_size = (int)cover.size();
    }

    void rec(const BitSet& covered, BitSet& excluded) {
        if (out_of_budget) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if (best_size <= stop_at) return;
        int e = -1;
        for (int i = 0; i < inc.m; ++i)
            if (!covered.test(i)) {
                e = i;
                break;
            }
        if (e < 0) {
            if ((int)chosen.size() < best_size) {
                best_size = (int)chosen.size();
                best_cover = chosen;
            }
            return;
        }
        int lb = packing_lb(H, covered, excluded);
        if ((int)chosen.size() + lb >= best_size) return;
        BitSet allowed = H.edges[e].minus(excluded);
        std::vector<int> vs = allowed.to_indices();
        std::vector<int> locally_excluded;
        for (int v : vs) {
            chosen.push_back(v);
            BitSet cov2 = covered | inc.vert_edges[v];
            rec(cov2, excluded);
            chosen.pop_back();
            excluded.set(v);
            locally_excluded.push_back(v);
            if (out_of_budget) break;
        }
        for (int v : locally_excluded) excluded.reset(v);
    }
};

IntCertificate tau_connected(const Hypergraph& H, uint64_t budget, int lower_hint,
                             uint64_t& nodes_used) {
    IntCertificate c;
    c.quantity = Quantity::Tau;
    BitSet covered(H.size());
    BitSet excluded(H.n);
    int root_lb = std::max(packing_lb(H, covered, excluded), lower_hint);
    TauSolver s(H, budget, root_lb);
    if (s.best_size > root_lb) s.rec(covered, excluded);
    nodes_used = s.nodes;
    c.nodes = s.nodes;
    c.value = s.best_size;
    c.upper = s.best_size;
    c.exact = !s.out_of_budget;
    c.lower = c.exact ? s.best_size : root_lb;
    std::sort(s.best_cover.begin(), s.best_cover.end());
    c.witness = {BitSet::from_indices(H.n, s.best_cover)};
    return c;
}

struct NuSolver {
    const Hypergraph& H;
    uint64_t budget;
    uint64_t nodes = 0;
    bool out_of_budget = false;
    int best = 0;
    std::vector<int> best_set;
    std::vector<int> chosen;
    int support_size;

    NuSolver(const Hypergraph& h, uint64_t b) : H(h), budget(b) {
        support_size = h.support().count();
    }

    void rec(int i, const BitSet& used) {
        if (out_of_budget) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if ((int)chosen.size() > best) {
            best = (int)chosen.size();
            best_set = chosen;
        }
        if (i >= H.size()) return;
        int free_verts = support_size - used.count();
        // edges are size-sorted, so edges[i] has the smallest remaining size
        int ub = (int)chosen.size() +
                 std::min(H.size() - i, free_verts / std::max(1, H.edges[i].count()));
        if (ub <= best) return;
        if (H.edges[i].disjoint(used)) {
            chosen.push_back(i);
            BitSet used2 = used | H.edges[i];
            rec(i + 1, used2);
            chosen.pop_back();
        }
        rec(i + 1, used);
    }
};

// Enumerates covers of a single structure with candidate set = support.
// Each leaf of the branching tree is a greedily built cover; completions
// up to `kmax` free vertices are emitted. Deduplication happens downstream.
struct CoverEnum {
    const Hypergraph& H;
    const Incidence inc;
    int kmax;                       // emit covers of size <= kmax (kmax<0: minimal mode)
    bool minimal_mode;
    std::vector<std::vector<BitSet>> by_size;  // size -> covers (minimal mode: index 0)
    std::vector<int> chosen;

    CoverEnum(const Hypergraph& h, int kmax_, bool minimal)
        : H(h), inc(h), kmax(kmax_), minimal_mode(minimal) {
        if (!minimal_mode) by_size.assign(kmax + 1, {});
        else by_size.assign(1, {});
    }

    void emit_completions(const BitSet& excluded) {
        int j = (int)chosen.size();
        BitSet base = BitSet::from_indices(H.n, chosen);
        if (minimal_mode) {
            // keep only inclusion-minimal covers: every chosen vertex must
            // cover some edge privately
            for (int v : chosen) {
                bool has_private = false;
                for (int e = 0; e < H.size() && !has_private; ++e)
                    if (H.edges[e].test(v) && H.edges[e].intersection_count(base) == 1)
                        has_private = true;
                if (!has_private) return;
            }
            by_size[0].push_back(base);
            return;
        }
        by_size[j].push_back(base);
        if (j == kmax) return;
        BitSet pool = H.support().minus(base).minus(excluded);
        std::vector<int> pv = pool.to_indices();
        std::vector<int> pick;
        // all subsets of the pool of size <= kmax - j
        auto rec_pick = [&](auto&& self, size_t start) -> void {
            if ((int)pick.size() > 0) {
                BitSet s = base;
                for (int v : pick) s.set(v);
                by_size[j + (int)pick.size()].push_back(s);
            }
            if ((int)pick.size() == kmax - j) return;
            for (size_t t = start; t < pv.size(); ++t) {
                pick.push_back(pv[t]);
                self(self, t + 1);
                pick.pop_back();
            }
        };
        rec_pick(rec_pick, 0);
    }

    void rec(const BitSet& covered, BitSet& excluded) {
        int e = -1;
        for (int i = 0; i < inc.m; ++i)
            if (!covered.test(i)) {
                e = i;
                break;
            }
        if (e < 0) {
            emit_completions(excluded);
            return;
        }
        if (!minimal_mode) {
            int lb = packing_lb(H, covered, excluded);
            if ((int)chosen.size() + lb > kmax) return;
        }
        BitSet allowed = H.edges[e].minus(excluded);
        if (allowed.empty()) return;
        std::vector<int> vs = allowed.to_indices();
        std::vector<int> locally_excluded;
        for (int v : vs) {
            chosen.push_back(v);
            BitSet cov2 = covered | inc.vert_edges[v];
            rec(cov2, excluded);
            chosen.pop_back();
            excluded.set(v);
            locally_excluded.push_back(v);
        }
        for (int v : locally_excluded) excluded.reset(v);
    }
};

std::vector<std::vector<BitSet>> enumerate_covers_by_size(const Hypergraph& H, int kmax) {
    CoverEnum ce(H, kmax, false);
    BitSet covered(H.size());
    BitSet excluded(H.n);
    ce.rec(covered, excluded);
    // dedup each size class (the same completion can arise from two leaves)
    for (auto& vec : ce.by_size) {
        std::unordered_set<BitSet, BitSetHash> seen;
        std::vector<BitSet> out;
        for (auto& s : vec)
            if (seen.insert(s).second) out.push_back(s);
        std::sort(out.begin(), out.end(), edge_less);
        vec = std::move(out);
    }
    return std::move(ce.by_size);
}

void combinations(const std::vector<int>& pool, int k, std::vector<int>& cur, size_t start,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if ((int)cur.size() == k) {
        fn(cur);
        return;
    }
    for (size_t i = start; i + (k - cur.size()) <= pool.size(); ++i) {
        cur.push_back(pool[i]);
        combinations(pool, k, cur, i + 1, fn);
        cur.pop_back();
    }
}

}  // namespace

IntCertificate tau(const Hypergraph& H, uint64_t node_budget, int lower_hint) {
    if (H.empty_family()) throw EmptyHypergraph("tau of an empty hypergraph");
    Components comps = connected_components(H);
    IntCertificate total;
    total.quantity = Quantity::Tau;
    BitSet cover(H.n);
    uint64_t nodes = 0;
    bool exact = true;
    int value = 0, lower = 0;
    // covering splits over 1-skeleton components; hints are only safe whole
    int hint = comps.parts.size() == 1 ? lower_hint : 0;
    for (const auto& idx : comps.edge_index) {
        Hypergraph sub = sub_hypergraph(H, idx);
        uint64_t used = 0;
        IntCertificate c =
            tau_connected(sub, node_budget > nodes ? node_budget - nodes : 1, hint, used);
        nodes += used;
        value += c.value;
        lower += c.lower;
        exact = exact && c.exact;
        cover |= c.witness[0];
    }
    if (comps.parts.size() > 1 && lower_hint > lower) lower = std::min(lower_hint, value);
    total.value = value;
    total.upper = value;
    total.lower = exact ? value : lower;
    total.exact = exact;
    total.nodes = nodes;
    total.witness = {cover};
    total.attestation = "branch-and-bound, " + std::to_string(nodes) + " nodes, " +
                        std::to_string(comps.parts.size()) + " component(s)" +
                        (lower_hint > 0 ? ", external lower hint " + std::to_string(lower_hint)
                                        : "");
    return total;
}

IntCertificate nu(const Hypergraph& H, uint64_t node_budget) {
    IntCertificate total;
    total.quantity = Quantity::Nu;
    if (H.empty_family()) {
        total.attestation = "empty family";
        return total;
    }
    Components comps = connected_components(H);
    uint64_t nodes = 0;
    bool exact = true;
    int value = 0;
    std::vector<BitSet> witness;
    for (const auto& idx : comps.edge_index) {
        Hypergraph sub = sub_hypergraph(H, idx);
        NuSolver s(sub, node_budget > nodes ? node_budget - nodes : 1);
        BitSet used(sub.n);
        s.rec(0, used);
        nodes += s.nodes;
        exact = exact && !s.out_of_budget;
        value += s.best;
        for (int e : s.best_set) witness.push_back(sub.edges[e]);
    }
    total.value = value;
    total.upper = exact ? value : H.size();
    total.lower = value;
    total.exact = exact;
    total.nodes = nodes;
    total.witness = std::move(witness);
    total.attestation = "branch-and-bound, " + std::to_string(nodes) + " nodes";
    return total;
}

Hypergraph covers_of_size(const Hypergraph& H, int k) {
    if (k <= 0 || k > H.n) return Hypergraph::from_edge_sets(H.n, {});
    Components comps = connected_components(H);
    int t = (int)comps.parts.size();
    BitSet supp = H.support();
    std::vector<int> off = supp.complement().to_indices();

    if (H.empty_family()) {
        // no constraints: every k-subset of the universe
        std::vector<BitSet> out;
        std::vector<int> cur;
        std::vector<int> all(H.n);
        for (int i = 0; i < H.n; ++i) all[i] = i;
        combinations(all, k, cur, 0,
                     [&](const std::vector<int>& c) { out.push_back(BitSet::from_indices(H.n, c)); });
        return Hypergraph::from_edge_sets(H.n, std::move(out));
    }

    // per-component minimum sizes bound the per-component enumeration depth
    std::vector<Hypergraph> subs;
    std::vector<int> taus;
    int tau_sum = 0;
    for (const auto& idx : comps.edge_index) {
        subs.push_back(sub_hypergraph(H, idx));
        taus.push_back(tau(subs.back()).value);
        tau_sum += taus.back();
    }
    if (tau_sum > k) return Hypergraph::from_edge_sets(H.n, {});

    std::vector<std::vector<std::vector<BitSet>>> lists(t);
    for (int c = 0; c < t; ++c) {
        int kmax_c = k - (tau_sum - taus[c]);
        lists[c] = enumerate_covers_by_size(subs[c], kmax_c);
    }

    std::vector<BitSet> out;
    // assemble per-component covers plus free vertices outside the support
    std::vector<int> size_choice(t);
    auto assemble = [&](auto&& self, int c, int used) -> void {
        if (c == t) {
            int free_count = k - used;
            if (free_count < 0 || free_count > (int)off.size()) return;
            // collect one cover per component per chosen sizes
            std::vector<const BitSet*> parts(t);
            auto emit_products = [&](auto&& self2, int i, BitSet acc) -> void {
                if (i == t) {
                    std::vector<int> cur;
                    if (free_count == 0) {
                        out.push_back(acc);
                        return;
                    }
                    combinations(off, free_count, cur, 0, [&](const std::vector<int>& ext) {
                        BitSet s = acc;
                        for (int v : ext) s.set(v);
                        out.push_back(s);
                    });
                    return;
                }
                for (const BitSet& s : lists[i][size_choice[i]]) {
                    BitSet acc2 = acc;
                    acc2 |= s;
                    self2(self2, i + 1, acc2);
                }
            };
            emit_products(emit_products, 0, BitSet(H.n));
            return;
        }
        for (int j = taus[c]; j < (int)lists[c].size() && used + j <= k; ++j) {
            if (lists[c][j].empty()) continue;
            size_choice[c] = j;
            self(self, c + 1, used + j);
        }
    };
    assemble(assemble, 0, 0);
    return Hypergraph::from_edge_sets(H.n, std::move(out));
}

Hypergraph minimal_covers(const Hypergraph& H) {
    if (H.empty_family()) return Hypergraph::from_edge_sets(H.n, {});
    Components comps = connected_components(H);
    std::vector<std::vector<BitSet>> per_comp;
    for (const auto& idx : comps.edge_index) {
        Hypergraph sub = sub_hypergraph(H, idx);
        CoverEnum ce(sub, -1, true);
        BitSet covered(sub.size());
        BitSet excluded(sub.n);
        ce.rec(covered, excluded);
        per_comp.push_back(std::move(ce.by_size[0]));
    }
    std::vector<BitSet> out;
    auto product = [&](auto&& self, size_t c, BitSet acc) -> void {
        if (c == per_comp.size()) {
            out.push_back(acc);
            return;
        }
        for (const BitSet& s : per_comp[c]) {
            BitSet acc2 = acc;
            acc2 |= s;
            self(self, c + 1, acc2);
        }
    };
    product(product, 0, BitSet(H.n));
    return Hypergraph::from_edge_sets(H.n, std::move(out));
}

namespace {

struct PerpEnum {
    const Hypergraph& H;
    int max_size;
    size_t limit;
    std::vector<int> hit_count;   // per edge
    std::vector<int> picked;
    std::vector<BitSet> out;

    PerpEnum(const Hypergraph& h, int ms, size_t lim)
        : H(h), max_size(ms), limit(lim), hit_count(h.size(), 0) {}

    void rec() {
        if (out.size() >= limit) return;
        int e = -1;
        for (int i = 0; i < H.size(); ++i)
            if (hit_count[i] == 0) {
                e = i;
                break;
            }
        if (e < 0) {
            out.push_back(BitSet::from_indices(H.n, picked));
            return;
        }
        if ((int)picked.size() >= max_size) return;
        std::vector<int> vs = H.edges[e].to_indices();
        for (int v : vs) {
            bool ok = true;
            for (int i = 0; i < H.size() && ok; ++i)
                if (H.edges[i].test(v) && hit_count[i] == 1) ok = false;
            if (!ok) continue;
            picked.push_back(v);
            for (int i = 0; i < H.size(); ++i)
                if (H.edges[i].test(v)) ++hit_count[i];
            rec();
            for (int i = 0; i < H.size(); ++i)
                if (H.edges[i].test(v)) --hit_count[i];
            picked.pop_back();
            if (out.size() >= limit) return;
        }
    }
};

}  // namespace

std::vector<BitSet> perp(const Hypergraph& H, int max_size) {
    if (H.empty_family()) return {BitSet(H.n)};  // vacuously orthogonal empty set
    PerpEnum pe(H, max_size, size_t(-1));
    pe.rec();
    std::sort(pe.out.begin(), pe.out.end(), edge_less);
    return pe.out;
}

std::optional<BitSet> is_pinnable(const Hypergraph& H) {
    if (H.empty_family()) return BitSet(H.n);
    PerpEnum pe(H, H.n, 1);
    pe.rec();
    if (pe.out.empty()) return std::nullopt;
    return pe.out.front();
}

namespace {

struct RainbowSolver {
    const std::vector<Hypergraph>& fam;
    uint64_t budget;
    uint64_t nodes = 0;
    bool out_of_budget = false;
    int best = 0;
    std::vector<std::pair<int, int>> best_pick;  // (member, edge)
    std::vector<std::pair<int, int>> pick;

    RainbowSolver(const std::vector<Hypergraph>& f, uint64_t b) : fam(f), budget(b) {}

    void rec(size_t i, const BitSet& used) {
        if (out_of_budget) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        if ((int)pick.size() > best) {
            best = (int)pick.size();
            best_pick = pick;
        }
        if (i >= fam.size()) return;
        if ((int)pick.size() + int(fam.size() - i) <= best) return;
        for (int e = 0; e < fam[i].size(); ++e) {
            if (!fam[i].edges[e].disjoint(used)) continue;
            pick.push_back({(int)i, e});
            BitSet used2 = used | fam[i].edges[e];
            rec(i + 1, used2);
            pick.pop_back();
            if (out_of_budget) return;
        }
        rec(i + 1, used);
    }
};

}  // namespace

IntCertificate rainbow_matching_number(const std::vector<Hypergraph>& family,
                                       uint64_t node_budget) {
    IntCertificate c;
    c.quantity = Quantity::NuR;
    if (family.empty()) {
        c.attestation = "empty family";
        return c;
    }
    int n = family.front().n;
    for (const auto& h : family)
        if (h.n != n) throw UniverseMismatch("rainbow matching needs a shared universe");
    RainbowSolver s(family, node_budget);
    BitSet used(n);
    s.rec(0, used);
    c.value = s.best;
    c.lower = s.best;
    c.upper = s.out_of_budget ? (int)family.size() : s.best;
    c.exact = !s.out_of_budget;
    c.nodes = s.nodes;
    for (auto [mi, ei] : s.best_pick) {
        c.witness.push_back(family[mi].edges[ei]);
        c.witness_members.push_back(mi);
    }
    c.attestation = "branch-and-bound, " + std::to_string(s.nodes) + " nodes";
    return c;
}

namespace {

bool pm_rec(const Hypergraph& H, BitSet& uncovered, std::vector<int>& picked) {
    int v = uncovered.first();
    if (v < 0) return true;
    for (int e = 0; e < H.size(); ++e) {
        if (!H.edges[e].test(v)) continue;
        if (!H.edges[e].is_subset_of(uncovered)) continue;
        picked.push_back(e);
        uncovered.subtract(H.edges[e]);
        if (pm_rec(H, uncovered, picked)) return true;
        uncovered |= H.edges[e];
        picked.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<BitSet>> has_perfect_matching(const Hypergraph& H) {
    if (!H.grounded()) return std::nullopt;  // an uncovered vertex can never be matched
    BitSet uncovered = BitSet::full(H.n);
    std::vector<int> picked;
    if (!pm_rec(H, uncovered, picked)) return std::nullopt;
    std::vector<BitSet> out;
    for (int e : picked) out.push_back(H.edges[e]);
    std::sort(out.begin(), out.end(), edge_less);
    return out;
}

bool check_cover(const Hypergraph& H, const BitSet& S) {
    for (const auto& e : H.edges)
        if (!e.intersects(S)) return false;
    return true;
}

bool check_matching(const Hypergraph& H, const std::vector<BitSet>& M) {
    BitSet used(H.n);
    for (const auto& e : M) {
        if (std::find(H.edges.begin(), H.edges.end(), e) == H.edges.end()) return false;
        if (e.intersects(used)) return false;
        used |= e;
    }
    return true;
}

}  // namespace loomlab
