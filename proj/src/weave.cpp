#include "loomlab/weave.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace loomlab {

namespace {

Loom must_verify(const Hypergraph& A, const Hypergraph& B, const char* what) {
    VerificationReport rep;
    auto L = verify_loom(A, B, &rep);
    if (!L) {
        std::string why = what;
        for (const auto& c : rep.checks)
            if (c.applicable && !c.pass) why += " [" + c.name + ": " + c.detail + "]";
        throw Error("construction failed verification: " + why);
    }
    return *L;
}

}  // namespace

Loom loom_u() {
    Hypergraph a = Hypergraph::make(1, {{0}});
    return must_verify(a, a, "loom U");
}

Loom loom_v(int r) {
    if (r < 1) throw IndexOutOfRange("loom V needs r >= 1");
    std::vector<int> full(r);
    std::iota(full.begin(), full.end(), 0);
    std::vector<std::vector<int>> singles;
    for (int i = 0; i < r; ++i) singles.push_back({i});
    return must_verify(Hypergraph::make(r, {full}), Hypergraph::make(r, singles), "loom V");
}

Loom matching_transversal_loom(int r, int s) {
    if (r < 1 || s < 1) throw IndexOutOfRange("uniformities must be positive");
    int n = r * s;
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < s; ++i) {
        std::vector<int> e(r);
        std::iota(e.begin(), e.end(), i * r);
        blocks.push_back(e);
    }
    // all transversals: one vertex per block
    std::vector<std::vector<int>> trans;
    std::vector<int> cur(s, 0);
    while (true) {
        std::vector<int> t(s);
        for (int i = 0; i < s; ++i) t[i] = i * r + cur[i];
        trans.push_back(t);
        int i = s - 1;
        while (i >= 0 && cur[i] == r - 1) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return must_verify(Hypergraph::make(n, blocks), Hypergraph::make(n, trans),
                       "matching-transversal loom");
}

Loom grid_loom(int r) {
    if (r < 1) throw IndexOutOfRange("grid loom needs r >= 1");
    int n = r * r;  // cell (i,j) -> r*i + j
    std::vector<std::vector<int>> rows_cols;
    for (int i = 0; i < r; ++i) {
        std::vector<int> row(r), col(r);
        for (int j = 0; j < r; ++j) {
            row[j] = r * i + j;
            col[j] = r * j + i;
        }
        rows_cols.push_back(row);
        rows_cols.push_back(col);
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> sigma(r);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<int> cells(r);
        for (int i = 0; i < r; ++i) cells[i] = r * i + sigma[i];
        perms.push_back(cells);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return must_verify(Hypergraph::make(n, rows_cols), Hypergraph::make(n, perms),
                       "grid loom");
}

Loom vane_33() {
    // 3x3 grid numbered 1..9 row by row, written 0-based
    Hypergraph C = Hypergraph::make(
        9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {0, 4, 7}, {1, 3, 6}, {1, 4, 8}, {2, 5, 7}});
    Hypergraph D = Hypergraph::make(
        9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {2, 4, 6}, {0, 1, 5}, {2, 3, 4}, {3, 7, 8}, {4, 5, 6}});
    return must_verify(C, D, "vane 3,3");
}

namespace {

Loom compose_impl(const Loom& L1, const Loom& L2, bool join_first, bool full_verify,
                  uint64_t node_budget) {
    int n = L1.A.n + L2.A.n;
    Hypergraph A1 = shift(L1.A, 0, n), B1 = shift(L1.B, 0, n);
    Hypergraph A2 = shift(L2.A, L1.A.n, n), B2 = shift(L2.B, L1.A.n, n);
    Hypergraph A = join_first ? join(A1, A2) : union_families(A1, A2);
    Hypergraph B = join_first ? union_families(B1, B2) : join(B1, B2);
    int r = join_first ? L1.r + L2.r : L1.r;
    int s = join_first ? L1.s : L1.s + L2.s;
    if (full_verify) {
        VerificationReport rep;
        auto L = verify_loom(A, B, &rep, node_budget);
        if (!L) throw Error("composition failed full verification");
        return *L;
    }
    // structural route: factors are verified looms, the composed uniformity
    // and orthogonality are checked directly
    VerificationReport rep;
    auto ru = A.uniformity_opt(), su = B.uniformity_opt();
    rep.add({"compose-uniform", ru == std::optional<int>(r) && su == std::optional<int>(s),
             true, "", {}});
    OrthResult orth = is_orthogonal(A, B);
    rep.add({"compose-orthogonal", orth.ok, true, "", {}});
    rep.add({"compose-factors-verified", L1.report.all_pass() && L2.report.all_pass(), true,
             "verification carried by factor reports", {}});
    if (!rep.all_pass()) throw Error("composition failed structural checks");
    return Loom{A, B, r, s, rep};
}

}  // namespace

Loom compose1(const Loom& L1, const Loom& L2, bool full_verify, uint64_t node_budget) {
    if (L1.s != L2.s)
        throw UniformityMismatch("1-composition needs equal second uniformities");
    return compose_impl(L1, L2, true, full_verify, node_budget);
}

Loom compose2(const Loom& L1, const Loom& L2, bool full_verify, uint64_t node_budget) {
    if (L1.r != L2.r)
        throw UniformityMismatch("2-composition needs equal first uniformities");
    return compose_impl(L1, L2, false, full_verify, node_budget);
}

std::vector<Loom> split_b_components(const Loom& L) {
    Components comps = connected_components(L.B);
    if (comps.parts.size() <= 1) return {L};
    std::vector<Loom> out;
    for (size_t i = 0; i < comps.parts.size(); ++i) {
        Hypergraph Bi = sub_hypergraph(L.B, comps.edge_index[i]);
        Hypergraph Ai = restrict_to(L.A, comps.parts[i]);
        // compact both over the component support, keeping one universe
        std::vector<int> old_ids = comps.parts[i].to_indices();
        std::vector<int> new_of_old(L.A.n, -1);
        for (int k = 0; k < (int)old_ids.size(); ++k) new_of_old[old_ids[k]] = k;
        auto remap = [&](const Hypergraph& H) {
            std::vector<BitSet> es;
            for (const auto& e : H.edges) {
                BitSet s((int)old_ids.size());
                e.for_each([&](int v) { s.set(new_of_old[v]); });
                es.push_back(std::move(s));
            }
            return Hypergraph::from_edge_sets((int)old_ids.size(), std::move(es));
        };
        out.push_back(must_verify(remap(Ai), remap(Bi), "component factor"));
    }
    return out;
}

std::vector<Loom> decompose(const Loom& L) {
    std::vector<Loom> out;
    std::vector<Loom> work{L};
    while (!work.empty()) {
        Loom cur = work.back();
        work.pop_back();
        Components cb = connected_components(cur.B);
        if (cb.parts.size() > 1) {
            auto fs = split_b_components(cur);
            work.insert(work.end(), fs.begin(), fs.end());
            continue;
        }
        Components ca = connected_components(cur.A);
        if (ca.parts.size() > 1) {
            auto fs = split_b_components(swap_components(cur));
            for (auto& f : fs) work.push_back(swap_components(f));
            continue;
        }
        out.push_back(cur);
    }
    return out;
}

BlowupResult blow_up(const BlowupSpec& spec, bool verify, uint64_t node_budget) {
    const int n = spec.A.n;
    if (spec.B.n != n) throw UniverseMismatch("blow-up base pair shares one universe");
    if ((int)spec.parts.size() != n)
        throw IndexOutOfRange("blow-up needs one loom per base vertex");
    if (!is_orthogonal(spec.A, spec.B).ok)
        throw Error("blow-up base pair must be orthogonal");
    BitSet sa = spec.A.support(), sb = spec.B.support();
    if (sa != sb || sa.count() != n)
        throw NotGrounded("blow-up base pair must have full joint support");

    BlowupResult res;
    res.part_offsets.assign(n + 1, 0);
    for (int i = 0; i < n; ++i)
        res.part_offsets[i + 1] = res.part_offsets[i] + spec.parts[i].A.n;
    int big_n = res.part_offsets[n];

    auto build_side = [&](const Hypergraph& base, bool a_side,
                          std::vector<std::pair<int, std::vector<std::pair<int, int>>>>& prov) {
        std::vector<BitSet> out;
        for (int bi = 0; bi < base.size(); ++bi) {
            std::vector<int> members = base.edges[bi].to_indices();
            std::vector<int> pick(members.size(), 0);
            while (true) {
                BitSet edge(big_n);
                std::vector<std::pair<int, int>> choices;
                for (size_t k = 0; k < members.size(); ++k) {
                    int part = members[k];
                    const Hypergraph& h = a_side ? spec.parts[part].A : spec.parts[part].B;
                    h.edges[pick[k]].for_each(
                        [&](int v) { edge.set(v + res.part_offsets[part]); });
                    choices.push_back({part, pick[k]});
                }
                out.push_back(edge);
                prov.push_back({bi, choices});
                int k = (int)members.size() - 1;
                while (k >= 0) {
                    const Hypergraph& h =
                        a_side ? spec.parts[members[k]].A : spec.parts[members[k]].B;
                    if (pick[k] + 1 < h.size()) {
                        ++pick[k];
                        break;
                    }
                    pick[k--] = 0;
                }
                if (k < 0) break;
            }
        }
        return out;
    };

    std::vector<BitSet> c_edges = build_side(spec.A, true, res.c_provenance);
    std::vector<BitSet> d_edges = build_side(spec.B, false, res.d_provenance);
    // construction order is kept for provenance; the hypergraphs canonicalize
    res.C = Hypergraph::from_edge_sets(big_n, c_edges);
    res.D = Hypergraph::from_edge_sets(big_n, d_edges);

    auto cu = res.C.uniformity_opt(), du = res.D.uniformity_opt();
    res.cond_uniform = cu.has_value() && du.has_value();
    if (!res.cond_uniform) {
        res.violation = "blow-up sides are not uniform";
        return res;
    }
    res.c = *cu;
    res.d = *du;

    auto in_family = [](const Hypergraph& H, const BitSet& e) {
        return std::find(H.edges.begin(), H.edges.end(), e) != H.edges.end();
    };
    res.cond_b_side = true;
    for (const auto& f : minimal_covers(spec.A).edges) {
        if (in_family(spec.B, f)) continue;
        long long total = 0;
        f.for_each([&](int j) { total += spec.parts[j].s; });
        if (total <= res.d) {
            res.cond_b_side = false;
            res.violation = "minimal cover " + f.to_string(1) +
                            " of the first base component has part weight " +
                            std::to_string(total) + " <= " + std::to_string(res.d);
            break;
        }
    }
    if (res.cond_b_side) {
        res.cond_a_side = true;
        for (const auto& e : minimal_covers(spec.B).edges) {
            if (in_family(spec.A, e)) continue;
            long long total = 0;
            e.for_each([&](int i) { total += spec.parts[i].r; });
            if (total <= res.c) {
                res.cond_a_side = false;
                res.violation = "minimal cover " + e.to_string(1) +
                                " of the second base component has part weight " +
                                std::to_string(total) + " <= " + std::to_string(res.c);
                break;
            }
        }
    }
    if (res.conditions_hold() && verify) {
        VerificationReport rep;
        auto L = verify_loom(res.C, res.D, &rep, node_budget);
        if (!L) throw Error("blow-up conditions held but verification failed");
        res.loom = *L;
    }
    return res;
}

MatchingAuditReport blowup_matching_audit(const BlowupSpec& spec, const BlowupResult& result) {
    if (!result.conditions_hold() || !result.loom)
        throw HypothesisUnmet("matching audit needs a successful verified blow-up");
    VerificationReport rep;
    auto base = verify_loom(spec.A, spec.B, &rep);
    if (!base) throw HypothesisUnmet("matching audit needs the base pair to be a loom");
    // equal second uniformities along every base A-edge
    for (const auto& a : spec.A.edges) {
        int s0 = -1;
        bool equal = true;
        a.for_each([&](int i) {
            if (s0 < 0)
                s0 = spec.parts[i].s;
            else if (spec.parts[i].s != s0)
                equal = false;
        });
        if (!equal)
            throw HypothesisUnmet("parts along base edge " + a.to_string(1) +
                                  " have unequal second uniformities");
    }

    MatchingAuditReport rp;
    int q = base->s;
    IntCertificate nu_base = nu(spec.A);
    if (nu_base.value != q)
        throw HypothesisUnmet("base first component has no perfect matching");

    IntCertificate nc = nu(result.loom->A);
    rp.pm_in_c = nc.value == result.d;
    rp.pm_in_all_parts = true;
    for (const auto& p : spec.parts)
        if (nu(p.A).value != p.s) rp.pm_in_all_parts = false;
    rp.pm_transfer_holds = rp.pm_in_c == rp.pm_in_all_parts;

    // fractional transfer: rebuild the explicit weighting and verify it
    FracCertificate base_star = nu_star(spec.A);
    rp.pfm_premise = base_star.value == q;
    std::vector<std::optional<std::vector<std::pair<int, Rational>>>> part_pfm;
    for (const auto& p : spec.parts) {
        FracCertificate f = nu_star(p.A);
        if (f.value != p.s) rp.pfm_premise = false;
        part_pfm.push_back(rp.pfm_premise ? perfect_fractional_matching(compact(p.A))
                                          : std::nullopt);
    }
    if (rp.pfm_premise) {
        auto f_base = perfect_fractional_matching(compact(spec.A));
        if (!f_base) throw Error("base pfm missing despite nu* = q");
        std::map<int, Rational> f_of_edge;
        for (auto& [e, w] : *f_base) f_of_edge[e] = w;
        // weights per part edge (compacted part hypergraphs keep edge order)
        std::vector<std::map<int, Rational>> w_of(spec.parts.size());
        for (size_t i = 0; i < spec.parts.size(); ++i)
            if (part_pfm[i])
                for (auto& [e, w] : *part_pfm[i]) w_of[i][e] = w;
        // accumulate load per vertex of C
        std::vector<Rational> load(result.loom->A.n, Rational(0));
        // provenance is in construction order; rebuild the same edges
        for (const auto& [bi, choices] : result.c_provenance) {
            Rational g = f_of_edge.count(bi) ? f_of_edge[bi] : Rational(0);
            if (g == 0) continue;
            int s_a = spec.parts[choices.front().first].s;
            for (auto& [part, eidx] : choices)
                g *= w_of[part].count(eidx) ? w_of[part][eidx] : Rational(0);
            for (size_t k = 1; k < choices.size(); ++k) g /= s_a;
            if (g == 0) continue;
            BitSet edge(result.loom->A.n);
            for (auto& [part, eidx] : choices)
                spec.parts[part].A.edges[eidx].for_each(
                    [&](int v) { edge.set(v + result.part_offsets[part]); });
            edge.for_each([&](int v) { load[v] += g; });
        }
        rp.pfm_weighting_valid = true;
        BitSet supp = result.loom->A.support();
        supp.for_each([&](int v) {
            if (load[v] != 1) rp.pfm_weighting_valid = false;
        });
        if (!rp.pfm_weighting_valid) rp.detail = "reconstructed weighting is not saturating";
    }
    return rp;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph::make(n, es);
}

Graph complete_bipartite(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) es.push_back({i, n + j});
    return Graph::make(2 * n, es);
}

Graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});          // outer cycle
        es.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        es.push_back({i, 5 + i});                // spokes
    }
    return Graph::make(10, es);
}

Graph triangle_blowup(const Graph& G) {
    if (G.regularity() != std::optional<int>(3))
        throw NotRegular("triangle blow-up is defined for cubic graphs");
    const int n = G.vertex_count();
    // vertex v becomes {3v, 3v+1, 3v+2}; its k-th incident edge (by edge
    // order) attaches at 3v+k
    std::vector<int> seen(n, 0);
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) {
        es.push_back({3 * v, 3 * v + 1});
        es.push_back({3 * v + 1, 3 * v + 2});
        es.push_back({3 * v, 3 * v + 2});
    }
    for (int e = 0; e < G.edge_count(); ++e) {
        auto [u, v] = G.endpoints(e);
        es.push_back({3 * u + seen[u]++, 3 * v + seen[v]++});
    }
    return Graph::make(3 * n, es);
}

namespace {

void pm_rec_graph(const std::vector<uint32_t>& adj, const std::vector<std::vector<int>>& edge_at,
                  const std::vector<std::pair<int, int>>& ends, uint32_t uncovered,
                  std::vector<int>& cur, std::vector<BitSet>& out, int m) {
    if (!uncovered) {
        out.push_back(BitSet::from_indices(m, cur));
        return;
    }
    int v = __builtin_ctz(uncovered);
    for (int e : edge_at[v]) {
        auto [a, b] = ends[e];
        int w = a == v ? b : a;
        if (!((uncovered >> w) & 1)) continue;
        cur.push_back(e);
        pm_rec_graph(adj, edge_at, ends, uncovered & ~(uint32_t(1) << v) & ~(uint32_t(1) << w),
                     cur, out, m);
        cur.pop_back();
    }
}

}  // namespace

Hypergraph pm_hypergraph(const Graph& G) {
    const int n = G.vertex_count();
    if (n > 32) throw TooLarge("perfect matching enumeration is limited to 32 vertices");
    const int m = G.edge_count();
    if (n % 2 == 1) return Hypergraph::from_edge_sets(m, {});
    std::vector<uint32_t> adj(n, 0);
    std::vector<std::vector<int>> edge_at(n);
    std::vector<std::pair<int, int>> ends(m);
    for (int e = 0; e < m; ++e) {
        ends[e] = G.endpoints(e);
        edge_at[ends[e].first].push_back(e);
        edge_at[ends[e].second].push_back(e);
        adj[ends[e].first] |= uint32_t(1) << ends[e].second;
        adj[ends[e].second] |= uint32_t(1) << ends[e].first;
    }
    uint32_t all = n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
    std::vector<int> cur;
    std::vector<BitSet> out;
    pm_rec_graph(adj, edge_at, ends, all, cur, out, m);
    return Hypergraph::from_edge_sets(m, std::move(out));
}

Hypergraph star_hypergraph(const Graph& G) {
    const int n = G.vertex_count();
    const int m = G.edge_count();
    std::vector<BitSet> stars;
    for (int v = 0; v < n; ++v) {
        BitSet s(m);
        for (int e = 0; e < m; ++e)
            if (G.h.edges[e].test(v)) s.set(e);
        if (s.any()) stars.push_back(std::move(s));
    }
    return Hypergraph::from_edge_sets(m, std::move(stars));
}

std::optional<Loom> graph_loom(const Graph& G, VerificationReport* report_out,
                               uint64_t node_budget) {
    auto reg = G.regularity();
    if (!reg) throw NotRegular("graph loom needs a regular graph");
    if (G.vertex_count() % 2 == 1) throw OddOrder("graph loom needs an even vertex count");
    Hypergraph A = pm_hypergraph(G);
    Hypergraph B = star_hypergraph(G);
    if (A.empty_family()) {
        if (report_out) {
            VerificationReport rep;
            rep.add({"closure-pre-uniform", false, true, "graph has no perfect matching", {}});
            *report_out = rep;
        }
        return std::nullopt;
    }
    return loom_closure(A, B, report_out, node_budget);
}

Loom r2_loom(const std::vector<int>& q) {
    if (q.empty()) throw IndexOutOfRange("r2 loom needs at least one block");
    int n = 0;
    for (int x : q) {
        if (x < 1) throw IndexOutOfRange("block sizes must be positive");
        n += 2 * x;
    }
    std::vector<std::pair<int, int>> sides;  // offsets of X_{i,1}, X_{i,2}
    int off = 0;
    for (int x : q) {
        sides.push_back({off, off + x});
        off += 2 * x;
    }
    // A: all 2^t union-of-one-side-per-block edges
    std::vector<std::vector<int>> a_edges;
    int t = (int)q.size();
    for (int mask = 0; mask < (1 << t); ++mask) {
        std::vector<int> e;
        for (int i = 0; i < t; ++i) {
            int base = ((mask >> i) & 1) ? sides[i].second : sides[i].first;
            for (int k = 0; k < q[i]; ++k) e.push_back(base + k);
        }
        a_edges.push_back(e);
    }
    std::vector<std::vector<int>> b_edges;
    for (int i = 0; i < t; ++i)
        for (int u = 0; u < q[i]; ++u)
            for (int v = 0; v < q[i]; ++v)
                b_edges.push_back({sides[i].first + u, sides[i].second + v});
    return must_verify(Hypergraph::make(n, a_edges), Hypergraph::make(n, b_edges), "r2 loom");
}

Hypergraph fano_plane() {
    return Hypergraph::make(
        7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

}  // namespace loomlab
