#include "loomlab/fraclp.hpp"

#include "loomlab/simplex.hpp"

#include <algorithm>

namespace loomlab {

FracCertificate nu_star(const Hypergraph& H) {
    if (H.empty_family()) throw EmptyHypergraph("nu* of an empty hypergraph");
    std::vector<int> verts = H.support().to_indices();
    const int m = (int)verts.size();
    const int ne = H.size();
    std::vector<int> row_of_vertex(H.n, -1);
    for (int i = 0; i < m; ++i) row_of_vertex[verts[i]] = i;

    LinearProgram lp;
    lp.num_vars = ne;
    lp.rows.assign(m, std::vector<Rational>(ne, Rational(0)));
    lp.rhs.assign(m, Rational(1));
    lp.sense.assign(m, RowSense::LE);
    lp.objective.assign(ne, Rational(1));
    for (int e = 0; e < ne; ++e)
        H.edges[e].for_each([&](int v) { lp.rows[row_of_vertex[v]][e] = 1; });

    LpResult r = simplex_max(lp);
    if (r.status != LpStatus::Optimal)
        throw Error("fractional matching LP did not reach an optimum");

    FracCertificate cert;
    cert.value = r.value;
    Rational primal_total = 0, dual_total = 0;
    for (int e = 0; e < ne; ++e)
        if (r.x[e] != 0) {
            cert.primal.push_back({e, r.x[e]});
            primal_total += r.x[e];
        }
    for (int i = 0; i < m; ++i)
        if (r.y[i] != 0) {
            cert.dual.push_back({verts[i], r.y[i]});
            dual_total += r.y[i];
        }
    // exact duality and feasibility are structural here; verify anyway
    if (primal_total != cert.value || dual_total != cert.value)
        throw Error("LP duality mismatch in nu*");
    for (int i = 0; i < m; ++i) {
        Rational load = 0;
        for (auto& [e, w] : cert.primal)
            if (H.edges[e].test(verts[i])) load += w;
        if (load > 1) throw Error("infeasible fractional matching from LP");
        if (load == 1) cert.saturated_vertices.push_back(verts[i]);
    }
    for (int e = 0; e < ne; ++e) {
        Rational load = 0;
        for (auto& [v, w] : cert.dual)
            if (H.edges[e].test(v)) load += w;
        if (load < 1) throw Error("infeasible fractional cover from LP");
        if (load == 1) cert.tight_edges.push_back(e);
    }
    return cert;
}

std::optional<std::vector<std::pair<int, Rational>>> perfect_fractional_matching(
    const Hypergraph& H) {
    if (!H.grounded())
        throw NotGrounded("perfect fractional matching needs every vertex in some edge");
    const int ne = H.size();
    LinearProgram lp;
    lp.num_vars = ne;
    lp.rows.assign(H.n, std::vector<Rational>(ne, Rational(0)));
    lp.rhs.assign(H.n, Rational(1));
    lp.sense.assign(H.n, RowSense::EQ);
    lp.objective.assign(ne, Rational(0));
    for (int e = 0; e < ne; ++e)
        H.edges[e].for_each([&](int v) { lp.rows[v][e] = 1; });

    LpResult r = simplex_max(lp);
    if (r.status == LpStatus::Infeasible) return std::nullopt;
    if (r.status != LpStatus::Optimal) throw Error("pfm feasibility LP failed");
    std::vector<std::pair<int, Rational>> out;
    for (int e = 0; e < ne; ++e)
        if (r.x[e] != 0) out.push_back({e, r.x[e]});
    // re-check saturation exactly
    for (int v = 0; v < H.n; ++v) {
        Rational load = 0;
        for (auto& [e, w] : out)
            if (H.edges[e].test(v)) load += w;
        if (load != 1) throw Error("pfm witness fails saturation");
    }
    return out;
}

Rational t_value(const Graph& G, const BitSet& U) {
    int u = U.count();
    if (u % 2 == 0 || u < 3)
        throw EvenSubset("t(U) needs an odd subset of size at least 3");
    int inside = 0;
    for (const auto& e : G.h.edges)
        if (e.is_subset_of(U)) ++inside;
    return Rational(2 * inside, u - 1);
}

std::pair<Rational, BitSet> t_max(const Graph& G) {
    const int n = G.vertex_count();
    if (n > 24) throw TooLarge("t_max is limited to 24 vertices");
    if (n < 3) return {Rational(0), BitSet(n)};
    // adjacency masks; edges-inside computed incrementally over all masks
    std::vector<uint32_t> adj(n, 0);
    for (const auto& e : G.h.edges) {
        auto [a, b] = std::pair<int, int>{e.first(), e.next(e.first())};
        adj[a] |= uint32_t(1) << b;
        adj[b] |= uint32_t(1) << a;
    }
    const uint32_t total = uint32_t(1) << n;
    std::vector<uint16_t> inside(total, 0);
    Rational best = 0;
    uint32_t best_mask = 0;
    for (uint32_t mask = 1; mask < total; ++mask) {
        uint32_t low = mask & (~mask + 1);
        int v = __builtin_ctz(low);
        uint32_t rest = mask ^ low;
        inside[mask] = uint16_t(inside[rest] + __builtin_popcount(adj[v] & rest));
        int sz = __builtin_popcount(mask);
        if (sz >= 3 && (sz & 1)) {
            Rational t(2 * int(inside[mask]), sz - 1);
            if (t > best) {
                best = t;
                best_mask = mask;
            }
        }
    }
    BitSet U(n);
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1) U.set(v);
    return {best, U};
}

Rational fractional_edge_chromatic(const Graph& G) {
    Rational delta(G.max_degree());
    auto [t, witness] = t_max(G);
    (void)witness;
    return std::max(delta, t);
}

}  // namespace loomlab
