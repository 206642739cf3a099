#include "loomlab/hypergraph.hpp"

#include <algorithm>
#include <map>

namespace loomlab {

Hypergraph Hypergraph::make(int n, const std::vector<std::vector<int>>& raw_edges) {
    if (n < 0) throw IndexOutOfRange("vertex count must be nonnegative");
    std::vector<BitSet> sets;
    sets.reserve(raw_edges.size());
    for (const auto& e : raw_edges) {
        if (e.empty()) throw EmptyEdge("edge with no vertices");
        BitSet s(n);
        for (int v : e) {
            if (v < 0 || v >= n)
                throw IndexOutOfRange("vertex " + std::to_string(v) +
                                      " outside universe of size " + std::to_string(n));
            s.set(v);
        }
        sets.push_back(std::move(s));
    }
    return from_edge_sets(n, std::move(sets));
}

Hypergraph Hypergraph::from_edge_sets(int n, std::vector<BitSet> sets) {
    for (const auto& s : sets)
        if (s.empty()) throw EmptyEdge("edge with no vertices");
    std::sort(sets.begin(), sets.end(), edge_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    Hypergraph h;
    h.n = n;
    h.edges = std::move(sets);
    return h;
}

BitSet Hypergraph::support() const {
    BitSet s(n);
    for (const auto& e : edges) s |= e;
    return s;
}

bool Hypergraph::grounded() const { return support().count() == n; }

std::optional<int> Hypergraph::uniformity_opt() const {
    if (edges.empty()) return std::nullopt;
    int r = edges.front().count();
    if (edges.back().count() != r) return std::nullopt;  // edges size-sorted
    return r;
}

int Hypergraph::degree(int v) const {
    if (v < 0 || v >= n) throw IndexOutOfRange("vertex out of range");
    int d = 0;
    for (const auto& e : edges)
        if (e.test(v)) ++d;
    return d;
}

std::optional<int> is_uniform(const Hypergraph& h) {
    if (h.empty_family()) throw EmptyHypergraph("uniformity of an empty hypergraph");
    return h.uniformity_opt();
}

OrthResult is_orthogonal(const Hypergraph& A, const Hypergraph& B) {
    if (A.n != B.n) throw UniverseMismatch("orthogonality across different universes");
    for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j < B.size(); ++j)
            if (A.edges[i].intersection_count(B.edges[j]) != 1)
                return {false, i, j};
    return {true, -1, -1};
}

OrthResult is_cross_intersecting(const Hypergraph& A, const Hypergraph& B) {
    if (A.n != B.n) throw UniverseMismatch("cross-intersection across different universes");
    for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j < B.size(); ++j)
            if (!A.edges[i].intersects(B.edges[j])) return {false, i, j};
    return {true, -1, -1};
}

Hypergraph join(const Hypergraph& A, const Hypergraph& C) {
    if (A.n != C.n) throw UniverseMismatch("join across different universes");
    if (A.support().intersects(C.support()))
        throw UniverseOverlap("join requires disjoint supports");
    std::vector<BitSet> out;
    out.reserve(size_t(A.size()) * size_t(C.size()));
    for (const auto& a : A.edges)
        for (const auto& c : C.edges) out.push_back(a | c);
    return Hypergraph::from_edge_sets(A.n, std::move(out));
}

Hypergraph restrict_to(const Hypergraph& H, const BitSet& T, int* dropped) {
    std::vector<BitSet> out;
    int drop = 0;
    for (const auto& e : H.edges) {
        BitSet r = e & T;
        if (r.empty())
            ++drop;
        else
            out.push_back(std::move(r));
    }
    if (dropped) *dropped = drop;
    return Hypergraph::from_edge_sets(H.n, std::move(out));
}

Hypergraph star(const Hypergraph& H, int v) {
    if (v < 0 || v >= H.n) throw IndexOutOfRange("star vertex out of range");
    std::vector<BitSet> out;
    for (const auto& e : H.edges)
        if (e.test(v)) out.push_back(e);
    return Hypergraph::from_edge_sets(H.n, std::move(out));
}

Components connected_components(const Hypergraph& H) {
    // Union-find over support vertices; each edge merges its members.
    std::vector<int> parent(H.n);
    for (int i = 0; i < H.n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : H.edges) {
        int root = find(e.first());
        e.for_each([&](int v) { parent[find(v)] = root; });
    }
    std::map<int, int> part_of_root;
    Components comps;
    BitSet supp = H.support();
    supp.for_each([&](int v) {
        int r = find(v);
        if (!part_of_root.count(r)) {
            part_of_root[r] = (int)comps.parts.size();
            comps.parts.emplace_back(H.n);
            comps.edge_index.emplace_back();
        }
        comps.parts[part_of_root[r]].set(v);
    });
    for (int i = 0; i < H.size(); ++i)
        comps.edge_index[part_of_root[find(H.edges[i].first())]].push_back(i);
    return comps;
}

Hypergraph sub_hypergraph(const Hypergraph& H, const std::vector<int>& edge_idx) {
    std::vector<BitSet> out;
    out.reserve(edge_idx.size());
    for (int i : edge_idx) out.push_back(H.edges[i]);
    return Hypergraph::from_edge_sets(H.n, std::move(out));
}

namespace {

bool rpartite_rec(const Hypergraph& H, const std::vector<int>& verts, size_t pos,
                  std::vector<int>& color, int r, int used,
                  std::vector<std::vector<int>>& edge_color_count) {
    if (pos == verts.size()) return true;
    int v = verts[pos];
    int limit = std::min(r - 1, used);  // new colors tried once (symmetry)
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (int ei = 0; ei < H.size() && ok; ++ei)
            if (H.edges[ei].test(v) && edge_color_count[ei][c] > 0) ok = false;
        if (!ok) continue;
        color[v] = c;
        for (int ei = 0; ei < H.size(); ++ei)
            if (H.edges[ei].test(v)) ++edge_color_count[ei][c];
        if (rpartite_rec(H, verts, pos + 1, color, r, std::max(used, c + 1),
                         edge_color_count))
            return true;
        for (int ei = 0; ei < H.size(); ++ei)
            if (H.edges[ei].test(v)) --edge_color_count[ei][c];
        color[v] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<BitSet>> is_r_partite(const Hypergraph& H) {
    auto r_opt = is_uniform(H);
    if (!r_opt) throw NotUniform("r-partiteness needs a uniform hypergraph");
    int r = *r_opt;
    std::vector<int> verts = H.support().to_indices();
    std::vector<int> color(H.n, -1);
    std::vector<std::vector<int>> ecc(H.size(), std::vector<int>(r, 0));
    if (!rpartite_rec(H, verts, 0, color, r, 0, ecc)) return std::nullopt;
    std::vector<BitSet> sides(r, BitSet(H.n));
    for (int v : verts) sides[color[v]].set(v);
    return sides;
}

Hypergraph union_families(const Hypergraph& A, const Hypergraph& B) {
    if (A.n != B.n) throw UniverseMismatch("union across different universes");
    std::vector<BitSet> out = A.edges;
    out.insert(out.end(), B.edges.begin(), B.edges.end());
    return Hypergraph::from_edge_sets(A.n, std::move(out));
}

Hypergraph shift(const Hypergraph& H, int offset, int new_n) {
    if (offset < 0 || new_n < offset + H.n)
        throw IndexOutOfRange("shift does not fit in the target universe");
    std::vector<BitSet> out;
    out.reserve(H.edges.size());
    for (const auto& e : H.edges) {
        BitSet s(new_n);
        e.for_each([&](int v) { s.set(v + offset); });
        out.push_back(std::move(s));
    }
    return Hypergraph::from_edge_sets(new_n, std::move(out));
}

Hypergraph compact(const Hypergraph& H, std::vector<int>* old_of_new) {
    std::vector<int> old_ids = H.support().to_indices();
    std::vector<int> new_of_old(H.n, -1);
    for (int i = 0; i < (int)old_ids.size(); ++i) new_of_old[old_ids[i]] = i;
    std::vector<BitSet> out;
    out.reserve(H.edges.size());
    for (const auto& e : H.edges) {
        BitSet s((int)old_ids.size());
        e.for_each([&](int v) { s.set(new_of_old[v]); });
        out.push_back(std::move(s));
    }
    if (old_of_new) *old_of_new = old_ids;
    return Hypergraph::from_edge_sets((int)old_ids.size(), std::move(out));
}

Graph Graph::make(int n, const std::vector<std::pair<int, int>>& edge_list) {
    std::vector<std::vector<int>> raw;
    raw.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u == v) throw EmptyEdge("loop edge in a simple graph");
        raw.push_back({u, v});
    }
    return from_hypergraph(Hypergraph::make(n, raw));
}

Graph Graph::from_hypergraph(Hypergraph hg) {
    for (const auto& e : hg.edges)
        if (e.count() != 2) throw NotUniform("graph edges must have size 2");
    return Graph{std::move(hg)};
}

std::pair<int, int> Graph::endpoints(int e) const {
    int u = h.edges[e].first();
    return {u, h.edges[e].next(u)};
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(h.n, 0);
    for (const auto& e : h.edges) e.for_each([&](int v) { ++d[v]; });
    return d;
}

int Graph::max_degree() const {
    int m = 0;
    for (int d : degrees()) m = std::max(m, d);
    return m;
}

std::optional<int> Graph::regularity() const {
    auto d = degrees();
    if (d.empty()) return std::nullopt;
    for (int x : d)
        if (x != d[0]) return std::nullopt;
    return d[0];
}

}  // namespace loomlab
