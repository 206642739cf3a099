#include "loomlab/canonical.hpp"

#include <algorithm>
#include <map>

namespace loomlab {

namespace {

struct CanonProblem {
    int n = 0;
    std::vector<BitSet> edges;
    std::vector<int> types;               // parallel to edges
    std::vector<std::vector<int>> incident;  // vertex -> edge ids

    CanonProblem(int n_, std::vector<BitSet> es, std::vector<int> ts)
        : n(n_), edges(std::move(es)), types(std::move(ts)), incident(n_) {
        for (int e = 0; e < (int)edges.size(); ++e)
            edges[e].for_each([&](int v) { incident[v].push_back(e); });
    }
};

int class_count(const std::vector<int>& col) {
    int m = -1;
    for (int c : col) m = std::max(m, c);
    return m + 1;
}

// One refinement pass: recolor vertices by (old color, multiset of incident
// edge signatures), edges by (type, multiset of member colors). Colors stay
// dense and are ordered by signature, so the result is label-independent.
std::vector<int> refine(const CanonProblem& p, std::vector<int> col) {
    const int m = (int)p.edges.size();
    while (true) {
        std::vector<std::vector<int>> ekey(m);
        for (int e = 0; e < m; ++e) {
            auto& k = ekey[e];
            k.push_back(p.types[e]);
            p.edges[e].for_each([&](int v) { k.push_back(col[v]); });
            std::sort(k.begin() + 1, k.end());
        }
        std::map<std::vector<int>, int> eid;
        for (int e = 0; e < m; ++e) eid.emplace(ekey[e], 0);
        {
            int next = 0;
            for (auto& kv : eid) kv.second = next++;
        }
        std::vector<std::vector<int>> vkey(p.n);
        for (int v = 0; v < p.n; ++v) {
            auto& k = vkey[v];
            k.push_back(col[v]);
            for (int e : p.incident[v]) k.push_back(eid[ekey[e]]);
            std::sort(k.begin() + 1, k.end());
        }
        std::map<std::vector<int>, int> vid;
        for (int v = 0; v < p.n; ++v) vid.emplace(vkey[v], 0);
        {
            int next = 0;
            for (auto& kv : vid) kv.second = next++;
        }
        std::vector<int> ncol(p.n);
        for (int v = 0; v < p.n; ++v) ncol[v] = vid[vkey[v]];
        if (class_count(ncol) == class_count(col)) return ncol;
        col = std::move(ncol);
    }
}

std::vector<int32_t> encode(const CanonProblem& p, const std::vector<int>& perm) {
    std::vector<std::vector<int32_t>> rel(p.edges.size());
    for (size_t e = 0; e < p.edges.size(); ++e) {
        auto& r = rel[e];
        r.push_back(p.types[e]);
        r.push_back(p.edges[e].count());
        p.edges[e].for_each([&](int v) { r.push_back(perm[v]); });
        std::sort(r.begin() + 2, r.end());
    }
    std::sort(rel.begin(), rel.end());
    std::vector<int32_t> code;
    code.push_back(p.n);
    code.push_back((int32_t)p.edges.size());
    for (auto& r : rel) code.insert(code.end(), r.begin(), r.end());
    return code;
}

struct CanonSearch {
    const CanonProblem& p;
    std::vector<int32_t> best_code;
    std::vector<int> best_perm;
    bool have_best = false;
    uint64_t nodes = 0;
    static constexpr uint64_t kBudget = 20'000'000;

    explicit CanonSearch(const CanonProblem& p_) : p(p_) {}

    void leaf(const std::vector<int>& col) {
        std::vector<int32_t> code = encode(p, col);
        if (!have_best || code < best_code) {
            best_code = std::move(code);
            best_perm = col;
            have_best = true;
        }
    }

    void run(std::vector<int> col) {
        if (++nodes > kBudget)
            throw TooLarge("canonical labeling search budget exceeded");
        col = refine(p, col);
        int k = class_count(col);
        if (k == p.n) {
            leaf(col);
            return;
        }
        // cells per color
        std::vector<std::vector<int>> cells(k);
        for (int v = 0; v < p.n; ++v) cells[col[v]].push_back(v);
        // prefer a structured cell for branching; structureless cells
        // (no incident edges) are interchangeable and split deterministically
        int target = -1;
        for (int c = 0; c < k; ++c)
            if (cells[c].size() > 1 && !p.incident[cells[c][0]].empty()) {
                target = c;
                break;
            }
        if (target < 0) {
            std::vector<int> ncol = col;
            int next = k;
            for (int c = 0; c < k; ++c)
                if (cells[c].size() > 1)
                    for (size_t i = 1; i < cells[c].size(); ++i) ncol[cells[c][i]] = next++;
            run(std::move(ncol));
            return;
        }
        for (int v : cells[target]) {
            std::vector<int> ncol = col;
            ncol[v] = k;  // individualize
            run(std::move(ncol));
        }
    }
};

PairCanon canonicalize(int n, std::vector<BitSet> edges, std::vector<int> types) {
    CanonProblem p(n, std::move(edges), std::move(types));
    CanonSearch s(p);
    s.run(std::vector<int>(n, 0));
    return {s.best_perm, s.best_code};
}

std::vector<int> inverse_perm(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = (int)i;
    return inv;
}

}  // namespace

Hypergraph apply_perm(const Hypergraph& H, const std::vector<int>& perm) {
    std::vector<BitSet> out;
    out.reserve(H.edges.size());
    for (const auto& e : H.edges) {
        BitSet s(H.n);
        e.for_each([&](int v) { s.set(perm[v]); });
        out.push_back(std::move(s));
    }
    return Hypergraph::from_edge_sets(H.n, std::move(out));
}

std::pair<Hypergraph, IsoCertificate> canonical_form(const Hypergraph& H) {
    PairCanon c = canonicalize(H.n, H.edges, std::vector<int>(H.edges.size(), 0));
    return {apply_perm(H, c.perm), IsoCertificate{c.perm}};
}

std::optional<IsoCertificate> isomorphic(const Hypergraph& H1, const Hypergraph& H2) {
    if (H1.n != H2.n || H1.size() != H2.size()) return std::nullopt;
    auto [c1, cert1] = canonical_form(H1);
    auto [c2, cert2] = canonical_form(H2);
    if (c1 != c2) return std::nullopt;
    std::vector<int> inv2 = inverse_perm(cert2.perm);
    std::vector<int> perm(H1.n);
    for (int v = 0; v < H1.n; ++v) perm[v] = inv2[cert1.perm[v]];
    if (apply_perm(H1, perm) != H2) return std::nullopt;  // paranoia
    return IsoCertificate{perm};
}

PairCanon canonical_pair(const Hypergraph& A, const Hypergraph& B) {
    if (A.n != B.n) throw UniverseMismatch("pair canonicalization needs one universe");
    std::vector<BitSet> edges = A.edges;
    edges.insert(edges.end(), B.edges.begin(), B.edges.end());
    std::vector<int> types(A.edges.size(), 0);
    types.resize(edges.size(), 1);
    return canonicalize(A.n, std::move(edges), std::move(types));
}

std::optional<IsoCertificate> pair_isomorphic(const Hypergraph& A1, const Hypergraph& B1,
                                              const Hypergraph& A2, const Hypergraph& B2) {
    if (A1.n != A2.n) return std::nullopt;
    PairCanon c1 = canonical_pair(A1, B1);
    PairCanon c2 = canonical_pair(A2, B2);
    if (c1.code != c2.code) return std::nullopt;
    std::vector<int> inv2 = inverse_perm(c2.perm);
    std::vector<int> perm(A1.n);
    for (int v = 0; v < A1.n; ++v) perm[v] = inv2[c1.perm[v]];
    if (apply_perm(A1, perm) != A2 || apply_perm(B1, perm) != B2) return std::nullopt;
    return IsoCertificate{perm};
}

uint64_t code_hash(const std::vector<int32_t>& code) {
    uint64_t h = 1469598103934665603ull;
    for (int32_t x : code) {
        h ^= uint64_t(uint32_t(x));
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace loomlab
