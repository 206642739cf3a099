#pragma once

#include "loomlab/bitset.hpp"
#include "loomlab/errors.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loomlab {

// A finite hypergraph: nonempty edges over the explicit universe
// {0,...,n-1}, stored deduplicated in canonical (size, numeric) order.
// The universe may be larger than the set of vertices actually used;
// support() and grounded() tell them apart.
struct Hypergraph {
    int n = 0;
    std::vector<BitSet> edges;
    std::vector<std::string> labels;  // optional; empty when unused

    static Hypergraph make(int n, const std::vector<std::vector<int>>& raw_edges);
    // Canonicalizes (sort + dedup). Empty sets are rejected.
    static Hypergraph from_edge_sets(int n, std::vector<BitSet> sets);

    int size() const { return (int)edges.size(); }
    bool empty_family() const { return edges.empty(); }

    BitSet support() const;
    bool grounded() const;

    // Uniformity without the nonemptiness precondition (nullopt when empty
    // or mixed); is_uniform() below enforces the precondition.
    std::optional<int> uniformity_opt() const;

    int degree(int v) const;

    bool operator==(const Hypergraph& o) const { return n == o.n && edges == o.edges; }
    bool operator!=(const Hypergraph& o) const { return !(*this == o); }
};

// r if every edge has size r. Throws EmptyHypergraph on an empty family.
std::optional<int> is_uniform(const Hypergraph& h);

struct OrthResult {
    bool ok = false;
    int a_index = -1, b_index = -1;  // first violating pair when !ok
};

// |a ∩ b| = 1 for all a in A, b in B. Throws UniverseMismatch.
OrthResult is_orthogonal(const Hypergraph& A, const Hypergraph& B);

// Pairwise nonempty intersections (the weaker condition).
OrthResult is_cross_intersecting(const Hypergraph& A, const Hypergraph& B);

// {a ∪ c}. Both on the same universe with disjoint supports; throws
// UniverseOverlap otherwise.
Hypergraph join(const Hypergraph& A, const Hypergraph& C);

// {s ∩ T : s ∈ H}, empties dropped (count reported via `dropped`).
Hypergraph restrict_to(const Hypergraph& H, const BitSet& T, int* dropped = nullptr);

// Edges containing v.
Hypergraph star(const Hypergraph& H, int v);

struct Components {
    std::vector<BitSet> parts;                  // support partition
    std::vector<std::vector<int>> edge_index;   // H edge ids per part
};

// Connected components of the 1-skeleton. Every edge lies inside one part.
Components connected_components(const Hypergraph& H);

// Sub-hypergraph on the same universe keeping the given edges.
Hypergraph sub_hypergraph(const Hypergraph& H, const std::vector<int>& edge_idx);

// Sides V_1..V_r with |e ∩ V_i| = 1 for every edge, or nullopt.
// Throws NotUniform when H is not uniform.
std::optional<std::vector<BitSet>> is_r_partite(const Hypergraph& H);

// Edge-union of two families on the same universe.
Hypergraph union_families(const Hypergraph& A, const Hypergraph& B);

// Relabel vertices v -> v + offset inside a universe of size new_n.
Hypergraph shift(const Hypergraph& H, int offset, int new_n);

// Drop unused vertices; old_of_new[i] = original index of new vertex i.
Hypergraph compact(const Hypergraph& H, std::vector<int>* old_of_new = nullptr);

// Simple loopless graph as a 2-uniform hypergraph.
struct Graph {
    Hypergraph h;

    static Graph make(int n, const std::vector<std::pair<int, int>>& edge_list);
    static Graph from_hypergraph(Hypergraph hg);  // validates 2-uniformity

    int vertex_count() const { return h.n; }
    int edge_count() const { return h.size(); }
    std::pair<int, int> endpoints(int e) const;
    std::vector<int> degrees() const;
    int max_degree() const;
    std::optional<int> regularity() const;
};

}  // namespace loomlab
