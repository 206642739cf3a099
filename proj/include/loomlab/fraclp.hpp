#pragma once

#include "loomlab/hypergraph.hpp"
#include "loomlab/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace loomlab {

// Matched primal/dual optimum: a fractional matching and a fractional cover
// of equal exact weight. Equality certifies optimality on its own.
struct FracCertificate {
    Rational value;
    std::vector<std::pair<int, Rational>> primal;  // edge index -> weight, ascending
    std::vector<std::pair<int, Rational>> dual;    // vertex -> weight, ascending
    std::vector<int> saturated_vertices;  // sum of incident primal weights = 1
    std::vector<int> tight_edges;         // sum of member dual weights = 1
};

// nu*(H); tau*(H) is the same certificate read from the dual side.
FracCertificate nu_star(const Hypergraph& H);

// A fractional matching saturating every universe vertex, or nullopt.
// Throws NotGrounded when some vertex lies in no edge.
std::optional<std::vector<std::pair<int, Rational>>> perfect_fractional_matching(
    const Hypergraph& H);

// t(U) = 2|E(G[U])| / (|U|-1) for odd |U| >= 3.
Rational t_value(const Graph& G, const BitSet& U);

// Maximum of t over odd subsets, with a maximizing subset. |V| <= 24.
std::pair<Rational, BitSet> t_max(const Graph& G);

// max(Delta(G), t(G)).
Rational fractional_edge_chromatic(const Graph& G);

}  // namespace loomlab
