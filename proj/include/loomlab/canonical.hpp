#pragma once

#include "loomlab/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace loomlab {

// Witness permutation; perm[old_vertex] = new_vertex. Applying it to one
// edge list yields the other exactly.
struct IsoCertificate {
    std::vector<int> perm;
};

Hypergraph apply_perm(const Hypergraph& H, const std::vector<int>& perm);

// Canonical relabeling, invariant under vertex permutations. Iterative
// refinement (incident edge sizes/colors) plus backtracking over the
// remaining orbits; exact, no external tools.
std::pair<Hypergraph, IsoCertificate> canonical_form(const Hypergraph& H);

std::optional<IsoCertificate> isomorphic(const Hypergraph& H1, const Hypergraph& H2);

// Canonicalization of an ordered pair (A,B) on a shared universe with the
// two families kept distinguishable. The encoding is usable as a dedup key.
struct PairCanon {
    std::vector<int> perm;
    std::vector<int32_t> code;
};
PairCanon canonical_pair(const Hypergraph& A, const Hypergraph& B);

std::optional<IsoCertificate> pair_isomorphic(const Hypergraph& A1, const Hypergraph& B1,
                                              const Hypergraph& A2, const Hypergraph& B2);

uint64_t code_hash(const std::vector<int32_t>& code);

}  // namespace loomlab
