#pragma once

#include "loomlab/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loomlab {

inline constexpr uint64_t kDefaultNodeBudget = 100'000'000;

enum class Quantity { Tau, Nu, NuR };

// Exact value with a feasible witness and a search attestation. When a node
// budget runs out the certificate reports proven bounds instead of a wrong
// exact value.
struct IntCertificate {
    Quantity quantity = Quantity::Tau;
    int value = 0;   // equals the optimum when exact
    int lower = 0;
    int upper = 0;
    bool exact = true;
    std::vector<BitSet> witness;        // tau: one cover set; nu/nuR: edges
    std::vector<int> witness_members;   // nuR: family index per witness edge
    uint64_t nodes = 0;
    std::string attestation;
};

// Covering number via branch and bound on a minimum-size uncovered edge;
// lower bounds from greedy disjoint-edge packing. `lower_hint` must be a
// proven lower bound (e.g. ceil of an exact fractional cover value).
IntCertificate tau(const Hypergraph& H, uint64_t node_budget = kDefaultNodeBudget,
                   int lower_hint = 0);

// Maximum matching size, exact.
IntCertificate nu(const Hypergraph& H, uint64_t node_budget = kDefaultNodeBudget);

// All covers of H of size exactly k, as a hypergraph on the same universe.
Hypergraph covers_of_size(const Hypergraph& H, int k);

// All inclusion-minimal covers.
Hypergraph minimal_covers(const Hypergraph& H);

// All p ⊆ support(H) with |p ∩ h| = 1 for every edge h and |p| <= max_size.
std::vector<BitSet> perp(const Hypergraph& H, int max_size);

// Some member of H^⊥, or nullopt.
std::optional<BitSet> is_pinnable(const Hypergraph& H);

// Max number of pairwise disjoint edges picked from distinct family members.
IntCertificate rainbow_matching_number(const std::vector<Hypergraph>& family,
                                       uint64_t node_budget = kDefaultNodeBudget);

// A matching whose union is the whole universe, or nullopt.
std::optional<std::vector<BitSet>> has_perfect_matching(const Hypergraph& H);

// Direct feasibility checks (used to re-validate witnesses).
bool check_cover(const Hypergraph& H, const BitSet& S);
bool check_matching(const Hypergraph& H, const std::vector<BitSet>& M);

}  // namespace loomlab
