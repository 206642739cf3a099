#pragma once

#include "loomlab/loom.hpp"

#include <optional>
#include <vector>

namespace loomlab {

// --- canonical looms -------------------------------------------------------

Loom loom_u();                                   // A = B = {{v}}
Loom loom_v(int r);                              // single r-edge vs singletons
Loom matching_transversal_loom(int r, int s);    // r-uniform s-matching vs transversals
Loom grid_loom(int r);                           // rows+columns vs permutation subgrids
Loom vane_33();

// --- composition and decomposition -----------------------------------------

// (A1*A2, B1 ∪ B2); second uniformities must match. With full_verify the
// result is re-verified axiom by axiom, otherwise structural checks plus the
// factor reports carry the verification.
Loom compose1(const Loom& L1, const Loom& L2, bool full_verify = true,
              uint64_t node_budget = kDefaultNodeBudget);
Loom compose2(const Loom& L1, const Loom& L2, bool full_verify = true,
              uint64_t node_budget = kDefaultNodeBudget);

// Splits along disconnected components (either side) down to factors whose
// two components are both connected. Factors are re-verified.
std::vector<Loom> decompose(const Loom& L);

// One split along the connected components of B only (the join-side
// factorization); returns {L} when B is connected.
std::vector<Loom> split_b_components(const Loom& L);

// --- blow-ups ---------------------------------------------------------------

struct BlowupSpec {
    Hypergraph A, B;          // orthogonal pair with full joint support
    std::vector<Loom> parts;  // one loom per vertex of [n]
};

struct BlowupResult {
    Hypergraph C, D;
    int c = -1, d = -1;                    // uniformities when defined
    bool cond_uniform = false;
    bool cond_b_side = false;              // minimal covers of A outside B are heavy
    bool cond_a_side = false;              // minimal covers of B outside A are heavy
    std::string violation;                 // names the offending cover
    std::optional<Loom> loom;              // present when verified
    // provenance, parallel to C/D edge order: base edge index plus the
    // (part, part-edge) choices that produced the edge
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> c_provenance;
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> d_provenance;
    std::vector<int> part_offsets;

    bool conditions_hold() const { return cond_uniform && cond_b_side && cond_a_side; }
};

BlowupResult blow_up(const BlowupSpec& spec, bool verify = true,
                     uint64_t node_budget = kDefaultNodeBudget);

struct MatchingAuditReport {
    bool pm_transfer_holds = false;      // nu(C) = d  <=>  nu(A_i) = s_i for all i
    bool pm_in_c = false;
    bool pm_in_all_parts = false;
    bool pfm_premise = false;            // nu*(A) = q and nu*(A_i) = s_i for all i
    bool pfm_weighting_valid = false;    // reconstructed weighting saturates V(C)
    std::string detail;
};

// Exercises the perfect-matching and perfect-fractional-matching transfer
// statements on a successful blow-up. Throws HypothesisUnmet when the
// equal-s hypothesis (or the loom premise on the base pair) fails.
MatchingAuditReport blowup_matching_audit(const BlowupSpec& spec, const BlowupResult& result);

// --- graphs and graph looms --------------------------------------------------

Graph complete_graph(int n);
Graph complete_bipartite(int n);  // K_{n,n}
Graph petersen();
Graph triangle_blowup(const Graph& G);  // each vertex of a cubic graph becomes a triangle

// All perfect matchings of G as a hypergraph on ground set E(G).
Hypergraph pm_hypergraph(const Graph& G);
Hypergraph star_hypergraph(const Graph& G);

// loom_closure(PM(G), ST(G)) for an s-regular graph of even order.
std::optional<Loom> graph_loom(const Graph& G, VerificationReport* report_out = nullptr,
                               uint64_t node_budget = kDefaultNodeBudget);

// --- families ----------------------------------------------------------------

// The (sum q_i, 2)-loom with block sides X_{i,1}, X_{i,2} of sizes q_i.
Loom r2_loom(const std::vector<int>& q);

Hypergraph fano_plane();

}  // namespace loomlab
