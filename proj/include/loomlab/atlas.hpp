#pragma once

#include "loomlab/canonical.hpp"
#include "loomlab/weave.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace loomlab {

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t leaves = 0;
    uint64_t accepted = 0;  // looms found before isomorphism reduction
    double wall_seconds = 0.0;
    int threads = 1;
};

struct ClassificationResult {
    std::vector<Loom> classes;  // canonical representatives, deterministic order
    int decomposable_count = 0;
    int indecomposable_count = 0;
    SearchStats stats;
};

// Exhaustive search for (3,3)-looms on 9 vertices: a perfect matching of A
// is pinned to the grid columns and one of B to the rows, the remaining
// candidates are branched in canonical order with complement-rule forcing,
// and every surviving pair is re-verified and reduced modulo isomorphism.
ClassificationResult classify_33_looms(int threads = 1);

// All (r,2)-looms on exactly 2r vertices up to isomorphism (r <= 5).
ClassificationResult enumerate_r2_looms(int r);

// r+1 pairwise cross-intersecting r-uniform matchings of size r with
// tau* = r each; built from the perfect matchings of K4 (r=2) and the
// parallel classes of the 3x3 affine plane (r=3).
std::vector<Hypergraph> mols_family(int r);

struct FamilyCheckReport {
    bool pairwise_cross_intersecting = false;
    int violating_i = -1, violating_j = -1;
    std::vector<Rational> taustars;
    Rational min_taustar;
    int extension_trials = 0;
    int extension_vacuous = 0;     // no cross-intersecting candidate edge exists
    int extension_confirmed = 0;   // extended family had some tau* < r
    int extension_violations = 0;  // extended family kept all tau* = r
    bool pass() const { return pairwise_cross_intersecting && extension_violations == 0; }
};

FamilyCheckReport family_check(const std::vector<Hypergraph>& family, int extension_trials = 0,
                               uint64_t seed = 0);

// Cross-intersecting pair with nu_R < 2 by construction: B-edges are grown
// from one forced hitting vertex per A-edge.
std::pair<Hypergraph, Hypergraph> random_cross_intersecting(int r, int s, uint64_t seed);

struct BatteryReport {
    int r = 0;
    int count = 0;
    uint64_t seed = 0;
    int violations_taustar_le_r = 0;   // tau*(A ∪ B) <= r
    int violations_mixed_max = 0;      // mixed uniformities, <= max(r,s)
    int violations_equality_case = 0;  // tau* = r forces max nu* = r
    int equality_cases_seen = 0;
    int violations_c2 = 0;             // C_r(C_s(H)) ⊇ H
    int violations_c3 = 0;             // C_s(C_r(C_s(H))) = C_s(H)
    int violations_sandwich = 0;       // nu <= nu* = tau* <= tau
    bool clean() const {
        return violations_taustar_le_r == 0 && violations_mixed_max == 0 &&
               violations_equality_case == 0 && violations_c2 == 0 && violations_c3 == 0 &&
               violations_sandwich == 0;
    }
    std::string to_text() const;
};

BatteryReport property_battery(int count, uint64_t seed, int r);

// Number of integer partitions (test oracle for the r2 classification).
long long partition_count(int r);

}  // namespace loomlab
