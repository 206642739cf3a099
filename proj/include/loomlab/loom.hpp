#pragma once

#include "loomlab/covers.hpp"
#include "loomlab/fraclp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loomlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool applicable = true;
    std::string detail;
    std::vector<BitSet> witness_sets;  // concrete counter-witnesses, when any
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    IntCertificate cert_tau_a, cert_tau_b;

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.applicable && !c.pass) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
};

// Verified orthogonal pair: A r-uniform, B s-uniform, tau(A)=s, tau(B)=r,
// A = C_r(B), B = C_s(A).
struct Loom {
    Hypergraph A, B;
    int r = 0, s = 0;
    VerificationReport report;
};

// Checks the axioms exactly; a loom comes back iff all of them hold.
// Failures are reported with witnesses, never thrown.
std::optional<Loom> verify_loom(const Hypergraph& A, const Hypergraph& B,
                                VerificationReport* report_out = nullptr,
                                uint64_t node_budget = kDefaultNodeBudget);

// One closure round A' = C_r(B), B' = C_s(A'), then a full verification.
std::optional<Loom> loom_closure(const Hypergraph& A, const Hypergraph& B,
                                 VerificationReport* report_out = nullptr,
                                 uint64_t node_budget = kDefaultNodeBudget);

// Structural audits of a verified loom (star containment, matching-size
// law, perfect fractional matchings, perp identities, pinning sizes).
VerificationReport audit_lemmas(const Loom& L);

struct LoomQuantities {
    IntCertificate tau_union, nu_union;
    FracCertificate cert_union, cert_a, cert_b;  // tau* = nu* on each
    int vertex_count = 0;
};

LoomQuantities loom_quantities(const Loom& L, uint64_t node_budget = kDefaultNodeBudget);

struct ConjectureReport {
    // instance checks; a false entry on a verified loom is a finding
    bool taustar_union_is_max = false;   // tau*(L) = max(r,s)
    bool taustar_sides = false;          // tau*(A) = s and tau*(B) = r
    bool vertex_count_rs = false;        // |V| = r*s
    bool gl_applicable = false;          // r,s >= 2
    bool gl_bound = false;               // tau(L) <= r+s-2
    bool tau_exact = false;
    LoomQuantities q;

    bool all_hold() const {
        return taustar_union_is_max && taustar_sides && vertex_count_rs &&
               (!gl_applicable || (gl_bound && tau_exact));
    }
};

ConjectureReport conjecture_report(const Loom& L, uint64_t node_budget = kDefaultNodeBudget);

Loom swap_components(const Loom& L);

// Edge-union A ∪ B of the two components.
Hypergraph loom_union(const Loom& L);

}  // namespace loomlab
