#pragma once

#include "loomlab/rational.hpp"

#include <cstdint>
#include <vector>

namespace loomlab {

enum class RowSense { LE, EQ };

// max c·x  subject to  A x (<=|=) b,  x >= 0,  with b >= 0.
struct LinearProgram {
    int num_vars = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<RowSense> sense;
    std::vector<Rational> objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Optimal;
    Rational value;
    std::vector<Rational> x;  // primal solution
    std::vector<Rational> y;  // dual value per row
    uint64_t pivots = 0;
};

// Dense exact tableau simplex, two phases, Bland's anti-cycling rule.
LpResult simplex_max(const LinearProgram& lp);

}  // namespace loomlab
