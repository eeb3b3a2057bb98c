#pragma once

#include <vector>

#include "ksub/cost_table.hpp"
#include "ksub/relax.hpp"

namespace ksub {

// Exhaustive minimization result over the table's ambient cube.
struct MinimizationReport {
    CostValue optimum;                 // +inf iff the domain is empty
    std::vector<Labeling> minimizers;  // ascending encoded order
};

MinimizationReport brute_min(const CostTable& g);

// Persistency: every minimizer of the relaxation g fixes its nonzero
// coordinates in some minimizer of f. Throws RestrictionMismatch when g does
// not restrict to f on the fully labeled cube.
bool persistency_check(const CostTable& f, const CostTable& g);

// For finite-valued k-submodular tables: the maximum over [0,k]^n is already
// attained on [k]^n. Throws std::invalid_argument if any cell is +inf.
bool max_on_interior(const CostTable& g);

// Literal transcription of the elimination algorithm, deliberately different
// from relax: dense arrays over the whole cube, explicit per-level snapshot
// copies, nested scans over encoded indices, exact rationals throughout.
// Exists purely to cross-check relax; keep it simple, not fast.
RelaxationOutcome reference_relax(const CostTable& f);

}  // namespace ksub
