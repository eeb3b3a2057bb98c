#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "ksub/cost_table.hpp"
#include "ksub/oracle.hpp"
#include "ksub/relax.hpp"

namespace ksub {

// A cost table applied through a scope of 1-based variable indices
// (repeats allowed). The table's n is the constraint's arity.
struct Constraint {
    CostTable table;
    std::vector<std::uint32_t> scope;
};

struct VcspInstance {
    std::uint32_t n_vars = 0;
    Label k = 0;
    std::vector<Constraint> constraints;
};

void validate_instance(const VcspInstance& instance);

// A relaxed instance carries full-kind constraint tables; nonnegative is set
// iff every relaxed value is >= 0 (which makes OPT(I) itself usable as the
// FPT parameter).
struct RelaxedInstance {
    VcspInstance instance;
    bool nonnegative = true;
};

struct ConstraintFailure {
    std::size_t constraint_index;
    NonExtendabilityWitness witness;
};

// Relaxes every constraint table, sharing the relaxation of structurally
// identical tables, or reports the first constraint that is not extendable.
std::variant<RelaxedInstance, ConstraintFailure> relax_instance(const VcspInstance& instance);

// Table of f_I over the requested ambient cube; +inf absorbs.
CostTable assemble(const VcspInstance& instance, TableKind ambient,
                   std::uint64_t max_cells = kDefaultMaxCells);

// lcm over constraints of each relaxed table's scaling factor.
mpz_class instance_scaling_factor(const RelaxedInstance& relaxed);

// d = OPT(I) - OPT(I'); always >= 0. Throws InfeasibleInstance when the
// crisp instance has no finite assignment.
Rational gap_d(const VcspInstance& instance, const RelaxedInstance& relaxed,
               std::uint64_t max_cells = kDefaultMaxCells);

struct AutarkyReport {
    std::map<std::uint32_t, Label> fixed;  // 1-based variable -> label in [k]
    CostValue relaxed_optimum;
    Labeling chosen_minimizer;
    bool persistency_verified = false;
};

// Thrown when autarky extraction hits a non-extendable constraint.
class InstanceNotExtendable : public std::runtime_error {
public:
    InstanceNotExtendable(std::size_t index, NonExtendabilityWitness witness)
        : std::runtime_error("constraint " + std::to_string(index) +
                             " admits no k-submodular relaxation"),
          constraint_index(index), witness(std::move(witness)) {}

    std::size_t constraint_index;
    NonExtendabilityWitness witness;
};

// Minimizes the assembled relaxation by brute force, picks the minimizer
// with the most nonzero coordinates (ties: smallest encoded index), and
// reports the induced partial assignment. With verify set, re-checks
// persistency against the brute-force minimum of f_I.
AutarkyReport autarky(const VcspInstance& instance, bool verify = false,
                      std::uint64_t max_cells = kDefaultMaxCells);

}  // namespace ksub
