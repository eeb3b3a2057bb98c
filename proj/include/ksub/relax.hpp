#pragma once

#include <map>
#include <optional>
#include <variant>

#include "ksub/closure.hpp"
#include "ksub/cost_table.hpp"

namespace ksub {

// Failure certificate produced by the elimination itself: x and y were in
// the accumulated domain, meet(x,y) != join(x,y), and the join is missing.
struct MissingJoinWitness {
    Labeling x, y, join;
};

// Failure certificate produced by the closure characterization (preflight).
struct ThetaEscapeWitness {
    Labeling x, y, z, image;
};

using NonExtendabilityWitness = std::variant<MissingJoinWitness, ThetaEscapeWitness>;

struct Relaxed {
    CostTable g;              // kind Full; restricts to f on [k]^n
    bool half_integral;       // every denominator divides 2
    bool nonnegative;         // every stored value >= 0
    mpz_class scaling_factor; // lcm of denominators of g
};

struct NotExtendable {
    NonExtendabilityWitness witness;
};

using RelaxationOutcome = std::variant<Relaxed, NotExtendable>;

// Engine and value-path selection. Auto picks the dense block engine for
// packed-representable, mostly-full tables and the pair scan otherwise, and
// scaled int64 arithmetic whenever the values fit (falling back to exact
// rationals on overflow). The explicit values exist so tests can pin each
// path and assert equivalence.
enum class RelaxEngine { Auto, PairScan, DenseBlock };
enum class ValueMode { Auto, ScaledInt64, Exact };

struct RelaxOptions {
    bool preflight_theta = false;
    RelaxEngine engine = RelaxEngine::Auto;
    ValueMode values = ValueMode::Auto;
};

// Greedy elimination by zero count: level i fixes every point with i zeros
// to the minimum of its applicable right-hand sides, reading only values
// with fewer zeros. Returns the relaxation or a non-extendability witness.
RelaxationOutcome relax(const CostTable& f, const RelaxOptions& options = {});

struct Violation {
    Labeling x, y;
    CostValue lhs;  // g(x) + g(y)
    CostValue rhs;  // g(meet) + g(join); infinite when the domain is not closed
};

// First (by ascending encoded pair order) violated inequality of a full-kind
// table, or nullopt if the table is k-submodular. A finite pair whose meet
// or join is absent counts as a violation.
std::optional<Violation> verify_ksubmodular(const CostTable& g);

// Smallest positive integer c such that c*g is integer valued.
mpz_class scaling_factor(const CostTable& g);

struct TightPair {
    Labeling x, y;
    bool averaged;  // true: x, y fully labeled and g(z) = (g(x)+g(y))/2
};

// For each relaxed point z (dom g minus dom f), the first pair that
// generates its value tightly. Existence is guaranteed for tables produced
// by relax; a miss throws NoTightPair.
std::map<std::uint64_t, TightPair> tightness_witnesses(const CostTable& g, const CostTable& f);

// Smallest nonzero gap between distinct values of g, divided by 4 and
// floored at 1/4.
Rational default_maximality_epsilon(const CostTable& g);

// n = 2 only: true iff raising any single relaxed value by epsilon breaks
// k-submodularity. Together with uniqueness of the maximal binary
// relaxation this certifies that g dominates every relaxation pointwise.
bool assert_maximal_binary(const CostTable& g, const CostTable& f,
                           std::optional<Rational> epsilon = std::nullopt);

}  // namespace ksub
