#pragma once

#include <random>
#include <set>
#include <vector>

#include "ksub/closure.hpp"
#include "ksub/cost_table.hpp"

namespace ksub::testing {

using Rng = std::mt19937_64;

inline Labeling random_labeling(Rng& rng, std::size_t n, Label k, bool positive) {
    std::uniform_int_distribution<Label> dist(positive ? 1 : 0, k);
    std::vector<Label> out(n);
    for (auto& l : out) l = dist(rng);
    return Labeling(std::move(out));
}

inline LabelingSet random_positive_set(Rng& rng, std::size_t n, Label k, std::size_t size) {
    std::size_t cube = 1;  // cap the request at |[k]^n|
    for (std::size_t i = 0; i < n && cube <= size; ++i) cube *= k;
    size = std::min(size, cube);
    LabelingSet out(std::uint32_t(n), k);
    while (out.size() < size) out.insert(random_labeling(rng, n, k, true));
    return out;
}

inline Rational random_integer_value(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return make_rational(dist(rng));
}

inline Rational random_rational_value(Rng& rng, long num_range, long den_range) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    return make_rational(num(rng), den(rng));
}

// Full domain [k]^n with the given value generator.
template <class Gen>
CostTable random_full_table(Rng& rng, std::size_t n, Label k, Gen&& value) {
    CostTable out(std::uint32_t(n), k, TableKind::PositiveOnly);
    std::vector<Label> point(n, 1);
    for (;;) {
        out.set(Labeling(std::vector<Label>(point)), value(rng));
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (point[i] < k) {
                ++point[i];
                break;
            }
            point[i] = 1;
        }
        if (i == n) break;
    }
    return out;
}

// Theta-closed sparse domain (hence guaranteed extendable) with random values.
template <class Gen>
CostTable random_extendable_table(Rng& rng, std::size_t n, Label k, std::size_t seed_size,
                                  Gen&& value) {
    const LabelingSet dom = closure_theta(random_positive_set(rng, n, k, seed_size));
    CostTable out(std::uint32_t(n), k, TableKind::PositiveOnly);
    for (std::uint64_t enc : dom.encoded()) out.set_encoded(enc, value(rng));
    return out;
}

// Arbitrary sparse domain, extendable or not.
template <class Gen>
CostTable random_sparse_table(Rng& rng, std::size_t n, Label k, std::size_t size, Gen&& value) {
    const LabelingSet dom = random_positive_set(rng, n, k, size);
    CostTable out(std::uint32_t(n), k, TableKind::PositiveOnly);
    for (std::uint64_t enc : dom.encoded()) out.set_encoded(enc, value(rng));
    return out;
}

// The counterexample function from the motivating two-variable discussion:
// f(1,2) = 1 and f = 0 elsewhere on [2]^2.
inline CostTable footnote2_function() {
    CostTable f(2, 2, TableKind::PositiveOnly);
    f.set(Labeling{1, 1}, 0);
    f.set(Labeling{1, 2}, 1);
    f.set(Labeling{2, 1}, 0);
    f.set(Labeling{2, 2}, 0);
    return f;
}

// Its relaxation, derived by hand-running the elimination level by level and
// cross-checked against reference_relax in the oracle suite.
inline CostTable footnote2_relaxation() {
    CostTable g(2, 2, TableKind::Full);
    g.set(Labeling{0, 0}, 0);
    g.set(Labeling{1, 0}, make_rational(1, 2));
    g.set(Labeling{2, 0}, 0);
    g.set(Labeling{0, 1}, 0);
    g.set(Labeling{1, 1}, 0);
    g.set(Labeling{2, 1}, 0);
    g.set(Labeling{0, 2}, make_rational(1, 2));
    g.set(Labeling{1, 2}, 1);
    g.set(Labeling{2, 2}, 0);
    return g;
}

// Three fully labeled points over [3]^2 whose domain is not theta-closed.
inline CostTable non_extendable_3point() {
    CostTable f(2, 3, TableKind::PositiveOnly);
    f.set(Labeling{1, 1}, 0);
    f.set(Labeling{2, 2}, 0);
    f.set(Labeling{3, 1}, 0);
    return f;
}

}  // namespace ksub::testing
