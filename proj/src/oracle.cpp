#include "ksub/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ksub {

MinimizationReport brute_min(const CostTable& g) {
    MinimizationReport report{CostValue::infinity(), {}};
    for (const auto& [enc, v] : g.entries()) {
        const CostValue value(v);
        if (value < report.optimum) {
            report.optimum = value;
            report.minimizers.clear();
        }
        if (value == report.optimum)
            report.minimizers.push_back(decode(enc, g.n(), g.k()));
    }
    return report;
}

namespace {

// g restricts to f: identical finite values on the fully labeled cube.
void require_restriction(const CostTable& f, const CostTable& g) {
    if (f.n() != g.n() || f.k() != g.k())
        throw RestrictionMismatch("tables disagree on n or k");
    for (const auto& [enc, v] : f.entries()) {
        auto it = g.entries().find(enc);
        if (it == g.entries().end() || it->second != v)
            throw RestrictionMismatch("g does not extend f at " +
                                      format_labeling(decode(enc, f.n(), f.k())));
    }
    for (const auto& [enc, v] : g.entries()) {
        const Labeling point = decode(enc, g.n(), g.k());
        if (zero_count(point) == 0 && !f.contains_encoded(enc))
            throw RestrictionMismatch("g is finite at " + format_labeling(point) +
                                      " where f is not");
    }
}

}  // namespace

bool persistency_check(const CostTable& f, const CostTable& g) {
    require_restriction(f, g);
    const MinimizationReport of = brute_min(f);
    const MinimizationReport og = brute_min(g);
    for (const Labeling& y : og.minimizers) {
        bool covered = false;
        for (const Labeling& x : of.minimizers) {
            bool ok = true;
            for (std::size_t i = 0; i < y.size() && ok; ++i)
                if (y[i] != 0 && x[i] != y[i]) ok = false;
            if (ok) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool max_on_interior(const CostTable& g) {
    if (g.dom_size() != g.cells())
        throw std::invalid_argument("max_on_interior requires a table without +inf");
    CostValue best = CostValue::infinity();
    CostValue best_positive = CostValue::infinity();
    bool first = true, first_positive = true;
    for (const auto& [enc, v] : g.entries()) {
        const CostValue value(v);
        if (first || best < value) {
            best = value;
            first = false;
        }
        if (zero_count(decode(enc, g.n(), g.k())) == 0 &&
            (first_positive || best_positive < value)) {
            best_positive = value;
            first_positive = false;
        }
    }
    return !first_positive && best == best_positive;
}

RelaxationOutcome reference_relax(const CostTable& f) {
    if (f.kind() != TableKind::PositiveOnly)
        throw std::invalid_argument("reference_relax expects a positive-only table");
    const std::uint64_t cells = f.cells();
    const std::size_t n = f.n();
    const Label k = f.k();

    std::vector<Labeling> points(cells);
    std::vector<int> zeros(cells);
    for (std::uint64_t e = 0; e < cells; ++e) {
        points[e] = decode(e, n, k);
        zeros[e] = zero_count(points[e]);
    }

    std::vector<CostValue> cur(cells, CostValue::infinity());
    for (const auto& [enc, v] : f.entries()) cur[enc] = CostValue(v);

    for (int level = 1; level <= int(n); ++level) {
        const std::vector<CostValue> prev = cur;  // g^(i-1) snapshot
        for (std::uint64_t xe = 0; xe < cells; ++xe) {
            if (prev[xe].is_infinite()) continue;
            for (std::uint64_t ye = 0; ye < cells; ++ye) {
                if (prev[ye].is_infinite()) continue;
                const Labeling m = meet(points[xe], points[ye]);
                const std::uint64_t me = encode(m, k);
                if (zeros[me] != level) continue;
                const Labeling j = join(points[xe], points[ye]);
                const std::uint64_t je = encode(j, k);
                CostValue cand;
                if (me == je) {
                    cand = rhs_avg(prev[xe], prev[ye]);
                } else if (prev[je].is_infinite()) {
                    return NotExtendable{
                        MissingJoinWitness{points[xe], points[ye], points[je]}};
                } else {
                    cand = rhs_general(prev[xe], prev[ye], prev[je]);
                }
                if (cand < cur[me]) cur[me] = cand;
            }
        }
    }

    CostTable g(f.n(), f.k(), TableKind::Full, f.max_cells());
    bool half_integral = true;
    bool nonnegative = true;
    mpz_class scaling = 1;
    for (std::uint64_t e = 0; e < cells; ++e) {
        if (cur[e].is_infinite()) continue;
        const Rational& v = cur[e].rational();
        if (v.get_den() > 2) half_integral = false;
        if (v < 0) nonnegative = false;
        mpz_lcm(scaling.get_mpz_t(), scaling.get_mpz_t(), v.get_den().get_mpz_t());
        g.set_encoded(e, v);
    }
    return Relaxed{std::move(g), half_integral, nonnegative, scaling};
}

}  // namespace ksub
