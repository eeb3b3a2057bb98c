// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ksub/io.hpp"
#include "ksub/oracle.hpp"
#include "ksub/relax.hpp"
#include "ksub/vcsp.hpp"

#include "helpers.hpp"

using namespace ksub;
using ksub::testing::Rng;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    std::string failure;  // empty = pass
    std::string note;

    void fail(const std::string& msg) {
        if (failure.empty()) failure = msg;
    }
    bool ok() const { return failure.empty(); }
};

void report(int index, const char* name, const Criterion& c) {
    if (c.ok()) {
        std::printf("[PASS] criterion %d: %s%s%s\n", index, name, c.note.empty() ? "" : " — ",
                    c.note.c_str());
    } else {
        std::printf("[FAIL] criterion %d: %s — %s\n", index, name, c.failure.c_str());
        ++g_failures;
    }
}

const Relaxed* as_relaxed(const RelaxationOutcome& outcome) {
    return std::get_if<Relaxed>(&outcome);
}

// All tables over [k]^n with values drawn from {0, 1, +inf}, enumerated as a
// base-3 counter over the k^n positive points.
template <class Fn>
void enumerate_small_tables(std::size_t n, Label k, Fn&& fn) {
    std::vector<Labeling> points;
    std::vector<Label> point(n, 1);
    for (;;) {
        points.push_back(Labeling(std::vector<Label>(point)));
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
    std::vector<int> assignment(points.size(), 0);
    for (;;) {
        CostTable f(std::uint32_t(n), k, TableKind::PositiveOnly);
        for (std::size_t i = 0; i < points.size(); ++i)
            if (assignment[i] < 2) f.set(points[i], assignment[i]);
        fn(f);
        std::size_t i = 0;
        for (; i < assignment.size(); ++i) {
            if (assignment[i] < 2) {
                ++assignment[i];
                break;
            }
            assignment[i] = 0;
        }
        if (i == assignment.size()) break;
    }
}

LabelingSet dom_of(const CostTable& f) {
    LabelingSet out(f.n(), f.k());
    for (const auto& [enc, v] : f.entries()) out.insert_encoded(enc);
    return out;
}

// ---------------------------------------------------------------------------

void criterion1(Criterion& c) {
    const CostTable f = ksub::testing::footnote2_function();
    const CostTable expected = ksub::testing::footnote2_relaxation();

    const auto start = Clock::now();
    const RelaxationOutcome outcome = relax(f);
    const double elapsed = seconds_since(start);

    const Relaxed* r = as_relaxed(outcome);
    if (!r) return c.fail("relaxation unexpectedly failed");
    if (!(r->g == expected)) return c.fail("relaxed table differs from the derived table");
    if (r->g.dom_size() != 9) return c.fail("expected exactly 9 entries");
    if (verify_ksubmodular(r->g)) return c.fail("verifier rejected the relaxation");
    if (r->scaling_factor != 2) return c.fail("scaling factor != 2");
    if (elapsed >= 1e-3) return c.fail("took " + std::to_string(elapsed * 1e3) + " ms");

    CostTable bad(2, 2, TableKind::Full);
    for (Label a = 0; a <= 2; ++a)
        for (Label b = 0; b <= 2; ++b) bad.set(Labeling{a, b}, 0);
    bad.set(Labeling{1, 2}, 1);
    const auto violation = verify_ksubmodular(bad);
    if (!violation) return c.fail("constant-fill counterexample passed verification");
    if (!(violation->x == Labeling{1, 0} && violation->y == Labeling{0, 2}))
        return c.fail("wrong violating pair");
    if (!(violation->lhs == CostValue(0) && violation->rhs == CostValue(1)))
        return c.fail("wrong violation sides");
    c.note = "relax in " + std::to_string(elapsed * 1e3) + " ms";
}

void criterion2(Criterion& c) {
    long checked = 0;
    auto consistent = [&](const CostTable& f) {
        const bool relaxed = as_relaxed(relax(f)) != nullptr;
        const bool closed = !theta_witness(dom_of(f)).has_value();
        ++checked;
        return relaxed == closed;
    };

    for (std::size_t n : {2u, 3u}) {
        bool all = true;
        enumerate_small_tables(n, 2, [&](const CostTable& f) { all = all && consistent(f); });
        if (!all) return c.fail("exhaustive grid discrepancy at n = " + std::to_string(n));
    }

    Rng rng(90001);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = 2 + rng() % 3;
        const Label k = Label(2 + rng() % 3);
        const CostTable f = ksub::testing::random_sparse_table(
            rng, n, k, 1 + rng() % 12,
            [](Rng& r) { return ksub::testing::random_integer_value(r, 0, 3); });
        if (!consistent(f)) return c.fail("random instance discrepancy at iteration " +
                                          std::to_string(iter));
    }
    c.note = std::to_string(checked) + " instances";
}

void criterion3(Criterion& c) {
    Rng rng(90002);
    for (int iter = 0; iter < 500; ++iter) {
        const std::size_t n = 2 + rng() % 3;
        const Label k = Label(2 + rng() % 3);
        const LabelingSet a =
            ksub::testing::random_positive_set(rng, n, k, 1 + rng() % 8);

        const LabelingSet ct = closure_theta(a);
        if (!(closure_meet_join(ct) == closure_meet(ct)))
            return c.fail("lemma 1 identity failed at iteration " + std::to_string(iter));

        LabelingSet positive_part(a.n(), a.k());
        for (const Labeling& x : closure_meet_join(a).labelings())
            if (zero_count(x) == 0) positive_part.insert(x);
        if (!(positive_part == ct))
            return c.fail("lemma 2 identity failed at iteration " + std::to_string(iter));
    }

    for (int iter = 0; iter < 10000; ++iter) {
        const std::size_t n = 1 + rng() % 4;
        const Label k = Label(1 + rng() % 4);
        const Labeling x = ksub::testing::random_labeling(rng, n, k, true);
        const Labeling y = ksub::testing::random_labeling(rng, n, k, true);
        const Labeling z = ksub::testing::random_labeling(rng, n, k, true);
        const Labeling xy = join(x, y);
        if (!(theta(x, y, z) == join(join(xy, z), xy)))
            return c.fail("theta-from-join identity failed");
    }
    c.note = "500 closure sets, 10000 triples";
}

void criterion4(Criterion& c) {
    Rng rng(90003);
    for (int iter = 0; iter < 500; ++iter) {
        const std::size_t n = 2 + rng() % 3;
        const Label k = Label(2 + rng() % 3);
        const bool full = iter % 3 == 0;
        const CostTable f =
            full ? ksub::testing::random_full_table(
                       rng, n, k,
                       [](Rng& r) { return ksub::testing::random_integer_value(r, -50, 50); })
                 : ksub::testing::random_extendable_table(
                       rng, n, k, 1 + rng() % 6,
                       [](Rng& r) { return ksub::testing::random_integer_value(r, -50, 50); });
        const RelaxationOutcome outcome = relax(f);
        const Relaxed* r = as_relaxed(outcome);
        if (!r) return c.fail("extendable instance failed to relax");
        if (!r->half_integral)
            return c.fail("non-half-integral value at iteration " + std::to_string(iter));
        if (!(r->scaling_factor == 1 || r->scaling_factor == 2))
            return c.fail("scaling factor outside {1,2}");
        for (const auto& [enc, v] : r->g.entries())
            if (!(v.get_den() == 1 || v.get_den() == 2))
                return c.fail("denominator does not divide 2");
    }
}

void criterion5(Criterion& c) {
    auto agree = [](const CostTable& f) {
        const RelaxationOutcome ours = relax(f);
        const RelaxationOutcome reference = reference_relax(f);
        if (ours.index() != reference.index()) return false;
        if (const Relaxed* ok = std::get_if<Relaxed>(&ours))
            return ok->g == std::get<Relaxed>(reference).g;
        return true;
    };

    for (std::size_t n : {2u, 3u}) {
        bool all = true;
        enumerate_small_tables(n, 2, [&](const CostTable& f) { all = all && agree(f); });
        if (!all) return c.fail("exhaustive grid disagreement at n = " + std::to_string(n));
    }

    // randomized sizes per the oracle-equivalence contract
    const std::pair<Label, std::size_t> sizes[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
    Rng rng(90004);
    for (int iter = 0; iter < 500; ++iter) {
        const auto [k, n] = sizes[rng() % 5];
        const CostTable f = ksub::testing::random_sparse_table(
            rng, n, k, 1 + rng() % 9,
            [](Rng& r) { return ksub::testing::random_rational_value(r, 40, 8); });
        if (!agree(f)) return c.fail("disagreement at iteration " + std::to_string(iter));
    }
}

void criterion6(Criterion& c) {
    Rng rng(90005);
    for (int iter = 0; iter < 500; ++iter) {
        const std::size_t n = 2 + rng() % 3;
        const Label k = Label(2 + rng() % 3);
        const bool full = iter % 4 == 0;
        const CostTable f =
            full ? ksub::testing::random_full_table(
                       rng, n, k,
                       [](Rng& r) { return ksub::testing::random_integer_value(r, -9, 9); })
                 : ksub::testing::random_extendable_table(
                       rng, n, k, 1 + rng() % 5,
                       [](Rng& r) { return ksub::testing::random_integer_value(r, -9, 9); });
        const RelaxationOutcome outcome = relax(f);
        const Relaxed* r = as_relaxed(outcome);
        if (!r) return c.fail("extendable instance failed to relax");
        if (!persistency_check(f, r->g))
            return c.fail("persistency failed at iteration " + std::to_string(iter));
    }
}

void criterion7(Criterion& c) {
    Rng rng(90006);
    for (int iter = 0; iter < 300; ++iter) {
        const Label k = Label(2 + rng() % 4);
        const CostTable f =
            iter % 2 == 0
                ? ksub::testing::random_full_table(
                      rng, 2, k,
                      [](Rng& r) { return ksub::testing::random_integer_value(r, -9, 9); })
                : ksub::testing::random_extendable_table(
                      rng, 2, k, 1 + rng() % 4,
                      [](Rng& r) { return ksub::testing::random_integer_value(r, -9, 9); });
        const RelaxationOutcome outcome = relax(f);
        const Relaxed* r = as_relaxed(outcome);
        if (!r) return c.fail("binary instance failed to relax");
        const CostTable& g = r->g;

        if (!assert_maximal_binary(g, f))
            return c.fail("maximality slack at iteration " + std::to_string(iter));
        try {
            tightness_witnesses(g, f);
        } catch (const NoTightPair& e) {
            return c.fail(std::string("missing tight pair: ") + e.what());
        }

        // 50 alternative valid relaxations must be dominated pointwise
        std::vector<std::uint64_t> relaxed_cells;
        for (const auto& [enc, v] : g.entries())
            if (!f.contains_encoded(enc)) relaxed_cells.push_back(enc);
        if (relaxed_cells.empty()) continue;

        // a maximal-zero-count cell can always be lowered safely
        std::uint64_t ladder_cell = relaxed_cells.front();
        int best_zeros = -1;
        for (std::uint64_t enc : relaxed_cells) {
            const int z = zero_count(decode(enc, g.n(), g.k()));
            if (z > best_zeros) {
                best_zeros = z;
                ladder_cell = enc;
            }
        }

        int produced = 0;
        int attempts = 0;
        while (produced < 50) {
            CostTable alt = g;
            bool sampled = false;
            if (attempts++ < 120 && produced >= 25) {
                // random mixed-sign perturbation, kept only if still valid
                for (std::uint64_t enc : relaxed_cells)
                    if (rng() % 2)
                        alt.set_encoded(enc, Rational(g.entries().at(enc) +
                                                      ksub::testing::random_rational_value(
                                                          rng, 2, 3)));
                sampled = true;
            } else {
                alt.set_encoded(ladder_cell,
                                Rational(g.entries().at(ladder_cell) -
                                         make_rational(1 + produced, 7)));
            }
            if (verify_ksubmodular(alt)) {
                if (sampled) continue;  // rejected sample; the ladder never fails
                return c.fail("ladder perturbation rejected unexpectedly");
            }
            ++produced;
            for (const auto& [enc, v] : g.entries())
                if (alt.entries().at(enc) > v)
                    return c.fail("a valid relaxation exceeded g at iteration " +
                                  std::to_string(iter));
        }
    }
}

void criterion8(Criterion& c) {
    Rng rng(90007);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = 2 + rng() % 3;
        const Label k = Label(2 + rng() % 3);
        const CostTable f = ksub::testing::random_full_table(
            rng, n, k, [](Rng& r) { return ksub::testing::random_integer_value(r, -20, 20); });
        const RelaxationOutcome outcome = relax(f);
        const Relaxed* r = as_relaxed(outcome);
        if (!r) return c.fail("full-domain instance failed to relax");
        if (r->g.dom_size() != r->g.cells()) return c.fail("relaxation is not finite-valued");
        if (!max_on_interior(r->g))
            return c.fail("maximum escaped the fully labeled cube at iteration " +
                          std::to_string(iter));
    }
}

void criterion9(Criterion& c) {
    struct Point {
        Label k;
        std::size_t n;
        double limit;  // absolute cap in seconds, 0 = none
        double t = 0;
        double cells() const { return std::pow(double(k) + 1, double(n)); }
    };
    Point points[] = {{4, 4, 1.0}, {3, 6, 0.0}, {4, 6, 0.0}, {3, 8, 30.0}};

    Rng rng(90008);
    for (Point& p : points) {
        const CostTable f = ksub::testing::random_full_table(
            rng, p.n, p.k, [](Rng& r) { return ksub::testing::random_integer_value(r, 0, 99); });
        const auto start = Clock::now();
        const RelaxationOutcome outcome = relax(f);
        p.t = seconds_since(start);
        if (!as_relaxed(outcome)) return c.fail("full-domain instance failed to relax");
        if (p.limit > 0 && p.t >= p.limit)
            return c.fail("(" + std::to_string(p.k) + "," + std::to_string(p.n) + ") took " +
                          std::to_string(p.t) + " s, limit " + std::to_string(p.limit));
    }

    // growth no faster than quadratic in (k+1)^n, within a 2x band; timer
    // noise on tiny runs only makes the small side look slower, which is safe
    for (const Point& small : points) {
        for (const Point& big : points) {
            const double ratio = big.cells() / small.cells();
            if (ratio < 4) continue;
            const double bound = 2.0 * ratio * ratio * std::max(small.t, 1e-4);
            if (big.t > bound)
                return c.fail("superquadratic growth between (" + std::to_string(small.k) +
                              "," + std::to_string(small.n) + ") and (" +
                              std::to_string(big.k) + "," + std::to_string(big.n) + ")");
        }
    }

    std::ostringstream note;
    note.precision(3);
    for (const Point& p : points)
        note << "(" << p.k << "," << p.n << ") " << std::fixed << p.t << "s  ";
    c.note = note.str();
}

void criterion10(Criterion& c) {
    VcspInstance instance;
    instance.n_vars = 2;
    instance.k = 2;
    instance.constraints.push_back(Constraint{ksub::testing::footnote2_function(), {1, 2}});

    const auto outcome = relax_instance(instance);
    const auto* relaxed = std::get_if<RelaxedInstance>(&outcome);
    if (!relaxed) return c.fail("instance relaxation failed");

    if (instance_scaling_factor(*relaxed) != 2) return c.fail("c != 2");
    const Rational d = gap_d(instance, *relaxed);
    if (d != 0) return c.fail("d != 0");
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), instance.k,
                  mpz_class(mpz_class(instance_scaling_factor(*relaxed)) *
                            d.get_num()).get_ui());
    if (power != 1) return c.fail("k^(cd) != 1");
    if (!relaxed->nonnegative) return c.fail("relaxation not flagged nonnegative");

    const AutarkyReport autarky_report = autarky(instance, true);
    if (!(autarky_report.chosen_minimizer == Labeling{1, 1}))
        return c.fail("autarky picked the wrong minimizer");
    if (autarky_report.fixed.size() != 2 || autarky_report.fixed.at(1) != 1 ||
        autarky_report.fixed.at(2) != 1)
        return c.fail("autarky fixed the wrong variables");
    if (!autarky_report.persistency_verified) return c.fail("persistency re-check failed");

    if (verify_ksubmodular(assemble(relaxed->instance, TableKind::Full)))
        return c.fail("assembled relaxation is not k-submodular");

    // byte-stable round trips
    const std::string ksf = print_ksf(relaxed->instance.constraints[0].table);
    std::istringstream ksf_in(ksf);
    if (print_ksf(parse_ksf(ksf_in)) != ksf) return c.fail("KSF round trip not byte-stable");
    const std::string vcsp = print_vcsp(instance);
    std::istringstream vcsp_in(vcsp);
    if (print_vcsp(parse_vcsp(vcsp_in)) != vcsp)
        return c.fail("VCSP round trip not byte-stable");
    const std::string relaxed_vcsp = print_vcsp(relaxed->instance);
    std::istringstream relaxed_in(relaxed_vcsp);
    if (print_vcsp(parse_vcsp(relaxed_in)) != relaxed_vcsp)
        return c.fail("relaxed VCSP round trip not byte-stable");
}

}  // namespace

int main() {
    struct Entry {
        int index;
        const char* name;
        void (*fn)(Criterion&);
    };
    const Entry entries[] = {
        {1, "footnote-2 golden case", criterion1},
        {2, "extendability equivalence", criterion2},
        {3, "closure lemmas", criterion3},
        {4, "half-integrality", criterion4},
        {5, "oracle equivalence", criterion5},
        {6, "persistency", criterion6},
        {7, "binary maximality", criterion7},
        {8, "interior maximum", criterion8},
        {9, "performance sanity", criterion9},
        {10, "vcsp pipeline", criterion10},
    };
    for (const Entry& entry : entries) {
        Criterion c;
        try {
            entry.fn(c);
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        report(entry.index, entry.name, c);
        std::fflush(stdout);
    }
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
