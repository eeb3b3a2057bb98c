#include "ksub/vcsp.hpp"

#include <stdexcept>

namespace ksub {

void validate_instance(const VcspInstance& instance) {
    if (instance.n_vars == 0 || instance.k == 0)
        throw std::invalid_argument("instance requires n_vars >= 1 and k >= 1");
    for (std::size_t c = 0; c < instance.constraints.size(); ++c) {
        const Constraint& constraint = instance.constraints[c];
        if (constraint.table.k() != instance.k)
            throw std::invalid_argument("constraint " + std::to_string(c) +
                                        " does not share the instance's k");
        if (constraint.scope.size() != constraint.table.n())
            throw std::invalid_argument("constraint " + std::to_string(c) +
                                        " scope length differs from its arity");
        for (std::uint32_t var : constraint.scope)
            if (var == 0 || var > instance.n_vars)
                throw std::invalid_argument("constraint " + std::to_string(c) +
                                            " scope index out of range");
    }
}

std::variant<RelaxedInstance, ConstraintFailure> relax_instance(const VcspInstance& instance) {
    validate_instance(instance);
    RelaxedInstance out;
    out.instance.n_vars = instance.n_vars;
    out.instance.k = instance.k;

    // Languages reuse few distinct cost functions; relax each shape once.
    std::vector<std::pair<const CostTable*, CostTable>> cache;
    for (std::size_t c = 0; c < instance.constraints.size(); ++c) {
        const Constraint& constraint = instance.constraints[c];
        const CostTable* relaxed_table = nullptr;
        for (const auto& [original, relaxed] : cache)
            if (*original == constraint.table) {
                relaxed_table = &relaxed;
                break;
            }
        if (!relaxed_table) {
            RelaxationOutcome outcome = relax(constraint.table);
            if (auto* fail = std::get_if<NotExtendable>(&outcome))
                return ConstraintFailure{c, fail->witness};
            auto& ok = std::get<Relaxed>(outcome);
            if (!ok.nonnegative) out.nonnegative = false;
            cache.emplace_back(&constraint.table, std::move(ok.g));
            relaxed_table = &cache.back().second;
        }
        out.instance.constraints.push_back(Constraint{*relaxed_table, constraint.scope});
    }
    return out;
}

CostTable assemble(const VcspInstance& instance, TableKind ambient, std::uint64_t max_cells) {
    validate_instance(instance);
    CostTable out(instance.n_vars, instance.k, ambient, max_cells);
    const Label low = ambient == TableKind::PositiveOnly ? 1 : 0;

    std::vector<Label> point(instance.n_vars, low);
    std::vector<Label> projected;
    for (;;) {
        CostValue total(0);
        for (const Constraint& constraint : instance.constraints) {
            projected.clear();
            for (std::uint32_t var : constraint.scope) projected.push_back(point[var - 1]);
            total = total + constraint.table.value(Labeling(projected));
            if (total.is_infinite()) break;
        }
        if (total.is_finite()) out.set(Labeling(point), total.rational());

        std::size_t i = 0;
        for (; i < point.size(); ++i) {
            if (point[i] < instance.k) {
                ++point[i];
                break;
            }
            point[i] = low;
        }
        if (i == point.size()) break;
    }
    return out;
}

mpz_class instance_scaling_factor(const RelaxedInstance& relaxed) {
    mpz_class out = 1;
    for (const Constraint& constraint : relaxed.instance.constraints) {
        mpz_class c = scaling_factor(constraint.table);
        mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), c.get_mpz_t());
    }
    return out;
}

Rational gap_d(const VcspInstance& instance, const RelaxedInstance& relaxed,
               std::uint64_t max_cells) {
    const MinimizationReport crisp = brute_min(assemble(instance, TableKind::PositiveOnly,
                                                        max_cells));
    if (crisp.optimum.is_infinite()) throw InfeasibleInstance();
    const MinimizationReport soft = brute_min(assemble(relaxed.instance, TableKind::Full,
                                                       max_cells));
    return Rational(crisp.optimum.rational() - soft.optimum.rational());
}

AutarkyReport autarky(const VcspInstance& instance, bool verify, std::uint64_t max_cells) {
    auto outcome = relax_instance(instance);
    if (auto* fail = std::get_if<ConstraintFailure>(&outcome))
        throw InstanceNotExtendable(fail->constraint_index, fail->witness);
    const RelaxedInstance& relaxed = std::get<RelaxedInstance>(outcome);

    const CostTable assembled = assemble(relaxed.instance, TableKind::Full, max_cells);
    const MinimizationReport report = brute_min(assembled);

    AutarkyReport out;
    out.relaxed_optimum = report.optimum;
    if (report.minimizers.empty()) {
        out.chosen_minimizer = Labeling::zeros(instance.n_vars);
        return out;
    }

    // Most fixed variables first; brute_min lists minimizers in ascending
    // encoded order, so the first strict improvement is the tie-break.
    const Labeling* best = &report.minimizers.front();
    int best_nonzeros = int(best->size()) - zero_count(*best);
    for (const Labeling& y : report.minimizers) {
        const int nonzeros = int(y.size()) - zero_count(y);
        if (nonzeros > best_nonzeros) {
            best = &y;
            best_nonzeros = nonzeros;
        }
    }
    out.chosen_minimizer = *best;
    for (std::size_t i = 0; i < best->size(); ++i)
        if ((*best)[i] != 0) out.fixed.emplace(std::uint32_t(i + 1), (*best)[i]);

    if (verify) {
        const CostTable crisp = assemble(instance, TableKind::PositiveOnly, max_cells);
        out.persistency_verified = persistency_check(crisp, assembled);
    }
    return out;
}

}  // namespace ksub
