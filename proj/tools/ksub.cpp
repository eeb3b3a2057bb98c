#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ksub/io.hpp"
#include "ksub/oracle.hpp"
#include "ksub/relax.hpp"
#include "ksub/vcsp.hpp"

namespace {

// Exit codes: 0 = success / positive verdict, 2 = negative verdict (not
// extendable, violated), 1 = usage, parse, or guard errors.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::string witness_line(const ksub::NonExtendabilityWitness& witness) {
    if (const auto* mj = std::get_if<ksub::MissingJoinWitness>(&witness))
        return "missing join: x=" + ksub::format_labeling(mj->x) +
               " y=" + ksub::format_labeling(mj->y) +
               " join=" + ksub::format_labeling(mj->join);
    const auto& te = std::get<ksub::ThetaEscapeWitness>(witness);
    return "theta escape: x=" + ksub::format_labeling(te.x) +
           " y=" + ksub::format_labeling(te.y) + " z=" + ksub::format_labeling(te.z) +
           " image=" + ksub::format_labeling(te.image);
}

int cmd_relax(const std::string& in_path, const std::string& out_path, bool preflight,
              bool report, std::uint64_t max_cells) {
    auto in = open_input(in_path);
    const ksub::CostTable f = ksub::parse_ksf(in, max_cells);
    if (f.kind() != ksub::TableKind::PositiveOnly) {
        std::cerr << "relax expects a pos-kind table\n";
        return kUsage;
    }
    ksub::RelaxOptions options;
    options.preflight_theta = preflight;
    ksub::RelaxationOutcome outcome = ksub::relax(f, options);
    if (const auto* fail = std::get_if<ksub::NotExtendable>(&outcome)) {
        std::cout << "NOT EXTENDABLE\n" << witness_line(fail->witness) << "\n";
        return kNegative;
    }
    const auto& ok = std::get<ksub::Relaxed>(outcome);
    emit(ksub::print_ksf(ok.g), out_path);
    if (report) {
        std::cout << "scaling_factor=" << ok.scaling_factor.get_str()
                  << " half_integral=" << (ok.half_integral ? "yes" : "no")
                  << " nonnegative=" << (ok.nonnegative ? "yes" : "no") << "\n";
        if (f.n() == 2) {
            bool maximal = ksub::assert_maximal_binary(ok.g, f);
            ksub::tightness_witnesses(ok.g, f);  // throws on a missing tight pair
            std::cout << "maximal=" << (maximal ? "yes" : "no") << "\n";
        }
    }
    return kOk;
}

int cmd_check_extendable(const std::string& in_path, std::uint64_t max_cells) {
    auto in = open_input(in_path);
    const ksub::CostTable f = ksub::parse_ksf(in, max_cells);
    if (f.kind() != ksub::TableKind::PositiveOnly) {
        std::cerr << "check-extendable expects a pos-kind table\n";
        return kUsage;
    }
    ksub::LabelingSet dom(f.n(), f.k());
    for (const auto& [enc, v] : f.entries()) dom.insert_encoded(enc);
    if (auto escape = ksub::theta_witness(dom)) {
        std::cout << "NO\n"
                  << witness_line(ksub::ThetaEscapeWitness{escape->x, escape->y, escape->z,
                                                           escape->image})
                  << "\n";
        return kNegative;
    }
    std::cout << "YES\n";
    return kOk;
}

int cmd_verify(const std::string& in_path, std::uint64_t max_cells) {
    auto in = open_input(in_path);
    const ksub::CostTable g = ksub::parse_ksf(in, max_cells);
    if (auto violation = ksub::verify_ksubmodular(g)) {
        std::cout << "violated by x=" << ksub::format_labeling(violation->x)
                  << " y=" << ksub::format_labeling(violation->y) << ": "
                  << violation->lhs.str() << " < " << violation->rhs.str() << "\n";
        return kNegative;
    }
    std::cout << "OK\n";
    return kOk;
}

int cmd_minimize(const std::string& in_path, std::uint64_t max_cells) {
    auto in = open_input(in_path);
    const ksub::CostTable g = ksub::parse_ksf(in, max_cells);
    const ksub::MinimizationReport report = ksub::brute_min(g);
    std::cout << "optimum " << report.optimum.str() << ", " << report.minimizers.size()
              << " minimizers\n";
    for (const ksub::Labeling& x : report.minimizers)
        std::cout << ksub::format_labeling(x) << "\n";
    return kOk;
}

std::string autarky_summary(const ksub::AutarkyReport& report) {
    if (report.fixed.empty()) return "(none)";
    std::string out;
    for (const auto& [var, label] : report.fixed) {
        if (!out.empty()) out += ' ';
        out += "x" + std::to_string(var) + "=" + std::to_string(label);
    }
    return out;
}

int cmd_vcsp(const std::string& action, const std::string& in_path,
             const std::string& out_path, bool verify, std::uint64_t max_cells) {
    auto in = open_input(in_path);
    const ksub::VcspInstance instance = ksub::parse_vcsp(in, max_cells);

    if (action == "relax") {
        auto outcome = ksub::relax_instance(instance);
        if (const auto* fail = std::get_if<ksub::ConstraintFailure>(&outcome)) {
            std::cout << "constraint " << fail->constraint_index << " NOT EXTENDABLE\n"
                      << witness_line(fail->witness) << "\n";
            return kNegative;
        }
        emit(ksub::print_vcsp(std::get<ksub::RelaxedInstance>(outcome).instance), out_path);
        return kOk;
    }

    if (action == "autarky") {
        try {
            const ksub::AutarkyReport report = ksub::autarky(instance, verify, max_cells);
            std::cout << "relaxed_optimum=" << report.relaxed_optimum.str() << "\n"
                      << "minimizer=" << ksub::format_labeling(report.chosen_minimizer) << "\n"
                      << "autarky: " << autarky_summary(report) << "\n";
            if (verify)
                std::cout << "persistency=" << (report.persistency_verified ? "verified" : "FAILED")
                          << "\n";
            return kOk;
        } catch (const ksub::InstanceNotExtendable& e) {
            std::cout << "constraint " << e.constraint_index << " NOT EXTENDABLE\n"
                      << witness_line(e.witness) << "\n";
            return kNegative;
        }
    }

    if (action == "report") {
        auto outcome = ksub::relax_instance(instance);
        if (const auto* fail = std::get_if<ksub::ConstraintFailure>(&outcome)) {
            std::cout << "constraint " << fail->constraint_index << " NOT EXTENDABLE\n"
                      << witness_line(fail->witness) << "\n";
            return kNegative;
        }
        const auto& relaxed = std::get<ksub::RelaxedInstance>(outcome);
        const mpz_class c = ksub::instance_scaling_factor(relaxed);
        const ksub::Rational d = ksub::gap_d(instance, relaxed, max_cells);
        std::cout << "c=" << c.get_str() << " d=" << ksub::format_rational(d) << " k^(cd)=";
        const ksub::Rational cd = ksub::Rational(c) * d;
        if (cd.get_den() == 1 && cd >= 0 && cd.get_num() <= 4096) {
            mpz_class power;
            mpz_ui_pow_ui(power.get_mpz_t(), instance.k, cd.get_num().get_ui());
            std::cout << power.get_str() << "\n";
        } else {
            std::cout << "unevaluated (cd=" << ksub::format_rational(cd) << ")\n";
        }
        std::cout << "nonnegative=" << (relaxed.nonnegative ? "yes" : "no") << "\n";
        const ksub::AutarkyReport report = ksub::autarky(instance, false, max_cells);
        std::cout << "autarky: " << autarky_summary(report) << "\n";
        return kOk;
    }

    std::cerr << "unknown vcsp action '" << action << "' (want relax, autarky, or report)\n";
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-submodular relaxation toolkit"};
    app.require_subcommand(1);
    std::uint64_t max_cells = ksub::kDefaultMaxCells;
    app.add_option("--max-cells", max_cells, "reject tables with (k+1)^n above this")
        ->capture_default_str();

    std::string in_path, out_path, vcsp_action;
    bool preflight = false, report = false, verify = false;

    CLI::App* relax = app.add_subcommand("relax", "construct a k-submodular relaxation");
    relax->add_option("input", in_path, "pos-kind .ksf file")->required();
    relax->add_option("-o,--output", out_path, "write the relaxation here");
    relax->add_flag("--preflight-theta", preflight, "run the closure check first");
    relax->add_flag("--report", report, "print scaling/half-integrality/maximality report");

    CLI::App* check = app.add_subcommand("check-extendable",
                                         "decide existence of a k-submodular relaxation");
    check->add_option("input", in_path, "pos-kind .ksf file")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "check the k-submodular inequalities");
    verify_cmd->add_option("input", in_path, "full-kind .ksf file")->required();

    CLI::App* minimize = app.add_subcommand("minimize", "brute-force minimum and minimizers");
    minimize->add_option("input", in_path, ".ksf file")->required();

    CLI::App* vcsp = app.add_subcommand("vcsp", "relax, analyze, or fix a VCSP instance");
    vcsp->add_option("action", vcsp_action, "relax | autarky | report")->required();
    vcsp->add_option("input", in_path, ".vcsp file")->required();
    vcsp->add_option("-o,--output", out_path, "write the relaxed instance here");
    vcsp->add_flag("--verify", verify, "re-check persistency by brute force");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (relax->parsed())
            return cmd_relax(in_path, out_path, preflight, report, max_cells);
        if (check->parsed())
            return cmd_check_extendable(in_path, max_cells);
        if (verify_cmd->parsed())
            return cmd_verify(in_path, max_cells);
        if (minimize->parsed())
            return cmd_minimize(in_path, max_cells);
        if (vcsp->parsed())
            return cmd_vcsp(vcsp_action, in_path, out_path, verify, max_cells);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
