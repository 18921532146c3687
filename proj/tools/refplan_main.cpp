#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "refplan/report.hpp"
#include "refplan/search.hpp"
#include "refplan/spec_io.hpp"

namespace {

// Exit codes: 0 success, 2 syntax/schema error, 3 validation or
// precondition failure, 4 enumeration guard, 5 internal invariant breach.
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitGuard = 4;
constexpr int kExitInternal = 5;

refplan::ReportFormat format_from(const std::string& token) {
    return token == "json" ? refplan::ReportFormat::Json : refplan::ReportFormat::Table;
}

refplan::ValidatedSpec load(const std::string& path) {
    return refplan::validate_spec(refplan::parse_spec_file(path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"refplan: plans artifact introduction orders for Event-B refinement"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "table";
    bool oracle = false;
    int max_enumerate = refplan::kDefaultEnumerationGuard;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "spec file (JSON)")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
    };

    CLI::App* validate = app.add_subcommand("validate", "check a spec's structural invariants");
    add_common(validate);

    CLI::App* closure =
        app.add_subcommand("closure", "print the required phenomena of each artifact");
    add_common(closure);

    CLI::App* plan = app.add_subcommand("plan", "find the most effective introduction orders");
    add_common(plan);
    plan->add_flag("--oracle", oracle, "use exhaustive enumeration instead of the pruned search");
    plan->add_option("--max-enumerate", max_enumerate,
                     "max artifacts for exhaustive enumeration")
        ->capture_default_str();

    CLI::App* rank = app.add_subcommand("rank", "rank every introduction order");
    add_common(rank);
    rank->add_option("--max-enumerate", max_enumerate,
                     "max artifacts for exhaustive enumeration")
        ->capture_default_str();

    CLI::App* graph = app.add_subcommand("graph", "emit the dependency graph as DOT");
    graph->add_option("file", file, "spec file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (validate->parsed()) {
            std::cout << refplan::emit_validate_report(load(file), format_from(format));
        } else if (closure->parsed()) {
            std::cout << refplan::emit_closure_report(load(file), format_from(format));
        } else if (plan->parsed()) {
            const refplan::ValidatedSpec spec = load(file);
            refplan::PlanResult result = oracle
                                             ? refplan::brute_force_best_orders(spec, max_enumerate)
                                             : refplan::search_best_orders(spec);
            result.rank_table.reset();  // plan reports the best orders only
            std::cout << refplan::emit_plan_report(result, format_from(format));
        } else if (rank->parsed()) {
            const refplan::ValidatedSpec spec = load(file);
            std::cout << refplan::emit_plan_report(refplan::rank_all_orders(spec, max_enumerate),
                                                   format_from(format));
        } else if (graph->parsed()) {
            std::cout << refplan::emit_dependency_graph(load(file));
        }
    } catch (const refplan::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const refplan::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const refplan::UnknownIdError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const refplan::NoArtifactsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const refplan::EnumerationGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
