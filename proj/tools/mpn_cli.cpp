// Command-line front end: tables, graph exports, robustness and statistics.
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "mpn/report.hpp"
#include "mpn/robustness.hpp"
#include "mpn/rulespace.hpp"
#include "mpn/transforms.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFailure = 1;

// Bad arguments that only surface after parsing (unknown rule, variant, table id).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename F>
auto as_usage(F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
}

mpn::Rule parse_rule(const std::string& text) {
    return as_usage([&] {
        std::size_t used = 0;
        const int n = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument("rule must be a number in 1..81, got '" + text + "'");
        return mpn::Rule::from_number(n);
    });
}

mpn::Variant parse_variant(const std::string& text) {
    return as_usage([&] { return mpn::Variant::parse(text); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-node threshold network rules: dynamics, tables and graph exports"};
    app.require_subcommand(1);

    std::string rule_text, variant_text;
    auto* classify = app.add_subcommand("classify", "Class, attractors and transition matrix of one rule");
    classify->add_option("rule", rule_text, "Rule number 1..81")->required();
    classify->add_option("variant", variant_text, "V1..V7, suffix A or Ay for x-first or y-first updating")
        ->required();

    std::string table_id, format = "csv";
    auto* table = app.add_subcommand("table", "Emit one table (T1 T2 T3A T3B T4 TA1 TA2 robustness spectra)");
    table->add_option("id", table_id, "Table id")->required();
    table->add_option("--format", format, "csv, tsv, markdown or json");

    auto* state_graph = app.add_subcommand("state-graph", "One-step state map as a DOT digraph");
    state_graph->add_option("rule", rule_text, "Rule number 1..81")->required();
    state_graph->add_option("variant", variant_text, "Variant name")->required();

    std::string graph_format = "dot";
    auto* rulespace = app.add_subcommand("rulespace", "Rule mutation graph");
    auto* rs_export = rulespace->add_subcommand("export", "Export the 81-node graph");
    rs_export->add_option("--format", graph_format, "dot, csv or json");
    rulespace->require_subcommand(1);

    std::string metric = "state-rule", scope = "arity2";
    auto* robustness = app.add_subcommand("robustness", "Robustness histogram over the 72 coupled rules");
    robustness->add_option("--metric", metric, "class, state-rule or state-init");
    robustness->add_option("--scope", scope, "arity2 or all (neighbourhood of a rule mutation)");

    app.add_subcommand("stats", "Fisher test, odds ratio, correlations and mutation tallies as JSON");

    std::string out_dir;
    auto* all = app.add_subcommand("all", "Write every table, export and report plus manifest.json");
    all->add_option("--out", out_dir, "Output directory")->required();

    app.footer(
        "Gate names: F T AND OR NAND NOR XOR NXOR x y notx noty xANDnoty notxANDy xIMP yIMP\n"
        "(xIMP is x implies y, yIMP is y implies x).\n"
        "Exit codes: 0 success, 2 usage error, 1 internal failure.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (classify->parsed()) {
            std::cout << mpn::describe(parse_rule(rule_text), parse_variant(variant_text));
        } else if (table->parsed()) {
            const auto id = as_usage([&] { return mpn::parse_table_id(table_id); });
            const auto fmt = as_usage([&] { return mpn::parse_table_format(format); });
            const auto doc = mpn::make_table(id);
            for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
            std::cout << doc.render(fmt);
        } else if (state_graph->parsed()) {
            std::cout << mpn::emit_state_graph(parse_rule(rule_text), parse_variant(variant_text));
        } else if (rs_export->parsed()) {
            const auto fmt = as_usage([&] { return mpn::parse_graph_format(graph_format); });
            std::cout << mpn::export_graph(mpn::make_rule_graph(), fmt);
        } else if (robustness->parsed()) {
            const auto m = as_usage([&] { return mpn::parse_metric(metric); });
            mpn::MutationScope s;
            if (scope == "arity2") s = mpn::MutationScope::arity2_only;
            else if (scope == "all") s = mpn::MutationScope::all_rules;
            else throw UsageError("unknown scope '" + scope + "'");
            const auto hist = mpn::robustness_distribution(m, s);
            std::cout << "metric " << mpn::to_string(hist.metric) << ", " << hist.total() << " rules\n";
            for (const auto& b : hist.bins) {
                std::cout << b.label << "\t" << b.count << "\t";
                for (std::size_t i = 0; i < b.rules.size(); ++i) std::cout << (i ? " " : "") << b.rules[i];
                std::cout << "\n";
            }
        } else if (app.got_subcommand("stats")) {
            std::cout << mpn::statistics_report_json();
        } else if (all->parsed()) {
            const auto manifest = mpn::run_all(out_dir);
            std::cout << "wrote " << manifest.entries.size() + 1 << " files to " << out_dir << "\n";
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
