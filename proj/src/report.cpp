#include "mpn/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <json.hpp>
#include <openssl/evp.h>

#include "mpn/gates.hpp"
#include "mpn/robustness.hpp"
#include "mpn/rulespace.hpp"
#include "mpn/spectral.hpp"
#include "mpn/stats.hpp"
#include "mpn/transforms.hpp"

namespace mpn {

namespace {

using json = nlohmann::ordered_json;

// Values the statistics report is checked against.
constexpr double kReferenceFisherP = 0.00797;
constexpr double kFisherRelTolerance = 0.05;
constexpr double kReferenceOddsRatio = 9.0;
constexpr double kReferenceOddsCiLower = 1.89;
constexpr double kReferenceOddsCiUpper = 42.78;
constexpr double kReferencePearsonP = 0.13;
constexpr double kReferenceSpearmanP = 0.06;
constexpr double kCorrelationAbsTolerance = 0.03;
constexpr int kClaimedUnchanged = 76;
constexpr int kClaimedMutations = 168;

Variant sync(VariantTag t) { return Variant{t}; }
Variant async(VariantTag t, UpdateMode m) { return Variant{t, m}; }

std::string weight_text(int w) { return std::to_string(w); }

std::string fraction_text(const boost::rational<int>& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// A column that collapses several variants into one when they agree on every row.
struct VariantColumn {
    std::string merged_name;
    std::vector<std::pair<std::string, Variant>> parts;
};

void append_variant_columns(TextTable& table, std::vector<std::string>& warnings,
                            const std::vector<Rule>& rules, const std::vector<VariantColumn>& columns) {
    for (const auto& col : columns) {
        std::vector<std::vector<std::string>> cells(rules.size());
        bool agree = true;
        for (std::size_t r = 0; r < rules.size(); ++r) {
            for (const auto& [name, variant] : col.parts) cells[r].push_back(classify(rules[r], variant).to_string());
            if (std::adjacent_find(cells[r].begin(), cells[r].end(), std::not_equal_to<>()) != cells[r].end())
                agree = false;
        }
        if (agree) {
            table.header.push_back(col.merged_name);
            for (std::size_t r = 0; r < rules.size(); ++r) table.rows[r].push_back(cells[r].front());
            continue;
        }
        warnings.push_back("column " + col.merged_name + " split: its variants disagree on at least one rule");
        for (const auto& part : col.parts) table.header.push_back(part.first);
        for (std::size_t r = 0; r < rules.size(); ++r)
            for (auto& c : cells[r]) table.rows[r].push_back(std::move(c));
    }
}

void start_rule_rows(TextTable& table, const std::vector<Rule>& rules) {
    table.header = {"rule", "a", "b", "c", "d", "T12", "G", "T12+G"};
    for (const Rule& r : rules) {
        table.rows.push_back({std::to_string(r.number()), weight_text(r.a()), weight_text(r.b()),
                              weight_text(r.c()), weight_text(r.d()), std::to_string(t12(r).number()),
                              std::to_string(gauge(r).number()), std::to_string(gauge(t12(r)).number())});
    }
}

std::vector<Rule> canonical_members(const std::vector<Rule>& rules) {
    std::vector<Rule> out;
    for (const auto& cls : reduce(rules, TransformSet{true, false})) out.push_back(Rule::from_number(cls.canonical));
    return out;
}

VariantColumn single(VariantTag t) {
    const std::string name = Variant{t}.name();
    return {name, {{name, sync(t)}}};
}

VariantColumn pair_sync(VariantTag a, VariantTag b) {
    const std::string na = Variant{a}.name(), nb = Variant{b}.name();
    return {na + "=" + nb, {{na, sync(a)}, {nb, sync(b)}}};
}

VariantColumn async_orders(VariantTag t) {
    const std::string base = Variant{t}.name();
    return {base + "A", {{base + "Ax", async(t, UpdateMode::x_first)}, {base + "Ay", async(t, UpdateMode::y_first)}}};
}

TableDocument table1() {
    TableDocument doc{TableId::T1, {}, {}};
    const auto rules = canonical_members(arity2_rules());
    start_rule_rows(doc.table, rules);
    using enum VariantTag;
    const VariantColumn async23{"V2A=V3A",
                                {{"V2Ax", async(V2, UpdateMode::x_first)},
                                 {"V2Ay", async(V2, UpdateMode::y_first)},
                                 {"V3Ax", async(V3, UpdateMode::x_first)},
                                 {"V3Ay", async(V3, UpdateMode::y_first)}}};
    append_variant_columns(doc.table, doc.warnings, rules,
                           {single(V1), pair_sync(V2, V3), async_orders(V1), async23, pair_sync(V4, V7), single(V5),
                            single(V6), async_orders(V4), async_orders(V5), async_orders(V6)});
    return doc;
}

TableDocument table_a1() {
    TableDocument doc{TableId::TA1, {}, {}};
    const auto rules = canonical_members(low_arity_rules());
    start_rule_rows(doc.table, rules);
    using enum VariantTag;
    append_variant_columns(doc.table, doc.warnings, rules,
                           {single(V1), pair_sync(V2, V3), pair_sync(V4, V7), single(V5), single(V6)});
    return doc;
}

std::string pattern_of(const Rule& rule) {
    const auto cls = classify(rule, sync(VariantTag::V1));
    const auto p = sign_predicates(rule);
    switch (cls.label()) {
        case ClassLabel::M: return p.bc_positive ? "bc>0" : "";
        case ClassLabel::C4: return p.bc_negative ? "bc<0" : "";
        case ClassLabel::C2:
            if (rule.a() < 0 && rule.b() == 0) return "a<0&b=0";
            if (rule.d() < 0 && rule.c() == 0) return "d<0&c=0";
            return "";
        default: return "";
    }
}

std::string gate_pair_equations(const Rule& rule) {
    const auto [gx, gy] = node_gates(rule, sync(VariantTag::V1));
    return gate_equation(Node::x, gx) + ", " + gate_equation(Node::y, gy);
}

TableDocument table2() {
    TableDocument doc{TableId::T2, {}, {}};
    const auto rules = canonical_members(arity2_rules());
    const auto classes = reduce(arity2_rules(), TransformSet{true, true}, sync(VariantTag::V1));
    const auto representative = [&](const Rule& r) {
        for (const auto& c : classes)
            if (std::find(c.members.begin(), c.members.end(), r.number()) != c.members.end()) return c.canonical;
        throw std::logic_error("rule missing from its equivalence class");
    };
    doc.table.header = {"rule", "a", "b", "c", "d", "pattern", "T12", "G", "T12+G", "dynamics", "gates",
                        "representative"};
    for (const Rule& r : rules) {
        doc.table.rows.push_back({std::to_string(r.number()), weight_text(r.a()), weight_text(r.b()),
                                  weight_text(r.c()), weight_text(r.d()), pattern_of(r),
                                  std::to_string(t12(r).number()), std::to_string(gauge(r).number()),
                                  std::to_string(gauge(t12(r)).number()),
                                  classify(r, sync(VariantTag::V1)).to_string(), gate_pair_equations(r),
                                  std::to_string(representative(r))});
    }
    return doc;
}

TableDocument table_a2() {
    TableDocument doc{TableId::TA2, {}, {}};
    doc.table.header = {"rule", "V1", "V2", "V3", "V4", "V5", "V6"};
    for (const Rule& r : canonical_members(arity2_rules())) {
        std::vector<std::string> row{std::to_string(r.number())};
        for (int t = 1; t <= 6; ++t) {
            const auto [gx, gy] = node_gates(r, sync(static_cast<VariantTag>(t)));
            row.push_back(std::string(gate_name(gx)) + "," + std::string(gate_name(gy)));
        }
        doc.table.rows.push_back(std::move(row));
    }
    return doc;
}

TableDocument table3(TableId id, ClassGrouping grouping) {
    TableDocument doc{id, {}, {}};
    const auto t = class_transition_counts(sync(VariantTag::V1), grouping);
    doc.table.header.push_back("from");
    for (const auto& l : t.labels) doc.table.header.push_back(l);
    doc.table.header.push_back("sum");
    const auto sums = t.row_sums();
    for (Eigen::Index i = 0; i < t.counts.rows(); ++i) {
        std::vector<std::string> row{t.labels[static_cast<std::size_t>(i)]};
        for (Eigen::Index j = 0; j < t.counts.cols(); ++j) row.push_back(std::to_string(t.counts(i, j)));
        row.push_back(std::to_string(sums(i)));
        doc.table.rows.push_back(std::move(row));
    }
    if (t.unclassified_pairs != 0)
        doc.warnings.push_back(std::to_string(t.unclassified_pairs) + " pairs fall outside the class grouping");
    return doc;
}

TableDocument table4() {
    TableDocument doc{TableId::T4, {}, {}};
    const auto tab = class_robustness_crosstab();
    doc.table.header.push_back("class");
    for (const auto& c : tab.columns) doc.table.header.push_back(c.label);
    doc.table.header.push_back("total");
    const auto row = [&](std::string label, const std::array<int, 5>& counts) {
        std::vector<std::string> cells{std::move(label)};
        int total = 0;
        for (int c : counts) {
            cells.push_back(std::to_string(c));
            total += c;
        }
        cells.push_back(std::to_string(total));
        doc.table.rows.push_back(std::move(cells));
    };
    row("total", tab.column_totals);
    for (std::size_t g = 0; g < 3; ++g) row(tab.row_labels[g], tab.counts[g]);
    return doc;
}

TableDocument robustness_table() {
    TableDocument doc{TableId::robustness, {}, {}};
    doc.table.header = {"rule",         "arity",           "class_V1",       "class_robustness",
                        "state_rule_arity2", "state_rule_all", "state_init"};
    for (const Rule& r : all_rules()) {
        const bool coupled = r.arity() == 2;
        doc.table.rows.push_back(
            {std::to_string(r.number()), std::to_string(r.arity()), classify(r, sync(VariantTag::V1)).to_string(),
             fraction_text(class_robustness(r).exact()),
             coupled ? fraction_text(state_robustness_rule_mutation(r, MutationScope::arity2_only).exact()) : "",
             fraction_text(state_robustness_rule_mutation(r, MutationScope::all_rules).exact()),
             fraction_text(state_robustness_init_perturbation(r).exact())});
    }
    return doc;
}

std::string successors_text(const StateMap& map) {
    std::string out;
    for (NetState s : kAllStates) {
        if (!out.empty()) out += ' ';
        out += "S" + std::to_string(map[s.index].index);
    }
    return out;
}

std::string charpoly_text(const std::vector<long long>& coeffs) {
    std::string out;
    for (long long c : coeffs) {
        if (!out.empty()) out += ' ';
        out += std::to_string(c);
    }
    return out;
}

TableDocument spectra_table() {
    TableDocument doc{TableId::spectra, {}, {}};
    doc.table.header = {"rule", "variant", "class", "successors", "transient_states", "spectrum", "charpoly"};
    for (const Rule& r : all_rules()) {
        for (int t = 1; t <= 6; ++t) {
            const Variant v = sync(static_cast<VariantTag>(t));
            const auto map = one_step_map(r, v);
            const auto set = attractor_set(map);
            const auto spectrum = spectrum_from_cycles(set);
            doc.table.rows.push_back({std::to_string(r.number()), v.name(), classify(set).to_string(),
                                      successors_text(map), std::to_string(set.transient_state_count()),
                                      spectrum.to_string(), charpoly_text(spectrum.characteristic_polynomial())});
        }
    }
    return doc;
}

json histogram_json(const RobustnessHistogram& h) {
    json bins = json::array();
    for (const auto& b : h.bins) {
        bins.push_back({{"label", b.label},
                        {"lower", fraction_text(b.lower)},
                        {"lower_inclusive", b.lower_inclusive},
                        {"upper", fraction_text(b.upper)},
                        {"upper_inclusive", b.upper_inclusive},
                        {"count", b.count},
                        {"rules", b.rules}});
    }
    return {{"metric", to_string(h.metric)},
            {"scope", h.scope == MutationScope::all_rules ? "all-rules" : "arity2-only"},
            {"edges", h.edges_description()},
            {"total", h.total()},
            {"bins", std::move(bins)}};
}

json matrix_json(const Eigen::MatrixXi& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json correlation_json(const std::string& name, const std::vector<Rule>& rules, MutationScope scope, bool compared) {
    std::vector<double> init, mutation;
    for (const Rule& r : rules) {
        init.push_back(state_robustness_init_perturbation(r).fraction());
        mutation.push_back(state_robustness_rule_mutation(r, scope).fraction());
    }
    const auto p = stats::pearson(init, mutation);
    const auto s = stats::spearman(init, mutation);
    json out{{"dataset", name},
             {"n", rules.size()},
             {"x", "state robustness to initial-state perturbation (V4)"},
             {"y", "state robustness to rule mutation (V4)"},
             {"mutation_scope", scope == MutationScope::all_rules ? "all-rules" : "arity2-only"},
             {"pearson_r", p.r},
             {"pearson_p", p.p_value},
             {"spearman_rho", s.r},
             {"spearman_p", s.p_value}};
    if (compared) {
        out["reference_pearson_p"] = kReferencePearsonP;
        out["reference_spearman_p"] = kReferenceSpearmanP;
        out["abs_tolerance"] = kCorrelationAbsTolerance;
        out["pearson_within_tolerance"] = std::abs(p.p_value - kReferencePearsonP) <= kCorrelationAbsTolerance;
        out["spearman_within_tolerance"] = std::abs(s.p_value - kReferenceSpearmanP) <= kCorrelationAbsTolerance;
    }
    return out;
}

std::string to_hex(const unsigned char* data, unsigned len) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned i = 0; i < len; ++i) {
        out += digits[data[i] >> 4];
        out += digits[data[i] & 0xF];
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

TableId parse_table_id(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (TableId id : all_table_ids()) {
        std::string name = to_string(id);
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
        if (name == t) return id;
    }
    throw std::invalid_argument("unknown table id '" + std::string(text) + "'");
}

std::string to_string(TableId id) {
    switch (id) {
        case TableId::T1: return "T1";
        case TableId::T2: return "T2";
        case TableId::T3A: return "T3A";
        case TableId::T3B: return "T3B";
        case TableId::T4: return "T4";
        case TableId::TA1: return "TA1";
        case TableId::TA2: return "TA2";
        case TableId::robustness: return "robustness";
        case TableId::spectra: return "spectra";
    }
    return "";
}

std::vector<TableId> all_table_ids() {
    return {TableId::T1,  TableId::T2,  TableId::T3A,        TableId::T3B,    TableId::T4,
            TableId::TA1, TableId::TA2, TableId::robustness, TableId::spectra};
}

TableDocument make_table(TableId id) {
    switch (id) {
        case TableId::T1: return table1();
        case TableId::T2: return table2();
        case TableId::T3A: return table3(id, ClassGrouping::five_class);
        case TableId::T3B: return table3(id, ClassGrouping::three_class);
        case TableId::T4: return table4();
        case TableId::TA1: return table_a1();
        case TableId::TA2: return table_a2();
        case TableId::robustness: return robustness_table();
        case TableId::spectra: return spectra_table();
    }
    throw std::invalid_argument("unknown table id");
}

std::string emit_table(TableId id, TableFormat format) { return make_table(id).render(format); }

std::string emit_state_graph(const Rule& rule, const Variant& variant) {
    const auto map = one_step_map(rule, variant);
    const auto conv = variant.convention();
    std::ostringstream out;
    out << "digraph \"R" << rule.number() << "_" << variant.name() << "\" {\n";
    out << "  node [shape=box];\n";
    for (NetState s : kAllStates)
        out << "  S" << int(s.index) << " [label=\"" << state_label(s, conv) << "\"];\n";
    for (NetState s : kAllStates) out << "  S" << int(s.index) << " -> S" << int(map[s.index].index) << ";\n";
    out << "}\n";
    return out.str();
}

std::string statistics_report_json() {
    json doc;

    const auto tab = class_robustness_crosstab();
    const stats::ContingencyTable2x2 quad{tab.quadrants[0][0], tab.quadrants[0][1], tab.quadrants[1][0],
                                          tab.quadrants[1][1]};
    const auto fisher = stats::fisher_exact(quad);
    const double rel = std::abs(fisher.p_value - kReferenceFisherP) / kReferenceFisherP;
    doc["fisher"] = {{"table", {{quad.n11, quad.n12}, {quad.n21, quad.n22}}},
                     {"rows", {"fixed point", "not fixed point"}},
                     {"columns", {"robustness < 0.821", "robustness >= 0.821"}},
                     {"definition", "two-sided; sum of hypergeometric probabilities no greater than the observed "
                                    "table's, margins fixed"},
                     {"p_exact", fisher.p_exact.str()},
                     {"p_value", fisher.p_value},
                     {"reference_p", kReferenceFisherP},
                     {"relative_difference", rel},
                     {"rel_tolerance", kFisherRelTolerance},
                     {"within_tolerance", rel <= kFisherRelTolerance}};

    const auto odds = stats::odds_ratio(quad);
    json oj{{"estimator", "sample odds ratio n11*n22/(n12*n21), Woolf 95% interval"},
            {"estimate", odds.estimate},
            {"inverse_estimate", odds.estimate > 0 ? 1.0 / odds.estimate : 0.0}};
    if (odds.ci_lower) oj["ci_lower"] = *odds.ci_lower;
    if (odds.ci_upper) oj["ci_upper"] = *odds.ci_upper;
    oj["zero_cell"] = odds.zero_cell;
    oj["reference_estimate"] = kReferenceOddsRatio;
    oj["reference_ci"] = {kReferenceOddsCiLower, kReferenceOddsCiUpper};
    const bool or_matches = std::abs(odds.estimate - kReferenceOddsRatio) / kReferenceOddsRatio <= 0.05 ||
                            (odds.estimate > 0 &&
                             std::abs(1.0 / odds.estimate - kReferenceOddsRatio) / kReferenceOddsRatio <= 0.05);
    oj["reference_matches"] = or_matches;
    doc["odds_ratio"] = std::move(oj);

    const auto a2 = arity2_rules();
    const auto every = all_rules();
    doc["correlations"] = json::array({
        correlation_json("arity-2 rules, arity-2 neighbourhoods", a2, MutationScope::arity2_only, true),
        correlation_json("arity-2 rules, full neighbourhoods", a2, MutationScope::all_rules, false),
        correlation_json("all rules, full neighbourhoods", every, MutationScope::all_rules, false),
    });

    const auto t3 = class_transition_counts(sync(VariantTag::V1), ClassGrouping::five_class);
    const int diag = t3.diagonal().sum();
    const int total = t3.counts.sum();
    const auto directed =
        class_transition_counts(sync(VariantTag::V1), ClassGrouping::five_class, TallyMode::arity2_directed);
    doc["mutation_tally"] = {
        {"labels", t3.labels},
        {"counts", matrix_json(t3.counts)},
        {"unchanged", diag},
        {"total", total},
        {"claimed_unchanged", kClaimedUnchanged},
        {"claimed_total", kClaimedMutations},
        {"claim_consistent", diag == kClaimedUnchanged && total == kClaimedMutations},
        {"arity2_directed",
         {{"counts", matrix_json(directed.counts)},
          {"unchanged", directed.diagonal().sum()},
          {"total", directed.counts.sum()},
          {"low_arity_pairs", directed.low_arity_pairs}}},
    };

    json eoc = json::array();
    for (const Rule& r : edge_of_chaos(sync(VariantTag::V1))) eoc.push_back(r.number());
    int fixed = 0;
    for (const Rule& r : a2)
        if (classify(r, sync(VariantTag::V1)).is_fixed_point()) ++fixed;
    doc["edge_of_chaos"] = {{"rules", eoc}, {"count", eoc.size()}, {"fixed_point_rules", fixed}};

    doc["histograms"] = json::array(
        {histogram_json(robustness_distribution(RobustnessMetric::state_vs_rule_mutation)),
         histogram_json(robustness_distribution(RobustnessMetric::state_vs_init_perturbation, MutationScope::all_rules)),
         histogram_json(robustness_distribution(RobustnessMetric::class_vs_rule_mutation, MutationScope::all_rules))});
    json crosstab_cols = json::array();
    for (const auto& c : tab.columns)
        crosstab_cols.push_back({{"label", c.label},
                                 {"lower", fraction_text(c.lower)},
                                 {"lower_inclusive", c.lower_inclusive},
                                 {"upper", fraction_text(c.upper)},
                                 {"upper_inclusive", c.upper_inclusive}});
    doc["class_robustness_bins"] = std::move(crosstab_cols);

    // Variant identities checked over all rules.
    int v2_v3 = 0, async_orders_differ = 0, gauge_v2 = 0;
    for (const Rule& r : every) {
        if (!(classify(r, sync(VariantTag::V2)) == classify(r, sync(VariantTag::V3)))) ++v2_v3;
        if (!(classify(r, sync(VariantTag::V2)) == classify(gauge(r), sync(VariantTag::V2)))) ++gauge_v2;
        for (int t = 1; t <= 6; ++t) {
            const auto tag = static_cast<VariantTag>(t);
            if (!(classify(r, async(tag, UpdateMode::x_first)) == classify(r, async(tag, UpdateMode::y_first))))
                ++async_orders_differ;
        }
    }
    doc["identities"] = {{"v2_v3_class_mismatches", v2_v3},
                         {"async_order_mismatches", async_orders_differ},
                         {"gauge_changes_v2_class", gauge_v2}};

    json warnings = json::array();
    for (TableId id : {TableId::T1, TableId::TA1})
        for (const auto& w : make_table(id).warnings) warnings.push_back(to_string(id) + ": " + w);
    doc["table_warnings"] = std::move(warnings);

    return doc.dump(2) + "\n";
}

std::string robustness_distributions_json() {
    json doc = json::array();
    for (auto metric : {RobustnessMetric::class_vs_rule_mutation, RobustnessMetric::state_vs_rule_mutation,
                        RobustnessMetric::state_vs_init_perturbation}) {
        for (auto scope : {MutationScope::arity2_only, MutationScope::all_rules}) {
            if (metric == RobustnessMetric::state_vs_init_perturbation && scope == MutationScope::all_rules) continue;
            doc.push_back(histogram_json(robustness_distribution(metric, scope)));
        }
    }
    return doc.dump(2) + "\n";
}

std::string describe(const Rule& rule, const Variant& variant) {
    const auto map = one_step_map(rule, variant);
    const auto set = attractor_set(map);
    const auto conv = variant.convention();
    std::ostringstream out;
    out << "rule " << rule.number() << " (a,b,c,d) = (" << rule.a() << "," << rule.b() << "," << rule.c() << ","
        << rule.d() << ") variant " << variant.name() << "\n";
    out << "class: " << classify(set).to_string() << "\n";
    for (std::size_t i = 0; i < set.attractors.size(); ++i)
        out << "attractor " << i << ": " << to_string(set.attractors[i], conv) << "\n";
    out << "transitions:\n";
    for (NetState s : kAllStates)
        out << "  " << state_label(s, conv) << " -> " << state_label(map[s.index], conv) << "\n";
    out << "transition matrix:\n";
    const auto t = transition_matrix(map);
    for (int i = 0; i < 4; ++i) {
        out << " ";
        for (int j = 0; j < 4; ++j) out << ' ' << t(i, j);
        out << "\n";
    }
    const auto spectrum = spectrum_from_cycles(set);
    out << "spectrum: " << spectrum.to_string() << "\n";
    out << "characteristic polynomial: " << charpoly_text(spectrum.characteristic_polynomial()) << "\n";
    return out.str();
}

std::string sha256_hex(std::string_view data) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    return to_hex(digest, len);
}

std::string Manifest::to_json() const {
    json files = json::array();
    for (const auto& e : entries) files.push_back({{"file", e.file}, {"sha256", e.sha256}, {"bytes", e.bytes}});
    return json{{"files", std::move(files)}}.dump(2) + "\n";
}

Manifest run_all(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

    std::vector<std::pair<std::string, std::string>> outputs;
    for (TableId id : all_table_ids()) outputs.emplace_back(to_string(id) + ".csv", emit_table(id, TableFormat::csv));

    auto graph = make_rule_graph();
    for (const Rule& r : all_rules()) {
        graph.set_attribute(r.number(), "class_robustness", fraction_text(class_robustness(r).exact()));
        graph.set_attribute(r.number(), "state_robustness",
                            fraction_text(state_robustness_rule_mutation(r, MutationScope::all_rules).exact()));
    }
    outputs.emplace_back("rulespace.dot", export_graph(graph, GraphFormat::dot));
    outputs.emplace_back("rulespace.csv", export_graph(graph, GraphFormat::csv));
    outputs.emplace_back("rulespace.json", export_graph(graph, GraphFormat::json));
    outputs.emplace_back("robustness_distributions.json", robustness_distributions_json());
    outputs.emplace_back("stats.json", statistics_report_json());
    outputs.emplace_back("state_graph_R8_V1.dot", emit_state_graph(Rule::from_number(8), Variant{VariantTag::V1}));

    Manifest manifest;
    for (const auto& [name, content] : outputs) {
        write_file(dir / name, content);
        manifest.entries.push_back({name, sha256_hex(content), content.size()});
    }
    write_file(dir / "manifest.json", manifest.to_json());
    return manifest;
}

}  // namespace mpn
