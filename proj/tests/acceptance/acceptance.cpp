// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "acceptance/reference_tables.hpp"
#include "mpn/gates.hpp"
#include "mpn/report.hpp"
#include "mpn/robustness.hpp"
#include "mpn/rulespace.hpp"
#include "mpn/spectral.hpp"
#include "mpn/stats.hpp"
#include "mpn/transforms.hpp"
#include "oracles.hpp"

using namespace mpn;

namespace {

int failures = 0;

struct Check {
    std::vector<std::string> problems;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

void report(int n, const std::string& title, const Check& c) {
    const bool pass = c.problems.empty();
    if (!pass) ++failures;
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "\n";
    for (const auto& p : c.problems) std::cout << "    mismatch: " << p << "\n";
    for (const auto& p : c.notes) std::cout << "    info: " << p << "\n";
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string without_spaces(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

std::string cell_diff(const std::vector<std::string>& header, const std::vector<std::string>& got,
                      const std::vector<std::string>& want) {
    std::string out;
    for (std::size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
        const std::string g = i < got.size() ? got[i] : "<none>";
        const std::string w = i < want.size() ? want[i] : "<none>";
        if (g != w) out += " " + (i < header.size() ? header[i] : "?") + "=" + g + " (expected " + w + ")";
    }
    return out;
}

template <typename Rows>
void compare_rule_table(Check& c, const TableDocument& doc, const Rows& reference) {
    c.expect(doc.warnings.empty(), "merged columns were split");
    c.expect(doc.table.rows.size() == reference.size(), "row count " + std::to_string(doc.table.rows.size()));
    int cells = 0;
    for (std::size_t i = 0; i < std::min(doc.table.rows.size(), reference.size()); ++i) {
        const auto want = split(reference[i], ',');
        const auto& got = doc.table.rows[i];
        cells += static_cast<int>(want.size());
        if (got != want) c.expect(false, "rule " + want[0] + ":" + cell_diff(doc.table.header, got, want));
    }
    c.notes.push_back(std::to_string(cells) + " cells compared");
}

std::string class_of(int rule, const Variant& v) { return classify(Rule::from_number(rule), v).to_string(); }

std::vector<std::string> eig_names(int rule, VariantTag tag) {
    std::vector<std::string> out;
    for (const auto& e : spectrum_from_cycles(attractor_set(Rule::from_number(rule), Variant(tag))).values)
        out.push_back(e.to_string());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void criterion1() {
    Check c;
    std::vector<std::string_view> rows;
    for (const auto& r : reference::kTable1) rows.push_back(r.csv);
    compare_rule_table(c, make_table(TableId::T1), rows);
    report(1, "39-rule class table across all variant columns and equivalent-rule columns", c);
}

void criterion2() {
    Check c;
    compare_rule_table(c, make_table(TableId::TA1), reference::kTableA1);
    report(2, "low-arity rule table (6 rules)", c);
}

void criterion3() {
    Check c;
    const auto a2 = arity2_rules();
    const auto swap = reduce(a2, TransformSet{true, false});
    const auto both = reduce(a2, TransformSet{true, true}, Variant(VariantTag::V1));
    c.expect(swap.size() == 39, "T12 classes: " + std::to_string(swap.size()));
    c.expect(both.size() == 21, "{T12,G} classes: " + std::to_string(both.size()));
    std::set<int> reps, starred;
    for (const auto& e : both) reps.insert(e.canonical);
    for (const auto& r : reference::kTable1)
        if (r.representative) starred.insert(r.rule);
    c.expect(reps == starred, "representatives differ from the starred rules");
    std::set<int> canon;
    for (const auto& e : swap) canon.insert(e.canonical);
    std::set<int> listed;
    for (const auto& r : reference::kTable1) listed.insert(r.rule);
    c.expect(canon == listed, "T12 canonical rules differ from the listed rules");
    report(3, "equivalence counts 72 -> 39 -> 21 and representatives", c);
}

void criterion4() {
    Check c;
    int v7 = 0, v23 = 0, eps = 0, async = 0;
    for (const Rule& r : all_rules()) {
        for (NetState s : kAllStates)
            if (step(r, Variant(VariantTag::V7), s) != step(r, Variant(VariantTag::V4), s)) ++v7;
        if (!(classify(r, Variant(VariantTag::V2)) == classify(r, Variant(VariantTag::V3)))) ++v23;
        for (double e : {0.25, 0.5, 0.75})
            for (VariantTag t : {VariantTag::V2, VariantTag::V3})
                for (NetState s : kAllStates)
                    if (step(r, Variant(t).with_epsilon(e), s) != step(r, Variant(t), s)) ++eps;
        for (const Variant& v : all_variants())
            if (!(classify(r, v.with_mode(UpdateMode::x_first)) == classify(r, v.with_mode(UpdateMode::y_first))))
                ++async;
    }
    c.expect(v7 == 0, std::to_string(v7) + " V7/V4 step differences");
    c.expect(v23 == 0, std::to_string(v23) + " V2/V3 class differences");
    c.expect(eps == 0, std::to_string(eps) + " epsilon-form step differences");
    c.expect(async == 0, std::to_string(async) + " async order class differences");
    c.notes.push_back("324 V7/V4 steps, 81 V2/V3 pairs, 1944 epsilon steps, 567 async pairs checked");
    report(4, "variant identities (V7=V4, V2~V3, epsilon forms, async order)", c);
}

void criterion5() {
    Check c;
    TransitionMatrix r8;
    r8 << 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0;
    c.expect(transition_matrix(Rule::from_number(8), Variant(VariantTag::V1)) == r8, "R8/V1 matrix");
    int checked = 0;
    for (const Rule& r : all_rules()) {
        for (int t = 1; t <= 6; ++t) {
            const Variant v(static_cast<VariantTag>(t));
            const auto poly = spectrum_from_cycles(attractor_set(r, v)).characteristic_polynomial();
            const auto want = charpoly_oracle(transition_matrix(r, v));
            ++checked;
            if (poly.size() != 5 || !std::equal(poly.begin(), poly.end(), want.begin()))
                c.expect(false, "charpoly R" + std::to_string(r.number()) + " " + v.name());
        }
    }
    c.notes.push_back(std::to_string(checked) + " characteristic polynomials checked");
    for (const Rule& r : all_rules()) {
        const auto cls = classify(r, Variant(VariantTag::V1));
        if (cls.label() == ClassLabel::C4)
            c.expect(eig_names(r.number(), VariantTag::V1) == sorted({"1", "-1", "i", "-i"}),
                     "4C spectrum R" + std::to_string(r.number()));
        if (cls.label() == ClassLabel::M)
            c.expect(eig_names(r.number(), VariantTag::V1) == sorted({"1", "1", "1", "-1"}),
                     "M spectrum R" + std::to_string(r.number()));
    }
    for (int n : {12, 18})
        c.expect(eig_names(n, VariantTag::V1) == sorted({"1", "-1", "1", "-1"}), "two 2-cycles R" + std::to_string(n));
    report(5, "spectral dictionary", c);
}

void criterion6() {
    Check c;
    const auto t2 = make_table(TableId::T2).table;
    std::map<int, std::string> gates;
    for (const auto& row : t2.rows) gates[std::stoi(row[0])] = without_spaces(row[10]);
    for (const auto& ref : reference::kTable2)
        c.expect(gates[ref.rule] == ref.gates,
                 "gate pair R" + std::to_string(ref.rule) + " = " + gates[ref.rule] + " (expected " +
                     std::string(ref.gates) + ")");
    c.notes.push_back(std::to_string(reference::kTable2.size()) + " gate-column entries compared");

    const auto a2 = make_table(TableId::TA2).table;
    int cells = 0;
    for (const auto& ref : reference::kTableA2) {
        const auto it = std::find_if(a2.rows.begin(), a2.rows.end(),
                                     [&](const auto& row) { return std::stoi(row[0]) == ref.rule; });
        if (it == a2.rows.end()) {
            c.expect(false, "missing gate row R" + std::to_string(ref.rule));
            continue;
        }
        for (int v = 0; v < 6; ++v) {
            ++cells;
            const auto& got = (*it)[static_cast<std::size_t>(v + 1)];
            c.expect(got == ref.gates[static_cast<std::size_t>(v)],
                     "R" + std::to_string(ref.rule) + " V" + std::to_string(v + 1) + " = " + got + " (expected " +
                         std::string(ref.gates[static_cast<std::size_t>(v)]) + ")");
        }
    }
    c.notes.push_back(std::to_string(cells) + " all-variant gate cells compared");

    for (const Rule& r : arity2_rules()) {
        const auto [gx, gy] = node_gates(r, Variant(VariantTag::V1));
        for (Gate g : {gx, gy}) {
            const auto k = canalization(g);
            c.expect(k == Canalization::zero_input || k == Canalization::one_input,
                     "non-canalizing V1 gate at R" + std::to_string(r.number()));
        }
    }
    for (const Rule& r : all_rules()) {
        for (const Variant& v : all_variants()) {
            const auto [gx, gy] = node_gates(r, v);
            for (Gate g : {gx, gy})
                c.expect(g != Gate::Xor && g != Gate::Nxor, "XOR/NXOR at R" + std::to_string(r.number()));
        }
    }
    // The two R39 cells above conflict with the class table: under V4 R39 is F4, which needs
    // the identity pair x,y; under V5 it is F2, which T,xIMP gives.
    c.notes.push_back("R39 classes: V4 " + class_of(39, Variant(VariantTag::V4)) + ", V5 " +
                      class_of(39, Variant(VariantTag::V5)));
    report(6, "logic gates: gate column, all-variant gate table, canalization, no XOR/NXOR", c);
}

void criterion7() {
    Check c;
    const auto a = class_transition_counts(Variant(VariantTag::V1), ClassGrouping::five_class);
    Eigen::MatrixXi ea(5, 5);
    ea << 24, 16, 0, 4, 0, 16, 40, 8, 12, 8, 0, 8, 8, 4, 0, 4, 12, 4, 24, 4, 0, 8, 0, 4, 8;
    c.expect(a.counts == ea, "five-class matrix");
    c.expect(a.row_sums() == (Eigen::VectorXi(5) << 44, 84, 20, 48, 20).finished(), "five-class row sums");
    c.expect(a.diagonal() == (Eigen::VectorXi(5) << 24, 40, 8, 24, 8).finished(), "five-class diagonal");
    const auto b = class_transition_counts(Variant(VariantTag::V1), ClassGrouping::three_class);
    Eigen::MatrixXi eb(3, 3);
    eb << 96, 24, 8, 24, 40, 4, 8, 4, 8;
    c.expect(b.counts == eb, "three-class matrix");
    c.expect(b.row_sums() == (Eigen::VectorXi(3) << 128, 68, 20).finished(), "three-class row sums");
    c.expect(b.diagonal() == (Eigen::VectorXi(3) << 96, 40, 8).finished(), "three-class diagonal");
    const auto doc = nlohmann::json::parse(statistics_report_json());
    const auto& tally = doc["mutation_tally"];
    c.expect(tally["claimed_unchanged"] == 76 && tally["claimed_total"] == 168, "claim missing from report");
    c.expect(tally["claim_consistent"] == false, "76 of 168 claim not flagged");
    c.notes.push_back("table diagonal " + tally["unchanged"].dump() + " of " + tally["total"].dump() +
                      "; claim of 76 of 168 flagged as inconsistent");
    report(7, "mutation class-transition tables", c);
}

void criterion8() {
    Check c;
    std::vector<int> eoc;
    for (const Rule& r : edge_of_chaos(Variant(VariantTag::V1))) eoc.push_back(r.number());
    int fixed = 0;
    for (const Rule& r : arity2_rules()) fixed += classify(r, Variant(VariantTag::V1)).is_fixed_point();
    c.expect(eoc.size() == 16, std::to_string(eoc.size()) + " edge-of-chaos rules");
    c.expect(fixed == 44, std::to_string(fixed) + " fixed-point rules");
    for (int n : {5, 9, 32, 36})
        c.expect(std::find(eoc.begin(), eoc.end(), n) != eoc.end(), "R" + std::to_string(n) + " missing");
    for (int n : {5, 9}) {
        const auto nb = neighbors(Rule::from_number(n));
        const bool adjacent = std::find(nb.begin(), nb.end(), Rule::from_number(8)) != nb.end();
        c.expect(adjacent && class_of(8, Variant(VariantTag::V1)) == "4C" &&
                     classify(Rule::from_number(n), Variant(VariantTag::V1)).is_fixed_point(),
                 "witness R" + std::to_string(n) + " -> R8");
    }
    report(8, "edge of chaos (16 of 44)", c);
}

void criterion9() {
    Check c;
    using Q = boost::rational<int>;
    const auto s = [](int n) { return state_robustness_rule_mutation(Rule::from_number(n)).exact(); };
    c.expect(s(25) == Q(3, 8), "R25");
    c.expect(s(16) == Q(1, 2) && s(22) == Q(1, 2), "R16/R22");
    for (int n : {9, 73, 72, 78}) c.expect(s(n) == Q(15, 16), "R" + std::to_string(n));
    const auto h = robustness_distribution(RobustnessMetric::state_vs_rule_mutation);
    std::vector<int> counts;
    for (const auto& b : h.bins) counts.push_back(b.count);
    c.expect(counts == std::vector<int>{15, 21, 16, 11, 9}, "distribution bins");
    c.expect(h.bins.back().rules == std::vector<int>{9, 51, 53, 54, 71, 72, 73, 78, 80}, "superstable set");
    const auto t = class_robustness_crosstab();
    const std::array<std::array<int, 5>, 3> want{{{4, 11, 12, 10, 11}, {9, 7, 4, 4, 1}, {4, 0, 4, 0, 0}}};
    c.expect(t.counts == want, "class by robustness counts");
    c.expect(t.column_totals == std::array<int, 5>{17, 18, 20, 14, 12}, "column totals");
    int variant = 0;
    for (const Rule& r : all_rules())
        for (auto m : {RobustnessMetric::class_vs_rule_mutation, RobustnessMetric::state_vs_rule_mutation,
                       RobustnessMetric::state_vs_init_perturbation})
            for (auto sc : {MutationScope::all_rules, MutationScope::arity2_only}) {
                if (r.arity() < 2 && sc == MutationScope::arity2_only) continue;
                if (robustness(r, m, sc).exact() != robustness(t12(r), m, sc).exact()) ++variant;
            }
    c.expect(variant == 0, std::to_string(variant) + " scores change under gene swap");
    c.notes.push_back("bins over 72 rules with coupled neighbours: " + h.edges_description());
    c.notes.push_back("class table over 81 rules with full neighbourhoods");
    report(9, "robustness scores, distribution, superstable set, class table", c);
}

void criterion10() {
    Check c;
    const auto f = stats::fisher_exact({27, 21, 28, 5});
    const double rel = std::abs(f.p_value - 0.00797) / 0.00797;
    c.expect(rel <= 0.05, "Fisher p " + std::to_string(f.p_value) + " vs 0.00797");
    c.notes.push_back("Fisher p = " + f.p_exact.str() + " = " + std::to_string(f.p_value));
    c.expect(stats::fisher_exact({5, 0, 0, 5}).p_exact == stats::Rational(2, 252), "[[5,0],[0,5]] != 2/252");

    const auto corr = [](const std::vector<Rule>& rules, MutationScope scope) {
        std::vector<double> x, y;
        for (const Rule& r : rules) {
            x.push_back(state_robustness_init_perturbation(r).fraction());
            y.push_back(state_robustness_rule_mutation(r, scope).fraction());
        }
        return std::pair{stats::pearson(x, y), stats::spearman(x, y)};
    };
    const auto [p72, s72] = corr(arity2_rules(), MutationScope::arity2_only);
    c.expect(std::abs(p72.p_value - 0.13) <= 0.03,
             "Pearson p on 72 rules = " + std::to_string(p72.p_value) + " (expected 0.13 +- 0.03)");
    c.expect(std::abs(s72.p_value - 0.06) <= 0.03,
             "Spearman p on 72 rules = " + std::to_string(s72.p_value) + " (expected 0.06 +- 0.03)");
    c.notes.push_back("72 rules: Pearson p " + std::to_string(p72.p_value) + ", Spearman p " +
                      std::to_string(s72.p_value));
    const auto [p81, s81] = corr(all_rules(), MutationScope::all_rules);
    c.notes.push_back("81 rules, full neighbourhoods (not the gated dataset): Pearson p " +
                      std::to_string(p81.p_value) + ", Spearman p " + std::to_string(s81.p_value));
    const auto o = stats::odds_ratio({27, 21, 28, 5});
    c.notes.push_back("sample odds ratio " + std::to_string(o.estimate) + " [" + std::to_string(*o.ci_lower) + ", " +
                      std::to_string(*o.ci_upper) + "], reference 9 [1.89, 42.78] does not follow");
    report(10, "statistics (Fisher, correlations)", c);
}

void criterion11() {
    Check c;
    int combos = 0;
    for (const Rule& r : all_rules()) {
        for (const Variant& base : all_variants()) {
            for (UpdateMode m : {UpdateMode::synchronous, UpdateMode::x_first, UpdateMode::y_first}) {
                const Variant v = base.with_mode(m);
                const int mode = m == UpdateMode::synchronous ? 0 : m == UpdateMode::x_first ? 1 : 2;
                const auto set = attractor_set(r, v);
                const auto g = oracle::analyse(r.number(), static_cast<int>(v.tag()), mode);
                ++combos;
                const std::string where = "R" + std::to_string(r.number()) + " " + v.name();
                std::vector<int> masks;
                for (const auto& a : set.attractors) masks.push_back(a.mask());
                std::sort(masks.begin(), masks.end());
                c.expect(masks == g.cycle_masks, "attractors " + where);
                for (NetState s : kAllStates) {
                    c.expect(set.reached_from(s).mask() == g.reached_mask[s.index], "basin " + where);
                    c.expect(set.transient[s.index] == g.tail[s.index], "transient " + where);
                    c.expect(set.transient[s.index] <= 4, "transient > 4 " + where);
                }
                const auto t = transition_matrix(r, v);
                c.expect(is_deterministic(t), "not row-stochastic " + where);
                c.expect(is_permutation(t) == (set.transient_state_count() == 0), "permutation criterion " + where);
            }
        }
    }
    for (const Rule& r : arity2_rules()) {
        const auto cls = classify(r, Variant(VariantTag::V1));
        const auto p = sign_predicates(r);
        if (cls.label() == ClassLabel::M) c.expect(p.bc_positive, "M without bc>0 at R" + std::to_string(r.number()));
        if (cls.label() == ClassLabel::C4) c.expect(p.bc_negative, "4C without bc<0 at R" + std::to_string(r.number()));
    }
    c.notes.push_back(std::to_string(combos) + " rule/variant/mode combinations against the functional-graph oracle");
    report(11, "property suite", c);
}

std::string read(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void criterion12() {
    Check c;
    const auto base = std::filesystem::path(MPN_SCRATCH_DIR) / "acceptance";
    std::filesystem::remove_all(base);
    const auto m1 = run_all(base / "first");
    run_all(base / "second");
    const auto a = read(base / "first" / "manifest.json");
    const auto b = read(base / "second" / "manifest.json");
    c.expect(!a.empty() && a == b, "manifests differ");
    c.expect(m1.entries.size() >= 10, "only " + std::to_string(m1.entries.size()) + " artifacts");
    c.notes.push_back(std::to_string(m1.entries.size()) + " artifacts, manifest sha256 " + sha256_hex(a));
    report(12, "determinism of run_all", c);
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (12 - failures) << " of 12 criteria pass (" << ms << " ms)\n";
    return failures == 0 ? 0 : 1;
}
