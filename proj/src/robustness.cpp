#include "mpn/robustness.hpp"

#include <sstream>
#include <stdexcept>

#include "mpn/transforms.hpp"

namespace mpn {

namespace {

using Q = boost::rational<int>;

const Variant kClassVariant{VariantTag::V1};
const Variant kStateVariant{VariantTag::V4};

std::string fraction_text(const Q& q) {
    return std::to_string(q.numerator()) + (q.denominator() == 1 ? "" : "/" + std::to_string(q.denominator()));
}

HistogramBin bin(std::string label, Q lo, bool lo_inc, Q hi, bool hi_inc) {
    HistogramBin b;
    b.label = std::move(label);
    b.lower = lo;
    b.lower_inclusive = lo_inc;
    b.upper = hi;
    b.upper_inclusive = hi_inc;
    return b;
}

}  // namespace

std::string to_string(RobustnessMetric metric) {
    switch (metric) {
        case RobustnessMetric::class_vs_rule_mutation: return "class-vs-rule-mutation";
        case RobustnessMetric::state_vs_rule_mutation: return "state-vs-rule-mutation";
        case RobustnessMetric::state_vs_init_perturbation: return "state-vs-init-perturbation";
    }
    return "";
}

RobustnessMetric parse_metric(std::string_view text) {
    if (text == "class" || text == "class-vs-rule-mutation") return RobustnessMetric::class_vs_rule_mutation;
    if (text == "state-rule" || text == "state-vs-rule-mutation") return RobustnessMetric::state_vs_rule_mutation;
    if (text == "state-init" || text == "state-vs-init-perturbation")
        return RobustnessMetric::state_vs_init_perturbation;
    throw std::invalid_argument("unknown robustness metric '" + std::string(text) + "'");
}

RobustnessScore class_robustness(const Rule& rule) {
    const auto own = classify(rule, kClassVariant);
    RobustnessScore score{rule.number(), RobustnessMetric::class_vs_rule_mutation, 0, 0};
    for (const Rule& n : neighbors(rule)) {
        ++score.denominator;
        if (classify(n, kClassVariant) == own) ++score.numerator;
    }
    return score;
}

RobustnessScore state_robustness_rule_mutation(const Rule& rule, MutationScope scope) {
    RobustnessScore score{rule.number(), RobustnessMetric::state_vs_rule_mutation, 0, 0};
    const auto own = attractor_set(rule, kStateVariant);
    for (const Rule& n : neighbors(rule, scope)) {
        const auto mutated = attractor_set(n, kStateVariant);
        for (NetState s : kAllStates) {
            ++score.denominator;
            if (mutated.reached_from(s).mask() == own.reached_from(s).mask()) ++score.numerator;
        }
    }
    return score;
}

RobustnessScore state_robustness_init_perturbation(const Rule& rule, InitPairing pairing) {
    RobustnessScore score{rule.number(), RobustnessMetric::state_vs_init_perturbation, 0, 0};
    const auto attractors = attractor_set(rule, kStateVariant);
    for (NetState s : kAllStates) {
        for (unsigned bit : {2u, 1u}) {
            const NetState flipped{static_cast<std::uint8_t>(s.index ^ bit)};
            if (pairing == InitPairing::unordered_pairs && flipped.index < s.index) continue;
            ++score.denominator;
            if (attractors.basin[s.index] == attractors.basin[flipped.index]) ++score.numerator;
        }
    }
    return score;
}

RobustnessScore robustness(const Rule& rule, RobustnessMetric metric, MutationScope scope) {
    switch (metric) {
        case RobustnessMetric::class_vs_rule_mutation: return class_robustness(rule);
        case RobustnessMetric::state_vs_rule_mutation: return state_robustness_rule_mutation(rule, scope);
        case RobustnessMetric::state_vs_init_perturbation: return state_robustness_init_perturbation(rule);
    }
    throw std::invalid_argument("unknown robustness metric");
}

bool HistogramBin::contains(const Q& f) const {
    const bool above = lower_inclusive ? f >= lower : f > lower;
    const bool below = upper_inclusive ? f <= upper : f < upper;
    return above && below;
}

std::string RobustnessHistogram::edges_description() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < bins.size(); ++i) {
        const auto& b = bins[i];
        out << (i ? "; " : "") << b.label << ": " << (b.lower_inclusive ? "[" : "(") << fraction_text(b.lower) << ", "
            << fraction_text(b.upper) << (b.upper_inclusive ? "]" : ")");
    }
    return out.str();
}

int RobustnessHistogram::total() const {
    int t = 0;
    for (const auto& b : bins) t += b.count;
    return t;
}

std::vector<HistogramBin> default_bins(RobustnessMetric metric) {
    if (metric == RobustnessMetric::state_vs_rule_mutation) {
        return {bin("<0.69", Q(0), true, Q(7, 10), false), bin("0.70-0.79", Q(7, 10), true, Q(4, 5), false),
                bin("0.80-0.85", Q(4, 5), true, Q(7, 8), false), bin("0.875", Q(7, 8), true, Q(7, 8), true),
                bin(">0.875", Q(7, 8), false, Q(1), true)};
    }
    return {bin("<0.25", Q(0), true, Q(1, 4), false), bin("0.25-0.49", Q(1, 4), true, Q(1, 2), false),
            bin("0.50-0.74", Q(1, 2), true, Q(3, 4), false), bin("0.75-0.99", Q(3, 4), true, Q(1), false),
            bin("1", Q(1), true, Q(1), true)};
}

RobustnessHistogram robustness_distribution(RobustnessMetric metric, MutationScope scope,
                                            std::span<const Rule> rules) {
    RobustnessHistogram hist{metric, scope, default_bins(metric)};
    for (const Rule& r : rules) {
        const auto f = robustness(r, metric, scope).exact();
        for (auto& b : hist.bins) {
            if (b.contains(f)) {
                ++b.count;
                b.rules.push_back(r.number());
                break;
            }
        }
    }
    return hist;
}

RobustnessHistogram robustness_distribution(RobustnessMetric metric, MutationScope scope) {
    const auto rules = arity2_rules();
    return robustness_distribution(metric, scope, rules);
}

int v1_class_group(const Rule& rule) {
    const auto cls = classify(rule, kClassVariant);
    if (cls.is_fixed_point()) return 0;
    if (cls.label() == ClassLabel::M || cls.label() == ClassLabel::C2) return 1;
    if (cls.label() == ClassLabel::C4) return 2;
    return -1;
}

ClassRobustnessCrossTab class_robustness_crosstab() {
    ClassRobustnessCrossTab tab;
    tab.columns = {bin("<=0.7", Q(0), true, Q(7, 10), true), bin("0.71-0.76", Q(7, 10), false, Q(77, 100), false),
                   bin("0.79-0.82", Q(77, 100), true, Q(821, 1000), false),
                   bin("0.821-0.88", Q(821, 1000), true, Q(9, 10), false), bin(">=0.9", Q(9, 10), true, Q(1), true)};
    const Q cut(821, 1000);
    for (const Rule& r : all_rules()) {
        const int group = v1_class_group(r);
        if (group < 0) throw std::logic_error("V1 class outside the fixed/2C-M/4C grouping");
        const auto f = state_robustness_rule_mutation(r, MutationScope::all_rules).exact();
        for (std::size_t c = 0; c < tab.columns.size(); ++c) {
            if (!tab.columns[c].contains(f)) continue;
            ++tab.counts[static_cast<std::size_t>(group)][c];
            ++tab.column_totals[c];
            tab.columns[c].rules.push_back(r.number());
            ++tab.columns[c].count;
            break;
        }
        ++tab.quadrants[group == 0 ? 0 : 1][f >= cut ? 1 : 0];
    }
    return tab;
}

}  // namespace mpn
