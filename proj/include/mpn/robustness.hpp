#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "mpn/dynamics.hpp"
#include "mpn/rulespace.hpp"

namespace mpn {

enum class RobustnessMetric { class_vs_rule_mutation, state_vs_rule_mutation, state_vs_init_perturbation };

std::string to_string(RobustnessMetric metric);
/// "class", "state-rule", "state-init"; throws std::invalid_argument.
RobustnessMetric parse_metric(std::string_view text);

/// numerator out of denominator trials kept the compared outcome unchanged.
struct RobustnessScore {
    int rule = 0;
    RobustnessMetric metric = RobustnessMetric::class_vs_rule_mutation;
    int numerator = 0;
    int denominator = 0;

    boost::rational<int> exact() const { return {numerator, denominator}; }
    double fraction() const noexcept { return static_cast<double>(numerator) / denominator; }
};

/// Share of neighbours (all 81 rules eligible) whose V1 class equals the rule's.
RobustnessScore class_robustness(const Rule& rule);

/// Over (initial state, neighbour) pairs under V4: share whose reached attractor, compared
/// as a set of states, equals the one the rule itself reaches. Denominator 4*|neighbours|.
RobustnessScore state_robustness_rule_mutation(const Rule& rule,
                                               MutationScope scope = MutationScope::arity2_only);

enum class InitPairing { unordered_pairs, directed_flips };

/// Under V4: share of Hamming-1 initial-state pairs reaching the same attractor.
RobustnessScore state_robustness_init_perturbation(const Rule& rule,
                                                   InitPairing pairing = InitPairing::unordered_pairs);

RobustnessScore robustness(const Rule& rule, RobustnessMetric metric,
                           MutationScope scope = MutationScope::arity2_only);

struct HistogramBin {
    std::string label;
    boost::rational<int> lower;  // bin holds lower <op> f <op> upper per the flags
    boost::rational<int> upper;
    bool lower_inclusive = true;
    bool upper_inclusive = false;
    int count = 0;
    std::vector<int> rules;

    bool contains(const boost::rational<int>& f) const;
};

struct RobustnessHistogram {
    RobustnessMetric metric;
    MutationScope scope;
    std::vector<HistogramBin> bins;

    std::string edges_description() const;
    int total() const;
};

/// Bin edges used for each metric. State-vs-rule-mutation: f<7/10, [7/10,4/5), [4/5,7/8),
/// f=7/8, f>7/8 (the last bin is the superstable set). Other metrics use quarters.
std::vector<HistogramBin> default_bins(RobustnessMetric metric);

/// Histogram over `rules` (default: the 72 arity-2 rules).
RobustnessHistogram robustness_distribution(RobustnessMetric metric,
                                            MutationScope scope = MutationScope::arity2_only);
RobustnessHistogram robustness_distribution(RobustnessMetric metric, MutationScope scope,
                                            std::span<const Rule> rules);

/// Cross-tabulation of V1 class group (fixed point, 2C or M, 4C) against robustness to rule
/// mutation over all 81 rules with full neighbourhoods, plus the fixed/non-fixed x
/// low/high (cut 0.821) quadrant table.
struct ClassRobustnessCrossTab {
    std::array<std::string, 3> row_labels{"fixed-pt", "2C or M", "4-cycle"};
    std::vector<HistogramBin> columns;
    std::array<std::array<int, 5>, 3> counts{};
    std::array<int, 5> column_totals{};
    /// {{fixed & low, fixed & high}, {non-fixed & low, non-fixed & high}}
    std::array<std::array<int, 2>, 2> quadrants{};
};

ClassRobustnessCrossTab class_robustness_crosstab();

/// 0 = fixed point (any Fk), 1 = 2C or M, 2 = 4C; -1 otherwise.
int v1_class_group(const Rule& rule);

}  // namespace mpn
