#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "mpn/dynamics.hpp"

namespace mpn {

/// Which rules count as point-mutation neighbours.
enum class MutationScope { all_rules, arity2_only };

/// Rules at Hamming distance 1: one weight moved by +-1 (never -1 <-> +1), ascending.
std::vector<Rule> neighbors(const Rule& rule);
std::vector<Rule> neighbors(const Rule& rule, MutationScope scope);
/// 2 per zero weight plus 1 per nonzero weight.
int degree(const Rule& rule) noexcept;

struct RuleEdge {
    int u = 0;  // u < v
    int v = 0;
    friend auto operator<=>(const RuleEdge&, const RuleEdge&) = default;
};

/// The 81-node mutation graph with ordered string attributes per node.
class RuleGraph {
public:
    using Attributes = std::vector<std::pair<std::string, std::string>>;

    RuleGraph();

    const std::vector<RuleEdge>& edges() const noexcept { return edges_; }
    /// Inserts or overwrites; insertion order is kept for export.
    void set_attribute(int rule, const std::string& key, std::string value);
    const Attributes& attributes(int rule) const { return attributes_.at(static_cast<std::size_t>(rule)); }
    std::optional<std::string> attribute(int rule, std::string_view key) const;

private:
    std::vector<RuleEdge> edges_;
    std::array<Attributes, kRuleCount + 1> attributes_;
};

/// Topology plus weights, arity and the synchronous V1..V6 classes of every rule.
RuleGraph make_rule_graph();

enum class GraphFormat { dot, csv, json };
/// Throws std::invalid_argument for anything but "dot", "csv", "json".
GraphFormat parse_graph_format(std::string_view text);
/// Deterministic export. CSV is the edge list "source,target".
std::string export_graph(const RuleGraph& graph, GraphFormat format);
/// Reads the CSV edge list back; throws std::invalid_argument on malformed input.
std::vector<RuleEdge> parse_edge_csv(std::string_view text);

enum class ClassGrouping { five_class, three_class };

/// How ordered (rule, neighbour) pairs are tallied.
///  published: every rule takes part under its own class (low-arity rules included) and
///             the directed-pair counts are halved; this reproduces the V1 tables.
///  arity2_directed: only pairs with both endpoints of arity 2, counted once per direction;
///             pairs touching a low-arity rule go to the sidecar tally.
enum class TallyMode { published, arity2_directed };

struct ClassTransitionTable {
    std::vector<std::string> labels;
    Eigen::MatrixXi counts;   // counts(i, j): from labels[i] to labels[j]
    int low_arity_pairs = 0;  // directed pairs with an endpoint of arity <= 1
    int unclassified_pairs = 0;  // directed pairs whose class lies outside the grouping
    TallyMode mode = TallyMode::published;

    Eigen::VectorXi row_sums() const { return counts.rowwise().sum(); }
    Eigen::VectorXi diagonal() const { return counts.diagonal(); }
};

std::vector<std::string> grouping_labels(ClassGrouping grouping);
/// Group of a class under the grouping, or nullopt when the class falls outside it.
std::optional<int> group_index(const DynamicsClass& cls, ClassGrouping grouping);

ClassTransitionTable class_transition_counts(const Variant& variant, ClassGrouping grouping,
                                             TallyMode mode = TallyMode::published);

/// Fixed-point rules of arity 2 with at least one neighbour classified 4C.
std::vector<Rule> edge_of_chaos(const Variant& variant);

}  // namespace mpn
