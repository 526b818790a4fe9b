#include "mpn/rulespace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mpn {

std::vector<Rule> neighbors(const Rule& rule) {
    std::vector<Rule> out;
    const auto w = rule.weights();
    for (std::size_t i = 0; i < 4; ++i) {
        for (int delta : {-1, 1}) {
            auto m = w;
            m[i] += delta;
            if (m[i] < -1 || m[i] > 1) continue;
            out.emplace_back(m[0], m[1], m[2], m[3]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rule> neighbors(const Rule& rule, MutationScope scope) {
    auto out = neighbors(rule);
    if (scope == MutationScope::arity2_only) std::erase_if(out, [](const Rule& r) { return r.arity() != 2; });
    return out;
}

int degree(const Rule& rule) noexcept {
    int deg = 0;
    for (int w : rule.weights()) deg += w == 0 ? 2 : 1;
    return deg;
}

RuleGraph::RuleGraph() {
    for (const Rule& r : all_rules())
        for (const Rule& n : neighbors(r))
            if (r.number() < n.number()) edges_.push_back({r.number(), n.number()});
    std::sort(edges_.begin(), edges_.end());
}

void RuleGraph::set_attribute(int rule, const std::string& key, std::string value) {
    auto& attrs = attributes_.at(static_cast<std::size_t>(rule));
    for (auto& [k, v] : attrs) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    attrs.emplace_back(key, std::move(value));
}

std::optional<std::string> RuleGraph::attribute(int rule, std::string_view key) const {
    for (const auto& [k, v] : attributes(rule))
        if (k == key) return v;
    return std::nullopt;
}

RuleGraph make_rule_graph() {
    RuleGraph graph;
    for (const Rule& r : all_rules()) {
        const int n = r.number();
        graph.set_attribute(n, "a", std::to_string(r.a()));
        graph.set_attribute(n, "b", std::to_string(r.b()));
        graph.set_attribute(n, "c", std::to_string(r.c()));
        graph.set_attribute(n, "d", std::to_string(r.d()));
        graph.set_attribute(n, "arity", std::to_string(r.arity()));
        for (const Variant& v : all_variants()) {
            if (v.tag() == VariantTag::V7) continue;
            graph.set_attribute(n, "class_" + v.name(), classify(r, v).to_string());
        }
    }
    return graph;
}

GraphFormat parse_graph_format(std::string_view text) {
    if (text == "dot") return GraphFormat::dot;
    if (text == "csv") return GraphFormat::csv;
    if (text == "json") return GraphFormat::json;
    throw std::invalid_argument("unknown graph format '" + std::string(text) + "'");
}

std::string export_graph(const RuleGraph& graph, GraphFormat format) {
    std::ostringstream out;
    switch (format) {
        case GraphFormat::dot: {
            out << "graph rulespace {\n  node [shape=circle];\n";
            for (int n = 1; n <= kRuleCount; ++n) {
                out << "  " << n << " [label=\"" << n << "\"";
                for (const auto& [k, v] : graph.attributes(n)) out << ", " << k << "=\"" << v << "\"";
                out << "];\n";
            }
            for (const auto& e : graph.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
            out << "}\n";
            break;
        }
        case GraphFormat::csv: {
            out << "source,target\n";
            for (const auto& e : graph.edges()) out << e.u << ',' << e.v << '\n';
            break;
        }
        case GraphFormat::json: {
            nlohmann::ordered_json doc;
            doc["nodes"] = nlohmann::ordered_json::array();
            for (int n = 1; n <= kRuleCount; ++n) {
                nlohmann::ordered_json node;
                node["rule"] = n;
                for (const auto& [k, v] : graph.attributes(n)) node[k] = v;
                doc["nodes"].push_back(std::move(node));
            }
            doc["edges"] = nlohmann::ordered_json::array();
            for (const auto& e : graph.edges()) doc["edges"].push_back({e.u, e.v});
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

std::vector<RuleEdge> parse_edge_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "source,target")
        throw std::invalid_argument("edge list must start with the header 'source,target'");
    std::vector<RuleEdge> edges;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("malformed edge line '" + line + "'");
        try {
            edges.push_back({std::stoi(line.substr(0, comma)), std::stoi(line.substr(comma + 1))});
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed edge line '" + line + "'");
        }
    }
    return edges;
}

std::vector<std::string> grouping_labels(ClassGrouping grouping) {
    if (grouping == ClassGrouping::five_class) return {"F4", "F2", "M", "2C", "4C"};
    return {"F", "2C+M", "4C"};
}

std::optional<int> group_index(const DynamicsClass& cls, ClassGrouping grouping) {
    const ClassLabel l = cls.label();
    if (grouping == ClassGrouping::five_class) {
        switch (l) {
            case ClassLabel::F4: return 0;
            case ClassLabel::F2: return 1;
            case ClassLabel::M: return 2;
            case ClassLabel::C2: return 3;
            case ClassLabel::C4: return 4;
            default: return std::nullopt;
        }
    }
    if (cls.is_fixed_point()) return 0;
    if (l == ClassLabel::M || l == ClassLabel::C2) return 1;
    if (l == ClassLabel::C4) return 2;
    return std::nullopt;
}

ClassTransitionTable class_transition_counts(const Variant& variant, ClassGrouping grouping, TallyMode mode) {
    ClassTransitionTable table;
    table.labels = grouping_labels(grouping);
    table.mode = mode;
    const auto k = static_cast<Eigen::Index>(table.labels.size());
    table.counts = Eigen::MatrixXi::Zero(k, k);

    std::array<std::optional<int>, kRuleCount + 1> group{};
    for (const Rule& r : all_rules()) group[r.number()] = group_index(classify(r, variant), grouping);

    for (const Rule& r : all_rules()) {
        for (const Rule& n : neighbors(r)) {
            const bool low = r.arity() < 2 || n.arity() < 2;
            if (low) ++table.low_arity_pairs;
            if (low && mode == TallyMode::arity2_directed) continue;
            const auto from = group[r.number()];
            const auto to = group[n.number()];
            if (!from || !to) {
                ++table.unclassified_pairs;
                continue;
            }
            ++table.counts(*from, *to);
        }
    }
    if (mode == TallyMode::published) {
        if (table.counts.unaryExpr([](int v) { return v % 2; }).any())
            throw std::logic_error("directed tally is not evenly divisible for the published convention");
        table.counts /= 2;
    }
    return table;
}

std::vector<Rule> edge_of_chaos(const Variant& variant) {
    std::vector<Rule> out;
    for (const Rule& r : all_rules()) {
        if (r.arity() != 2 || !classify(r, variant).is_fixed_point()) continue;
        const auto nb = neighbors(r);
        if (std::any_of(nb.begin(), nb.end(),
                        [&](const Rule& n) { return classify(n, variant).label() == ClassLabel::C4; }))
            out.push_back(r);
    }
    return out;
}

}  // namespace mpn
