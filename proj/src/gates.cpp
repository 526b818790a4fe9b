#include "mpn/gates.hpp"

#include <stdexcept>

namespace mpn {

namespace {

constexpr std::array<std::string_view, 16> kNames{
    "F",    "AND",  "xANDnoty", "x",    "notxANDy", "y",    "XOR",  "OR",
    "NOR",  "NXOR", "noty",     "yIMP", "notx",     "xIMP", "NAND", "T",
};

}  // namespace

TruthTable node_truth_table(const Rule& rule, const Variant& variant, Node node) {
    if (!variant.synchronous()) throw std::invalid_argument("gate tables are defined for synchronous updates");
    TruthTable table{};
    for (NetState s : kAllStates) {
        const NetState next = step(rule, variant, s);
        table[s.index] = node == Node::x ? next.x_high() : next.y_high();
    }
    return table;
}

Gate identify_gate(const TruthTable& table) noexcept {
    unsigned bits = 0;
    for (bool out : table) bits = (bits << 1) | (out ? 1u : 0u);
    return static_cast<Gate>(bits);
}

TruthTable truth_table(Gate gate) noexcept {
    const auto bits = static_cast<unsigned>(gate);
    return {(bits & 8u) != 0, (bits & 4u) != 0, (bits & 2u) != 0, (bits & 1u) != 0};
}

std::string_view gate_name(Gate gate) noexcept { return kNames[static_cast<std::size_t>(gate)]; }

std::optional<Gate> parse_gate(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<Gate>(i);
    return std::nullopt;
}

std::string gate_equation(Node node, Gate gate) {
    const std::string lhs = node == Node::x ? "x'=" : "y'=";
    switch (gate) {
        case Gate::X: return lhs + "x";
        case Gate::Y: return lhs + "y";
        case Gate::NotX: return lhs + "NOT(x)";
        case Gate::NotY: return lhs + "NOT(y)";
        case Gate::True: return lhs + "True";
        case Gate::False: return lhs + "False";
        default: return lhs + std::string(gate_name(gate));
    }
}

Canalization canalization(Gate gate) noexcept {
    switch (gate) {
        case Gate::False:
        case Gate::True: return Canalization::zero_input;
        case Gate::X:
        case Gate::Y:
        case Gate::NotX:
        case Gate::NotY: return Canalization::one_input;
        case Gate::XImp:
        case Gate::YImp: return Canalization::partially_canalizing;
        default: return Canalization::two_input;
    }
}

std::string_view to_string(Canalization c) noexcept {
    switch (c) {
        case Canalization::zero_input: return "zero-input";
        case Canalization::one_input: return "one-input";
        case Canalization::partially_canalizing: return "partially-canalizing";
        case Canalization::two_input: return "two-input";
    }
    return "";
}

std::pair<Gate, Gate> node_gates(const Rule& rule, const Variant& variant) {
    return {identify_gate(node_truth_table(rule, variant, Node::x)),
            identify_gate(node_truth_table(rule, variant, Node::y))};
}

SignPredicates sign_predicates(const Rule& rule) noexcept {
    const int bc = rule.b() * rule.c();
    return {bc > 0, bc < 0, (rule.a() < 0 && rule.b() == 0) || (rule.d() < 0 && rule.c() == 0)};
}

}  // namespace mpn
