#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "mpn/dynamics.hpp"

namespace mpn {

/// The 16 two-input Boolean functions. The enumerator value is the truth table read as
/// a 4-bit number with f(S0) as the most significant bit (S0 = (lo,lo) ... S3 = (hi,hi)).
enum class Gate : std::uint8_t {
    False = 0b0000,
    And = 0b0001,
    XAndNotY = 0b0010,
    X = 0b0011,
    NotXAndY = 0b0100,
    Y = 0b0101,
    Xor = 0b0110,
    Or = 0b0111,
    Nor = 0b1000,
    Nxor = 0b1001,
    NotY = 0b1010,
    YImp = 0b1011,  // y implies x
    NotX = 0b1100,
    XImp = 0b1101,  // x implies y
    Nand = 0b1110,
    True = 0b1111,
};

/// Output level (true = high) for inputs S0..S3.
using TruthTable = std::array<bool, 4>;

enum class Node { x, y };

enum class Canalization { zero_input, one_input, partially_canalizing, two_input };

TruthTable node_truth_table(const Rule& rule, const Variant& variant, Node node);
Gate identify_gate(const TruthTable& table) noexcept;
TruthTable truth_table(Gate gate) noexcept;

/// ASCII names as used in the gate tables: F, T, AND, OR, NAND, NOR, XOR, NXOR, x, y,
/// notx, noty, xANDnoty, notxANDy, xIMP, yIMP.
std::string_view gate_name(Gate gate) noexcept;
std::optional<Gate> parse_gate(std::string_view name) noexcept;
/// Equation form, e.g. "x'=NOT(y)" or "y'=x"; two-input gates fall back to the gate name.
std::string gate_equation(Node node, Gate gate);

Canalization canalization(Gate gate) noexcept;
std::string_view to_string(Canalization c) noexcept;

/// Gates of the x and y updates for a synchronous variant.
std::pair<Gate, Gate> node_gates(const Rule& rule, const Variant& variant);

struct SignPredicates {
    bool bc_positive = false;             // b*c > 0
    bool bc_negative = false;             // b*c < 0
    bool self_negation_isolated = false;  // (a<0 and b=0) or (d<0 and c=0)
};

SignPredicates sign_predicates(const Rule& rule) noexcept;

}  // namespace mpn
