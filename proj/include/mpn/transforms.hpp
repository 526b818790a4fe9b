#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpn/dynamics.hpp"

namespace mpn {

/// Gene swap: relabel the nodes, (a,b,c,d) -> (d,c,b,a).
Rule t12(const Rule& rule) noexcept;
/// Gauge flip of both cross weights, (a,b,c,d) -> (a,-b,-c,d). A dynamics symmetry of V1 only.
Rule gauge(const Rule& rule) noexcept;

struct TransformSet {
    bool gene_swap = false;
    bool gauge = false;

    std::string to_string() const;  // "{}", "{T12}", "{G}", "{T12,G}"
    friend bool operator==(const TransformSet&, const TransformSet&) = default;
};

struct EquivalenceClass {
    int canonical = 0;              // minimum member rule number
    std::vector<int> members;       // ascending
    TransformSet generators;
};

/// Orbit of a rule under the group generated by `generators`, ascending rule number.
std::vector<Rule> orbit(const Rule& rule, TransformSet generators);

/// Partitions `rules` into orbits. The set must be closed under the generators
/// (std::invalid_argument otherwise). Classes are ordered by canonical rule number.
std::vector<EquivalenceClass> reduce(std::span<const Rule> rules, TransformSet generators);

/// As above, but refuses the gauge generator unless `variant` is V1, where it is a symmetry.
std::vector<EquivalenceClass> reduce(std::span<const Rule> rules, TransformSet generators,
                                     const Variant& variant);

std::vector<Rule> arity2_rules();     // the 72 coupled rules
std::vector<Rule> low_arity_rules();  // the 9 rules with b = c = 0

}  // namespace mpn
