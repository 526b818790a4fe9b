#include "mpn/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mpn {

Rule t12(const Rule& rule) noexcept { return Rule(rule.d(), rule.c(), rule.b(), rule.a()); }

Rule gauge(const Rule& rule) noexcept { return Rule(rule.a(), -rule.b(), -rule.c(), rule.d()); }

std::string TransformSet::to_string() const {
    if (gene_swap && gauge) return "{T12,G}";
    if (gene_swap) return "{T12}";
    if (gauge) return "{G}";
    return "{}";
}

std::vector<Rule> orbit(const Rule& rule, TransformSet generators) {
    // t12 and gauge commute and are involutions: the group has at most four elements
    std::set<Rule> members{rule};
    if (generators.gene_swap) members.insert(t12(rule));
    if (generators.gauge) members.insert(gauge(rule));
    if (generators.gene_swap && generators.gauge) members.insert(t12(gauge(rule)));
    return {members.begin(), members.end()};
}

std::vector<EquivalenceClass> reduce(std::span<const Rule> rules, TransformSet generators) {
    const std::set<Rule> universe(rules.begin(), rules.end());
    std::set<Rule> assigned;
    std::vector<EquivalenceClass> classes;
    for (const Rule& rule : universe) {
        if (assigned.contains(rule)) continue;
        EquivalenceClass cls;
        cls.generators = generators;
        for (const Rule& member : orbit(rule, generators)) {
            if (!universe.contains(member))
                throw std::invalid_argument("rule set is not closed under " + generators.to_string());
            assigned.insert(member);
            cls.members.push_back(member.number());
        }
        cls.canonical = cls.members.front();
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<EquivalenceClass> reduce(std::span<const Rule> rules, TransformSet generators,
                                     const Variant& variant) {
    if (generators.gauge && variant.tag() != VariantTag::V1)
        throw std::invalid_argument("the gauge transformation is a symmetry of V1 only");
    return reduce(rules, generators);
}

std::vector<Rule> arity2_rules() {
    std::vector<Rule> out;
    for (const Rule& r : all_rules())
        if (r.arity() == 2) out.push_back(r);
    return out;
}

std::vector<Rule> low_arity_rules() {
    std::vector<Rule> out;
    for (const Rule& r : all_rules())
        if (r.arity() < 2) out.push_back(r);
    return out;
}

}  // namespace mpn
