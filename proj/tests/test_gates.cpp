#include <doctest.h>

#include "mpn/gates.hpp"
#include "mpn/transforms.hpp"
#include "oracles.hpp"

using namespace mpn;

namespace {

std::string pair_name(int rule, VariantTag tag) {
    const auto [gx, gy] = node_gates(Rule::from_number(rule), Variant(tag));
    return std::string(gate_name(gx)) + "," + std::string(gate_name(gy));
}

}  // namespace

TEST_SUITE("gates") {

TEST_CASE("truth tables round-trip through the 16 gates") {
    for (unsigned bits = 0; bits < 16; ++bits) {
        const auto g = static_cast<Gate>(bits);
        CHECK(identify_gate(truth_table(g)) == g);
        CHECK(parse_gate(gate_name(g)) == g);
    }
    CHECK_FALSE(parse_gate("IMP").has_value());
    CHECK(truth_table(Gate::XImp) == TruthTable{true, true, false, true});
    CHECK(truth_table(Gate::YImp) == TruthTable{true, false, true, true});
    CHECK(gate_name(Gate::XAndNotY) == "xANDnoty");
    CHECK(gate_name(Gate::NotXAndY) == "notxANDy");
}

TEST_CASE("node truth tables follow the oracle update") {
    for (const Rule& r : all_rules()) {
        const auto w = oracle::weights_of_number(r.number());
        for (int t = 1; t <= 7; ++t) {
            const Variant v(static_cast<VariantTag>(t));
            const auto tx = node_truth_table(r, v, Node::x);
            const auto ty = node_truth_table(r, v, Node::y);
            for (int s = 0; s < 4; ++s) {
                const int next = oracle::next_index(w, t, 0, s);
                CHECK(tx[s] == ((next & 2) != 0));
                CHECK(ty[s] == ((next & 1) != 0));
            }
        }
    }
    CHECK_THROWS_AS(node_truth_table(Rule::from_number(8), Variant(VariantTag::V1, UpdateMode::x_first), Node::x),
                    std::invalid_argument);
}

TEST_CASE("V1 gates are zero- or one-input for every coupled rule") {
    for (const Rule& r : arity2_rules()) {
        const auto [gx, gy] = node_gates(r, Variant(VariantTag::V1));
        CHECK(canalization(gx) != Canalization::two_input);
        CHECK(canalization(gy) != Canalization::two_input);
        CHECK(canalization(gx) != Canalization::partially_canalizing);
        CHECK(canalization(gy) != Canalization::partially_canalizing);
    }
}

TEST_CASE("no XOR or NXOR in any variant") {
    for (const Rule& r : all_rules()) {
        for (const Variant& v : all_variants()) {
            const auto [gx, gy] = node_gates(r, v);
            for (Gate g : {gx, gy}) {
                CHECK(g != Gate::Xor);
                CHECK(g != Gate::Nxor);
            }
        }
    }
}

TEST_CASE("sample gate pairs") {
    CHECK(pair_name(1, VariantTag::V1) == "noty,notx");
    CHECK(pair_name(1, VariantTag::V2) == "NAND,NAND");
    CHECK(pair_name(1, VariantTag::V3) == "NOR,NOR");
    CHECK(pair_name(32, VariantTag::V2) == "noty,T");
    CHECK(pair_name(32, VariantTag::V3) == "noty,F");
    CHECK(pair_name(25, VariantTag::V2) == "xIMP,yIMP");
    CHECK(pair_name(81, VariantTag::V5) == "T,T");
    CHECK(pair_name(8, VariantTag::V4) == "F,OR");
}

TEST_CASE("equations and canalization names") {
    CHECK(gate_equation(Node::x, Gate::NotY) == "x'=NOT(y)");
    CHECK(gate_equation(Node::y, Gate::X) == "y'=x");
    CHECK(gate_equation(Node::y, Gate::Or) == "y'=OR");
    CHECK(to_string(canalization(Gate::XImp)) == "partially-canalizing");
    CHECK(to_string(canalization(Gate::True)) == "zero-input");
}

TEST_CASE("M rules have bc > 0 and 4C rules have bc < 0 under V1") {
    for (const Rule& r : arity2_rules()) {
        const auto cls = classify(r, Variant(VariantTag::V1));
        const auto p = sign_predicates(r);
        if (cls.label() == ClassLabel::M) CHECK(p.bc_positive);
        if (cls.label() == ClassLabel::C4) CHECK(p.bc_negative);
    }
}

}  // TEST_SUITE
