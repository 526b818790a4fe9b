#include "mpn/dynamics.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mpn {

namespace {

bool is_weight(int w) { return w >= -1 && w <= 1; }

int threshold_node(const Variant& variant, int self, int weighted_sum) {
    const int lo = low_level(variant.convention());
    if (variant.tag() == VariantTag::V7) {
        // x' = Step(x + Sign(sum)), Sign(0) = 0, Step(0) = 0
        const int sign = (weighted_sum > 0) - (weighted_sum < 0);
        return self + sign > 0 ? 1 : 0;
    }
    if (const auto eps = variant.epsilon()) {
        const double shifted = variant.tag() == VariantTag::V2 ? weighted_sum + *eps
                                                               : weighted_sum - *eps;
        return shifted > 0.0 ? 1 : lo;
    }
    if (weighted_sum > 0) return 1;
    if (weighted_sum < 0) return lo;
    switch (variant.zero_policy()) {
        case ZeroPolicy::hold: return self;
        case ZeroPolicy::high: return 1;
        case ZeroPolicy::low: return lo;
    }
    return self;
}

int update_x(const Rule& r, const Variant& v, int x, int y) {
    return threshold_node(v, x, r.a() * x + r.b() * y);
}

int update_y(const Rule& r, const Variant& v, int x, int y) {
    return threshold_node(v, y, r.c() * x + r.d() * y);
}

StateValues async_values(const Rule& rule, const Variant& variant, AsyncOrder order, StateValues s) {
    if (order == AsyncOrder::x_first) {
        const int x = update_x(rule, variant, s.x, s.y);
        return {x, update_y(rule, variant, x, s.y)};
    }
    const int y = update_y(rule, variant, s.x, s.y);
    return {update_x(rule, variant, s.x, y), y};
}

}  // namespace

Rule::Rule(int a, int b, int c, int d) {
    if (!is_weight(a) || !is_weight(b) || !is_weight(c) || !is_weight(d))
        throw std::domain_error("rule weights must lie in {-1, 0, 1}");
    w_ = {static_cast<std::int8_t>(a), static_cast<std::int8_t>(b), static_cast<std::int8_t>(c),
          static_cast<std::int8_t>(d)};
}

Rule Rule::from_number(int number) {
    if (number < 1 || number > kRuleCount)
        throw std::domain_error("rule number must be in 1..81, got " + std::to_string(number));
    int n = number - 1;
    const int d = n % 3 - 1;
    n /= 3;
    const int c = n % 3 - 1;
    n /= 3;
    const int b = n % 3 - 1;
    n /= 3;
    return Rule(n - 1, b, c, d);
}

int Rule::number() const noexcept {
    return 27 * (w_[0] + 1) + 9 * (w_[1] + 1) + 3 * (w_[2] + 1) + (w_[3] + 1) + 1;
}

int Rule::arity() const noexcept {
    if (b() != 0 || c() != 0) return 2;
    return (a() == 0 && d() == 0) ? 0 : 1;
}

std::vector<Rule> all_rules() {
    std::vector<Rule> rules;
    rules.reserve(kRuleCount);
    for (int r = 1; r <= kRuleCount; ++r) rules.push_back(Rule::from_number(r));
    return rules;
}

int low_level(ValueConvention convention) noexcept {
    return convention == ValueConvention::signed_unit ? -1 : 0;
}

StateValues values_of(NetState s, ValueConvention convention) noexcept {
    const int lo = low_level(convention);
    return {s.x_high() ? 1 : lo, s.y_high() ? 1 : lo};
}

NetState state_of(StateValues v, ValueConvention convention) {
    const int lo = low_level(convention);
    const auto level = [&](int value) {
        if (value == 1) return true;
        if (value == lo) return false;
        throw std::invalid_argument("state value " + std::to_string(value) +
                                    " does not belong to the variant's value convention");
    };
    return NetState::from_levels(level(v.x), level(v.y));
}

std::string to_string(StateValues v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::string state_label(NetState s, ValueConvention convention) {
    return to_string(values_of(s, convention));
}

Variant Variant::with_epsilon(double eps) const {
    if (tag_ != VariantTag::V2 && tag_ != VariantTag::V3)
        throw std::invalid_argument("a threshold shift applies only to V2 and V3");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    Variant v = *this;
    v.epsilon_ = eps;
    return v;
}

Variant Variant::with_mode(UpdateMode mode) const noexcept {
    Variant v = *this;
    v.mode_ = mode;
    return v;
}

ValueConvention Variant::convention() const noexcept {
    return static_cast<int>(tag_) <= 3 ? ValueConvention::signed_unit : ValueConvention::binary;
}

ZeroPolicy Variant::zero_policy() const noexcept {
    switch (tag_) {
        case VariantTag::V2:
        case VariantTag::V5: return ZeroPolicy::high;
        case VariantTag::V3:
        case VariantTag::V6: return ZeroPolicy::low;
        default: return ZeroPolicy::hold;
    }
}

std::string Variant::name() const {
    std::string s = "V" + std::to_string(static_cast<int>(tag_));
    if (mode_ == UpdateMode::x_first) s += "A";
    if (mode_ == UpdateMode::y_first) s += "Ay";
    if (epsilon_) {
        std::ostringstream os;
        os << (tag_ == VariantTag::V2 ? "+" : "-") << *epsilon_;
        s += "(eps" + os.str() + ")";
    }
    return s;
}

Variant Variant::parse(std::string_view text) {
    std::string t;
    for (char ch : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (t.size() < 2 || t[0] != 'V' || t[1] < '1' || t[1] > '7')
        throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
    const auto tag = static_cast<VariantTag>(t[1] - '0');
    const std::string suffix = t.substr(2);
    if (suffix.empty()) return Variant(tag);
    if (suffix == "A" || suffix == "AX") return Variant(tag, UpdateMode::x_first);
    if (suffix == "AY") return Variant(tag, UpdateMode::y_first);
    throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

std::array<Variant, 7> all_variants() {
    return {Variant(VariantTag::V1), Variant(VariantTag::V2), Variant(VariantTag::V3),
            Variant(VariantTag::V4), Variant(VariantTag::V5), Variant(VariantTag::V6),
            Variant(VariantTag::V7)};
}

StateValues step(const Rule& rule, const Variant& variant, StateValues s) {
    if (!variant.synchronous()) throw std::invalid_argument("step() requires a synchronous variant");
    state_of(s, variant.convention());
    return {update_x(rule, variant, s.x, s.y), update_y(rule, variant, s.x, s.y)};
}

NetState step(const Rule& rule, const Variant& variant, NetState s) {
    const auto conv = variant.convention();
    return state_of(step(rule, variant, values_of(s, conv)), conv);
}

StateValues step_async(const Rule& rule, const Variant& variant, AsyncOrder order, StateValues s) {
    state_of(s, variant.convention());
    return async_values(rule, variant, order, s);
}

NetState step_async(const Rule& rule, const Variant& variant, AsyncOrder order, NetState s) {
    const auto conv = variant.convention();
    return state_of(async_values(rule, variant, order, values_of(s, conv)), conv);
}

NetState successor(const Rule& rule, const Variant& variant, NetState s) {
    switch (variant.mode()) {
        case UpdateMode::x_first: return step_async(rule, variant, AsyncOrder::x_first, s);
        case UpdateMode::y_first: return step_async(rule, variant, AsyncOrder::y_first, s);
        case UpdateMode::synchronous: break;
    }
    return step(rule, variant, s);
}

StateMap one_step_map(const Rule& rule, const Variant& variant) {
    StateMap map{};
    for (NetState s : kAllStates) map[s.index] = successor(rule, variant, s);
    return map;
}

Attractor::Attractor(std::span<const NetState> cycle) {
    if (cycle.empty() || cycle.size() > 4) throw std::invalid_argument("cycle length must be 1..4");
    std::uint8_t seen = 0;
    for (NetState s : cycle) {
        if (s.index > 3 || (seen >> s.index) & 1u) throw std::invalid_argument("invalid cycle");
        seen |= static_cast<std::uint8_t>(1u << s.index);
    }
    const auto start = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
    length_ = cycle.size();
    for (std::size_t i = 0; i < length_; ++i) cycle_[i] = cycle[(start + i) % length_];
}

std::uint8_t Attractor::mask() const noexcept {
    std::uint8_t m = 0;
    for (std::size_t i = 0; i < length_; ++i) m |= static_cast<std::uint8_t>(1u << cycle_[i].index);
    return m;
}

bool operator==(const Attractor& l, const Attractor& r) noexcept {
    return std::ranges::equal(l.states(), r.states());
}

std::strong_ordering operator<=>(const Attractor& l, const Attractor& r) noexcept {
    return std::lexicographical_compare_three_way(l.states().begin(), l.states().end(),
                                                  r.states().begin(), r.states().end());
}

std::string to_string(const Attractor& attractor, ValueConvention convention) {
    std::string out;
    for (NetState s : attractor.states()) {
        if (!out.empty()) out += "->";
        out += state_label(s, convention);
    }
    return out;
}

int AttractorSet::transient_state_count() const noexcept {
    int on_cycle = 0;
    for (const auto& a : attractors) on_cycle += static_cast<int>(a.length());
    return 4 - on_cycle;
}

AttractorSet attractor_set(const StateMap& map) {
    AttractorSet result;
    for (NetState start : kAllStates) {
        std::array<int, 4> visit_time{-1, -1, -1, -1};
        NetState s = start;
        int t = 0;
        while (visit_time[s.index] < 0) {
            visit_time[s.index] = t++;
            s = map[s.index];
        }
        // s is the first repeated state: the cycle entry point
        std::vector<NetState> cycle{s};
        for (NetState n = map[s.index]; n != s; n = map[n.index]) cycle.push_back(n);
        Attractor attractor(cycle);
        auto it = std::find(result.attractors.begin(), result.attractors.end(), attractor);
        if (it == result.attractors.end()) {
            result.attractors.push_back(attractor);
            it = result.attractors.end() - 1;
        }
        result.transient[start.index] = static_cast<std::uint8_t>(visit_time[s.index]);
        result.basin[start.index] = static_cast<std::uint8_t>(it - result.attractors.begin());
    }
    // canonical order by leading state; remap basin indices
    std::vector<Attractor> sorted = result.attractors;
    std::sort(sorted.begin(), sorted.end());
    for (auto& b : result.basin) {
        const auto& a = result.attractors[b];
        b = static_cast<std::uint8_t>(std::find(sorted.begin(), sorted.end(), a) - sorted.begin());
    }
    result.attractors = std::move(sorted);
    return result;
}

AttractorSet attractor_set(const Rule& rule, const Variant& variant) {
    return attractor_set(one_step_map(rule, variant));
}

DynamicsClass DynamicsClass::from_cycle_lengths(std::vector<int> lengths) {
    if (lengths.empty()) throw std::invalid_argument("a dynamics class needs at least one attractor");
    std::sort(lengths.begin(), lengths.end());
    DynamicsClass c;
    c.lengths_ = std::move(lengths);
    const auto& L = c.lengths_;
    const bool uniform = L.front() == L.back();
    if (uniform && L.front() == 1 && L.size() <= 4) {
        c.label_ = static_cast<ClassLabel>(static_cast<int>(ClassLabel::F1) + static_cast<int>(L.size()) - 1);
    } else if (uniform && L.front() >= 2 && L.front() <= 4) {
        c.label_ = static_cast<ClassLabel>(static_cast<int>(ClassLabel::C2) + L.front() - 2);
    } else if (L.front() == 1 && L.back() == 2) {
        c.label_ = ClassLabel::M;
    } else {
        c.label_ = ClassLabel::Other;
    }
    return c;
}

DynamicsClass DynamicsClass::parse(std::string_view text) {
    const std::string t(text);
    if (t.size() == 2 && t[0] == 'F' && t[1] >= '1' && t[1] <= '4')
        return from_cycle_lengths(std::vector<int>(static_cast<std::size_t>(t[1] - '0'), 1));
    if (t.size() == 2 && t[1] == 'C' && t[0] >= '2' && t[0] <= '4') return from_cycle_lengths({t[0] - '0'});
    if (t == "M") return from_cycle_lengths({1, 2});
    if (t.starts_with("Other(") && t.ends_with(")")) {
        std::vector<int> lengths;
        std::istringstream in(t.substr(6, t.size() - 7));
        for (std::string item; std::getline(in, item, ',');) lengths.push_back(std::stoi(item));
        return from_cycle_lengths(std::move(lengths));
    }
    throw std::invalid_argument("unknown dynamics class '" + t + "'");
}

bool DynamicsClass::is_fixed_point() const noexcept {
    return label_ == ClassLabel::F1 || label_ == ClassLabel::F2 || label_ == ClassLabel::F3 ||
           label_ == ClassLabel::F4;
}

std::string DynamicsClass::to_string() const {
    switch (label_) {
        case ClassLabel::F1: return "F1";
        case ClassLabel::F2: return "F2";
        case ClassLabel::F3: return "F3";
        case ClassLabel::F4: return "F4";
        case ClassLabel::C2: return "2C";
        case ClassLabel::C3: return "3C";
        case ClassLabel::C4: return "4C";
        case ClassLabel::M: return "M";
        case ClassLabel::Other: break;
    }
    std::string s = "Other(";
    for (std::size_t i = 0; i < lengths_.size(); ++i) s += (i ? "," : "") + std::to_string(lengths_[i]);
    return s + ")";
}

DynamicsClass classify(const AttractorSet& attractors) {
    std::vector<int> lengths;
    for (const auto& a : attractors.attractors) lengths.push_back(static_cast<int>(a.length()));
    return DynamicsClass::from_cycle_lengths(std::move(lengths));
}

DynamicsClass classify(const Rule& rule, const Variant& variant) {
    return classify(attractor_set(rule, variant));
}

}  // namespace mpn
