#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpn {

inline constexpr int kRuleCount = 81;

/// The four weights of a two-node threshold network:
///   x' = f(a*x + b*y),  y' = f(c*x + d*y)
/// with every weight in {-1, 0, +1}. Rules are numbered 1..81 by
/// R = 27(a+1) + 9(b+1) + 3(c+1) + (d+1) + 1.
class Rule {
public:
    constexpr Rule() = default;
    Rule(int a, int b, int c, int d);

    /// Throws std::domain_error unless 1 <= number <= 81.
    static Rule from_number(int number);

    int number() const noexcept;
    int a() const noexcept { return w_[0]; }
    int b() const noexcept { return w_[1]; }
    int c() const noexcept { return w_[2]; }
    int d() const noexcept { return w_[3]; }
    std::array<int, 4> weights() const noexcept { return {w_[0], w_[1], w_[2], w_[3]}; }

    /// 0 for the all-zero rule, 1 when the nodes are uncoupled (b = c = 0), 2 otherwise.
    int arity() const noexcept;

    friend bool operator==(const Rule&, const Rule&) = default;
    friend std::strong_ordering operator<=>(const Rule& l, const Rule& r) noexcept {
        return l.number() <=> r.number();
    }

private:
    std::array<std::int8_t, 4> w_{};
};

/// All 81 rules in ascending rule number.
std::vector<Rule> all_rules();

enum class ValueConvention { signed_unit, binary };  // {-1, 1} or {0, 1}

/// Encoding-independent joint state. S0 = (lo,lo), S1 = (lo,hi), S2 = (hi,lo), S3 = (hi,hi).
struct NetState {
    std::uint8_t index = 0;

    constexpr bool x_high() const noexcept { return (index & 2u) != 0; }
    constexpr bool y_high() const noexcept { return (index & 1u) != 0; }
    static constexpr NetState from_levels(bool x_high, bool y_high) noexcept {
        return NetState{static_cast<std::uint8_t>((x_high ? 2u : 0u) | (y_high ? 1u : 0u))};
    }

    friend constexpr auto operator<=>(NetState, NetState) = default;
};

inline constexpr std::array<NetState, 4> kAllStates{NetState{0}, NetState{1}, NetState{2}, NetState{3}};

/// Concrete node values of a state under one value convention.
struct StateValues {
    int x = 0;
    int y = 0;
    friend constexpr bool operator==(StateValues, StateValues) = default;
};

int low_level(ValueConvention convention) noexcept;
StateValues values_of(NetState s, ValueConvention convention) noexcept;
/// Throws std::invalid_argument when a value is not a level of the convention.
NetState state_of(StateValues v, ValueConvention convention);
std::string to_string(StateValues v);
std::string state_label(NetState s, ValueConvention convention);

enum class VariantTag : std::uint8_t { V1 = 1, V2, V3, V4, V5, V6, V7 };
enum class UpdateMode : std::uint8_t { synchronous, x_first, y_first };
enum class AsyncOrder : std::uint8_t { x_first, y_first };

/// Output of the threshold function when the weighted input sum is exactly zero.
enum class ZeroPolicy : std::uint8_t { hold, high, low };

/// An update variant: value convention plus threshold treatment (V1..V7), the update
/// mode, and an optional threshold shift that is only meaningful for V2 (+eps) and V3 (-eps).
class Variant {
public:
    constexpr Variant(VariantTag tag, UpdateMode mode = UpdateMode::synchronous) noexcept
        : tag_(tag), mode_(mode) {}

    /// Throws std::invalid_argument unless tag is V2/V3 and 0 < eps < 1.
    Variant with_epsilon(double eps) const;
    Variant with_mode(UpdateMode mode) const noexcept;

    VariantTag tag() const noexcept { return tag_; }
    UpdateMode mode() const noexcept { return mode_; }
    std::optional<double> epsilon() const noexcept { return epsilon_; }
    ValueConvention convention() const noexcept;
    ZeroPolicy zero_policy() const noexcept;  // meaningless for V7
    bool synchronous() const noexcept { return mode_ == UpdateMode::synchronous; }

    /// "V1", "V2A" (x-first), "V2Ay" (y-first), with "+eps" suffix when a shift is set.
    std::string name() const;
    /// Accepts "V4", "v4", "V4A"/"V4Ax" (x-first), "V4Ay" (y-first). Throws std::invalid_argument.
    static Variant parse(std::string_view text);

    friend bool operator==(const Variant&, const Variant&) = default;

private:
    VariantTag tag_;
    UpdateMode mode_;
    std::optional<double> epsilon_;
};

/// The six tabulated variants V1..V6 and the difference-rule variant V7 (synchronous).
std::array<Variant, 7> all_variants();

/// One synchronous update. Throws std::invalid_argument when the variant is asynchronous.
NetState step(const Rule& rule, const Variant& variant, NetState s);
/// Value-level overload; rejects values outside the variant's convention.
StateValues step(const Rule& rule, const Variant& variant, StateValues s);

/// One sweep of sequential updating: the second node sees the first node's new value.
NetState step_async(const Rule& rule, const Variant& variant, AsyncOrder order, NetState s);
StateValues step_async(const Rule& rule, const Variant& variant, AsyncOrder order, StateValues s);

/// The unit step for the variant's own mode (one full sweep for asynchronous modes).
NetState successor(const Rule& rule, const Variant& variant, NetState s);

/// successor() tabulated over S0..S3.
using StateMap = std::array<NetState, 4>;
StateMap one_step_map(const Rule& rule, const Variant& variant);

/// A limit cycle, rotated to begin at its smallest state index.
class Attractor {
public:
    /// Throws std::invalid_argument on an empty cycle, a repeated state, or length > 4.
    explicit Attractor(std::span<const NetState> cycle);

    std::size_t length() const noexcept { return length_; }
    std::span<const NetState> states() const noexcept { return {cycle_.data(), length_}; }
    NetState front() const noexcept { return cycle_[0]; }
    /// Bit i set iff state S_i lies on the cycle.
    std::uint8_t mask() const noexcept;
    bool contains(NetState s) const noexcept { return (mask() >> s.index) & 1u; }

    friend bool operator==(const Attractor& l, const Attractor& r) noexcept;
    friend std::strong_ordering operator<=>(const Attractor& l, const Attractor& r) noexcept;

private:
    std::array<NetState, 4> cycle_{};
    std::size_t length_ = 0;
};

std::string to_string(const Attractor& attractor, ValueConvention convention);

struct AttractorSet {
    std::vector<Attractor> attractors;      // ordered by leading state index
    std::array<std::uint8_t, 4> basin{};    // attractor index reached from each S_i
    std::array<std::uint8_t, 4> transient{};  // steps from S_i until it lies on its cycle

    const Attractor& reached_from(NetState s) const { return attractors.at(basin[s.index]); }
    /// Number of states that are not on any cycle.
    int transient_state_count() const noexcept;
};

AttractorSet attractor_set(const StateMap& map);
AttractorSet attractor_set(const Rule& rule, const Variant& variant);

enum class ClassLabel : std::uint8_t { F1, F2, F3, F4, C2, C3, C4, M, Other };

/// Limiting-dynamics class. Fk: only fixed points, k of them. Cp: only cycles, all of
/// length p >= 2. M: fixed points and 2-cycles together. Anything else is Other and keeps
/// the multiset of cycle lengths as its descriptor.
class DynamicsClass {
public:
    static DynamicsClass from_cycle_lengths(std::vector<int> lengths);
    /// Inverse of to_string(); throws std::invalid_argument.
    static DynamicsClass parse(std::string_view text);

    ClassLabel label() const noexcept { return label_; }
    const std::vector<int>& cycle_lengths() const noexcept { return lengths_; }
    bool is_fixed_point() const noexcept;
    /// "F1".."F4", "2C", "3C", "4C", "M", or "Other(1,3)".
    std::string to_string() const;

    /// Same label; Other classes must also share their length multiset.
    friend bool operator==(const DynamicsClass& l, const DynamicsClass& r) noexcept {
        return l.label_ == r.label_ && (l.label_ != ClassLabel::Other || l.lengths_ == r.lengths_);
    }

private:
    ClassLabel label_ = ClassLabel::Other;
    std::vector<int> lengths_;
};

DynamicsClass classify(const AttractorSet& attractors);
DynamicsClass classify(const Rule& rule, const Variant& variant);

}  // namespace mpn
