#pragma once

#include <optional>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

namespace mpn::stats {

using Rational = boost::multiprecision::cpp_rational;

/// [[n11, n12], [n21, n22]]
struct ContingencyTable2x2 {
    long n11 = 0, n12 = 0, n21 = 0, n22 = 0;

    /// Throws std::invalid_argument on a negative cell or an empty table.
    void validate() const;
    long total() const noexcept { return n11 + n12 + n21 + n22; }
    ContingencyTable2x2 transposed() const noexcept { return {n11, n21, n12, n22}; }
};

struct FisherResult {
    Rational p_exact;       // two-sided, exact
    double p_value = 1.0;
    bool degenerate = false;  // a zero row or column margin
};

/// Two-sided: sum of the hypergeometric probabilities (fixed margins) of every table
/// no more probable than the observed one.
FisherResult fisher_exact(const ContingencyTable2x2& t);

/// Hypergeometric probability of n11 = k under the table's margins.
Rational hypergeometric_probability(const ContingencyTable2x2& margins, long k);

struct OddsRatioResult {
    double estimate = 0.0;   // (n11*n22)/(n12*n21); +inf when the denominator is zero
    std::optional<double> ci_lower;  // Woolf 95% interval, only when every cell > 0
    std::optional<double> ci_upper;
    bool zero_cell = false;
    bool undefined = false;  // 0/0
};

OddsRatioResult odds_ratio(const ContingencyTable2x2& t);

struct CorrelationResult {
    double r = 0.0;
    double t_statistic = 0.0;
    double p_value = 1.0;  // two-sided, Student t with n-2 degrees of freedom
    std::size_t n = 0;
};

/// Throws std::invalid_argument for unequal lengths, n < 3, or zero variance.
CorrelationResult pearson(std::span<const double> xs, std::span<const double> ys);
/// Pearson on mid-ranks.
CorrelationResult spearman(std::span<const double> xs, std::span<const double> ys);

/// Average ranks (1-based) with ties sharing their mean rank.
std::vector<double> mid_ranks(std::span<const double> values);

}  // namespace mpn::stats
