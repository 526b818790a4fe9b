#include "mpn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace mpn::stats {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    cpp_int result = 1;
    for (long i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

CorrelationResult correlate(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("correlation inputs differ in length");
    const std::size_t n = xs.size();
    if (n < 3) throw std::invalid_argument("correlation needs at least 3 observations");
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("correlation is undefined for zero variance");
    CorrelationResult res;
    res.n = n;
    res.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    const double df = static_cast<double>(n - 2);
    const double one_minus = 1.0 - res.r * res.r;
    if (one_minus <= 0.0) {
        res.t_statistic = std::copysign(std::numeric_limits<double>::infinity(), res.r);
        res.p_value = 0.0;
        return res;
    }
    res.t_statistic = res.r * std::sqrt(df / one_minus);
    const boost::math::students_t dist(df);
    res.p_value = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(res.t_statistic))));
    return res;
}

}  // namespace

void ContingencyTable2x2::validate() const {
    if (n11 < 0 || n12 < 0 || n21 < 0 || n22 < 0) throw std::invalid_argument("contingency counts must be >= 0");
    if (total() < 1) throw std::invalid_argument("contingency table is empty");
}

Rational hypergeometric_probability(const ContingencyTable2x2& t, long k) {
    const long row1 = t.n11 + t.n12;
    const long col1 = t.n11 + t.n21;
    const long n = t.total();
    return Rational(binomial(row1, k) * binomial(n - row1, col1 - k), binomial(n, col1));
}

FisherResult fisher_exact(const ContingencyTable2x2& t) {
    t.validate();
    FisherResult res;
    const long row1 = t.n11 + t.n12, row2 = t.n21 + t.n22;
    const long col1 = t.n11 + t.n21, col2 = t.n12 + t.n22;
    if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0) {
        res.p_exact = 1;
        res.degenerate = true;
        return res;
    }
    const Rational observed = hypergeometric_probability(t, t.n11);
    Rational p = 0;
    for (long k = std::max(0L, col1 - row2); k <= std::min(row1, col1); ++k) {
        const Rational pk = hypergeometric_probability(t, k);
        if (pk <= observed) p += pk;
    }
    res.p_exact = p;
    res.p_value = static_cast<double>(p);
    return res;
}

OddsRatioResult odds_ratio(const ContingencyTable2x2& t) {
    t.validate();
    OddsRatioResult res;
    const double num = static_cast<double>(t.n11) * static_cast<double>(t.n22);
    const double den = static_cast<double>(t.n12) * static_cast<double>(t.n21);
    res.zero_cell = t.n11 == 0 || t.n12 == 0 || t.n21 == 0 || t.n22 == 0;
    if (den == 0.0) {
        res.undefined = num == 0.0;
        res.estimate = res.undefined ? std::numeric_limits<double>::quiet_NaN() : std::numeric_limits<double>::infinity();
        return res;
    }
    res.estimate = num / den;
    if (!res.zero_cell) {
        const double se = std::sqrt(1.0 / t.n11 + 1.0 / t.n12 + 1.0 / t.n21 + 1.0 / t.n22);
        res.ci_lower = std::exp(std::log(res.estimate) - 1.96 * se);
        res.ci_upper = std::exp(std::log(res.estimate) + 1.96 * se);
    }
    return res;
}

std::vector<double> mid_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t m = i; m <= j; ++m) ranks[order[m]] = rank;
        i = j + 1;
    }
    return ranks;
}

CorrelationResult pearson(std::span<const double> xs, std::span<const double> ys) { return correlate(xs, ys); }

CorrelationResult spearman(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("correlation inputs differ in length");
    const auto rx = mid_ranks(xs);
    const auto ry = mid_ranks(ys);
    return correlate(rx, ry);
}

}  // namespace mpn::stats
