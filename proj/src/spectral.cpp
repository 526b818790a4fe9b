#include "mpn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mpn {

namespace {

// lowest degree first
using Poly = std::vector<long long>;

Poly multiply(const Poly& l, const Poly& r) {
    Poly out(l.size() + r.size() - 1, 0);
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) out[i + j] += l[i] * r[j];
    return out;
}

void add_scaled(Poly& acc, const Poly& term, long long sign) {
    if (acc.size() < term.size()) acc.resize(term.size(), 0);
    for (std::size_t i = 0; i < term.size(); ++i) acc[i] += sign * term[i];
}

Poly determinant(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly det{0};
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        add_scaled(det, multiply(m[0][col], determinant(minor)), col % 2 == 0 ? 1 : -1);
    }
    return det;
}

Eigenvalue reduced(int k, int p) {
    if (p == 0) return {};
    k %= p;
    const int g = std::gcd(k, p);
    return g == 0 ? Eigenvalue{0, 1} : Eigenvalue{k / g, p / g};
}

// angle k/p compared exactly by cross multiplication; zero sorts first
bool angle_less(const Eigenvalue& l, const Eigenvalue& r) {
    if (l.is_zero() != r.is_zero()) return l.is_zero();
    if (l.is_zero()) return false;
    return static_cast<long long>(l.k) * r.p < static_cast<long long>(r.k) * l.p;
}

}  // namespace

TransitionMatrix transition_matrix(const StateMap& map) {
    TransitionMatrix t = TransitionMatrix::Zero();
    for (NetState s : kAllStates) t(s.index, map[s.index].index) = 1;
    return t;
}

TransitionMatrix transition_matrix(const Rule& rule, const Variant& variant) {
    return transition_matrix(one_step_map(rule, variant));
}

std::complex<double> Eigenvalue::value() const {
    if (is_zero()) return {0.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * k / p);
}

std::string Eigenvalue::to_string() const {
    if (is_zero()) return "0";
    if (k == 0) return "1";
    if (p == 2) return "-1";
    if (p == 4) return k == 1 ? "i" : "-i";
    return "exp(2pi*i*" + std::to_string(k) + "/" + std::to_string(p) + ")";
}

bool operator==(const Eigenvalue& l, const Eigenvalue& r) noexcept {
    return l.is_zero() == r.is_zero() && (l.is_zero() || (l.k == r.k && l.p == r.p));
}

bool operator<(const Eigenvalue& l, const Eigenvalue& r) noexcept { return angle_less(l, r); }

int Spectrum::zero_count() const noexcept {
    return static_cast<int>(std::count_if(values.begin(), values.end(), [](const Eigenvalue& e) { return e.is_zero(); }));
}

std::vector<long long> Spectrum::characteristic_polynomial() const {
    // nonzero eigenvalues arrive as complete sets of p-th roots; each set contributes lambda^p - 1
    Poly poly{1};
    std::vector<Eigenvalue> pending = values;
    for (int z = zero_count(); z > 0; --z) poly = multiply(poly, Poly{0, 1});
    std::erase_if(pending, [](const Eigenvalue& e) { return e.is_zero(); });
    while (!pending.empty()) {
        // the largest denominator bounds the cycle length of the next complete root set
        const int p = std::max_element(pending.begin(), pending.end(),
                                       [](const Eigenvalue& l, const Eigenvalue& r) { return l.p < r.p; })->p;
        for (int k = 0; k < p; ++k) {
            auto it = std::find(pending.begin(), pending.end(), reduced(k, p));
            if (it == pending.end()) return {};  // not a union of complete root sets
            pending.erase(it);
        }
        Poly factor(static_cast<std::size_t>(p) + 1, 0);
        factor[0] = -1;
        factor[p] = 1;
        poly = multiply(poly, factor);
    }
    return {poly.rbegin(), poly.rend()};
}

std::string Spectrum::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].to_string();
    return s + "}";
}

Spectrum spectrum_from_cycles(const AttractorSet& attractors) {
    Spectrum spectrum;
    for (int z = attractors.transient_state_count(); z > 0; --z) spectrum.values.push_back({});
    for (const Attractor& a : attractors.attractors) {
        const int p = static_cast<int>(a.length());
        for (int k = 0; k < p; ++k) spectrum.values.push_back(reduced(k, p));
    }
    std::stable_sort(spectrum.values.begin(), spectrum.values.end());
    return spectrum;
}

std::array<long long, 5> charpoly_oracle(const TransitionMatrix& t) {
    std::vector<std::vector<Poly>> m(4, std::vector<Poly>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            // (lambda*I - T^T)(i, j) = lambda*[i==j] - T(j, i)
            m[i][j] = Poly{-static_cast<long long>(t(j, i)), i == j ? 1 : 0};
        }
    Poly det = determinant(m);
    det.resize(5, 0);
    std::array<long long, 5> out{};
    for (int i = 0; i < 5; ++i) out[i] = det[4 - i];
    return out;
}

}  // namespace mpn
