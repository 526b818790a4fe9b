#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mpn/dynamics.hpp"

namespace mpn {

/// T(i, j) = 1 iff S_i maps to S_j in one step.
using TransitionMatrix = Eigen::Matrix<int, 4, 4, Eigen::RowMajor>;

TransitionMatrix transition_matrix(const StateMap& map);
TransitionMatrix transition_matrix(const Rule& rule, const Variant& variant);

/// Exactly one 1 per row, all other entries zero.
template <typename Derived>
bool is_deterministic(const Eigen::MatrixBase<Derived>& t) {
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
        int ones = 0;
        for (Eigen::Index j = 0; j < t.cols(); ++j) {
            if (t(i, j) == 1) ++ones;
            else if (t(i, j) != 0) return false;
        }
        if (ones != 1) return false;
    }
    return true;
}

template <typename Derived>
bool is_permutation(const Eigen::MatrixBase<Derived>& t) {
    return is_deterministic(t) && is_deterministic(t.transpose());
}

/// exp(2*pi*i*k/p); p == 0 encodes the zero eigenvalue.
struct Eigenvalue {
    int k = 0;
    int p = 0;

    bool is_zero() const noexcept { return p == 0; }
    std::complex<double> value() const;
    /// "0", "1", "-1", "i", "-i", or "exp(2pi*i*k/p)" in lowest terms.
    std::string to_string() const;

    friend bool operator==(const Eigenvalue& l, const Eigenvalue& r) noexcept;
    friend bool operator<(const Eigenvalue& l, const Eigenvalue& r) noexcept;
};

/// Exact eigenvalue multiset of a 4x4 binary transition matrix. Each eigenvalue is
/// stored reduced (k/p in lowest terms, p >= 1), sorted: zeros first, then by angle.
struct Spectrum {
    std::vector<Eigenvalue> values;

    int zero_count() const noexcept;
    /// Coefficients of prod(lambda - mu), highest degree first.
    std::vector<long long> characteristic_polynomial() const;
    std::string to_string() const;  // "{1,-1,i,-i}"
    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Zeros for transient states, all p-th roots of unity for each cycle of length p.
Spectrum spectrum_from_cycles(const AttractorSet& attractors);

/// det(lambda*I - T^T) by cofactor expansion over integer polynomials, highest degree first.
std::array<long long, 5> charpoly_oracle(const TransitionMatrix& t);

}  // namespace mpn
