#ifndef ORBLAB_SERIES_HPP
#define ORBLAB_SERIES_HPP

#include <map>
#include <vector>

#include "orblab/rational.hpp"

namespace orblab {

// Formal power series with exact rational coefficients, truncated at an
// explicit inclusive order. Binary operations take the min of the two orders
// and never extend.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order)
        : order_(order), coeffs_(static_cast<size_t>(order) + 1, Rat(0)) {
        if (order < 0) throw ValidationError("series order must be >= 0");
    }
    TruncatedSeries(int order, std::vector<Rat> coeffs);

    int order() const { return order_; }
    const Rat& coeff(int n) const { return coeffs_.at(static_cast<size_t>(n)); }
    void set_coeff(int n, Rat v) { coeffs_.at(static_cast<size_t>(n)) = std::move(v); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(int new_order) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries pow(unsigned k) const;
    // requires coeff(0) != 0
    TruncatedSeries recip() const;
    // substitute t -> t^k, truncating at this->order()
    TruncatedSeries compose_power(int k) const;

    bool operator==(const TruncatedSeries& o) const = default;

    // true if every coefficient is a nonnegative integer and coeff(0) == 1
    bool is_character() const;

    static TruncatedSeries one(int order);

  private:
    int order_;
    std::vector<Rat> coeffs_;
};

// A cycle type {k: m_k} with sum k*m_k equal to the degree of the action.
using CycleTypeKey = std::map<int, long>;

// Exact cycle index of a permutation group: map from cycle type to the
// rational weight (class size / group order). Weights sum to 1.
class CycleIndex {
  public:
    CycleIndex(int degree, std::map<CycleTypeKey, Rat> terms);

    int degree() const { return degree_; }
    const std::map<CycleTypeKey, Rat>& terms() const { return terms_; }

    // Evaluate with all s_k = 1 (must give 1 for a valid index).
    Rat weight_sum() const;

  private:
    int degree_;
    std::map<CycleTypeKey, Rat> terms_;
};

// Fixed-point character: substitute s_k -> a(t^k) into the cycle index.
// Output coefficients must be integers; anything else means the weights are
// inconsistent with a group action.
TruncatedSeries cycle_index_character(const CycleIndex& zi, const TruncatedSeries& a, int order);

// Shifted character of V_{E8}^3: theta_{E8}(t)^3 / prod(1-t^m)^24, computed
// from direct lattice shell enumeration and the eta Euler product.
TruncatedSeries e8cubed_character(int order);

// theta series of the E8 lattice: coefficient of t^n counts vectors of
// norm 2n, by shell enumeration against the Gram matrix.
TruncatedSeries e8_theta_series(int order);

// N -> infinity limit of the S_N fixed-point character: the Euler product
// prod_{m>=1} (1-t^m)^{-a_m}. Requires a_0 = 1 and integral a_m >= 0.
TruncatedSeries sym_limit_character(const TruncatedSeries& a, int order);

} // namespace orblab

#endif
