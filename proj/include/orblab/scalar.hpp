#ifndef ORBLAB_SCALAR_HPP
#define ORBLAB_SCALAR_HPP

#include <map>
#include <string>

#include "orblab/rational.hpp"

namespace orblab {

// Exact scalar in the field extension generated by square roots: a finite sum
// sum_s c_s * sqrt(s) with squarefree positive integer radicands s and
// rational coefficients c_s. Closed under +, -, *; division works against
// rationals and single-radical values, which covers every A^{-1/2} and
// M(kappa,N) factor that appears in the pipeline. Arithmetic never leaves
// exact form.
class Scalar {
  public:
    Scalar() = default;
    Scalar(const Rat& r);   // NOLINT(google-explicit-constructor)
    Scalar(long v) : Scalar(Rat(v)) {} // NOLINT(google-explicit-constructor)

    static Scalar sqrt_of(const Rat& nonneg);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    // requires a single-term (or zero-dividend) divisor
    Scalar operator/(const Scalar& o) const;

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    double to_double() const;
    std::string to_string() const; // e.g. "3/2", "1/2*sqrt(2)", "1 + sqrt(3)"

    const std::map<Int, Rat>& terms() const { return terms_; }

  private:
    void add_term(const Int& rad, const Rat& coef);
    std::map<Int, Rat> terms_; // squarefree radicand -> coefficient
};

// s = square * squarefree; returns (squarefree, square root of the square part)
std::pair<Int, Int> squarefree_split(const Int& s);

} // namespace orblab

#endif
