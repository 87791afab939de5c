#include "orblab/scalar.hpp"

#include <cmath>
#include <sstream>

namespace orblab {

std::pair<Int, Int> squarefree_split(const Int& s) {
    if (s <= 0) throw ValidationError("radicand must be positive");
    Int rest = s;
    Int sqpart(1);
    Int sf(1);
    for (Int p(2); p * p <= rest && p < 100000; p = (p == 2 ? Int(3) : p + 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) sqpart *= p;
        if (e % 2) sf *= p;
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            sqpart *= r;
        } else {
            sf *= rest; // cofactor past the trial-division bound, kept as-is
        }
    }
    return {sf, sqpart};
}

Scalar::Scalar(const Rat& r) {
    if (r != 0) terms_[Int(1)] = r;
}

Scalar Scalar::sqrt_of(const Rat& nonneg) {
    if (nonneg < 0) throw ValidationError("sqrt of negative rational");
    Scalar s;
    if (nonneg == 0) return s;
    // sqrt(p/q) = sqrt(p*q)/q
    Int pq = nonneg.get_num() * nonneg.get_den();
    auto [sf, root] = squarefree_split(pq);
    s.terms_[sf] = Rat(root) / Rat(nonneg.get_den());
    return s;
}

bool Scalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rat Scalar::rational_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_rational()) throw ValidationError("scalar is not rational: " + to_string());
    return terms_.begin()->second;
}

void Scalar::add_term(const Int& rad, const Rat& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(rad, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& [rad, c] : o.terms_) r.add_term(rad, c);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [rad, c] : terms_) r.terms_[rad] = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [rad, c] : o.terms_) add_term(rad, c);
    return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& [rad1, c1] : terms_) {
        for (const auto& [rad2, c2] : o.terms_) {
            // sqrt(s1)*sqrt(s2) = g*sqrt(s1*s2/g^2) with g = gcd
            Int g;
            mpz_gcd(g.get_mpz_t(), rad1.get_mpz_t(), rad2.get_mpz_t());
            Int rad = (rad1 / g) * (rad2 / g);
            r.add_term(rad, c1 * c2 * Rat(g));
        }
    }
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw ValidationError("scalar division by zero");
    if (is_zero()) return Scalar();
    if (o.terms_.size() != 1)
        throw ValidationError("division only supported by single-radical scalars");
    const auto& [rad, c] = *o.terms_.begin();
    // 1/(c*sqrt(s)) = sqrt(s)/(c*s)
    Scalar inv;
    inv.terms_[rad] = Rat(1) / (c * Rat(rad));
    return *this * inv;
}

double Scalar::to_double() const {
    double v = 0.0;
    for (const auto& [rad, c] : terms_) v += c.get_d() * std::sqrt(rad.get_d());
    return v;
}

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [rad, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c);
        if (rad != 1) os << "*sqrt(" << rad.get_str() << ")";
    }
    return os.str();
}

} // namespace orblab
