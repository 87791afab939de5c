#include "orblab/series.hpp"

#include <algorithm>
#include <sstream>

namespace orblab {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    if (r.get_den() == 1)
        os << r.get_num();
    else
        os << r.get_num() << "/" << r.get_den();
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw ValidationError("bad rational: '" + s + "'");
    r.canonicalize();
    return r;
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rat> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0 || coeffs_.size() != static_cast<size_t>(order) + 1)
        throw ValidationError("series coefficient count must equal order+1");
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.set_coeff(0, Rat(1));
    return s;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_) throw ValidationError("cannot extend a truncated series");
    TruncatedSeries r(new_order);
    for (int n = 0; n <= new_order; ++n) r.set_coeff(n, coeff(n));
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    int ord = std::min(order_, o.order_);
    TruncatedSeries r(ord);
    for (int n = 0; n <= ord; ++n) r.set_coeff(n, coeff(n) + o.coeff(n));
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    int ord = std::min(order_, o.order_);
    TruncatedSeries r(ord);
    for (int n = 0; n <= ord; ++n) r.set_coeff(n, coeff(n) - o.coeff(n));
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int ord = std::min(order_, o.order_);
    TruncatedSeries r(ord);
    for (int i = 0; i <= ord; ++i) {
        if (coeff(i) == 0) continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (o.coeff(j) == 0) continue;
            r.set_coeff(i + j, r.coeff(i + j) + coeff(i) * o.coeff(j));
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned k) const {
    TruncatedSeries r = one(order_);
    TruncatedSeries base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

TruncatedSeries TruncatedSeries::recip() const {
    if (coeff(0) == 0) throw ValidationError("recip of series with zero constant term");
    TruncatedSeries r(order_);
    Rat c0inv = Rat(1) / coeff(0);
    r.set_coeff(0, c0inv);
    for (int n = 1; n <= order_; ++n) {
        Rat acc(0);
        for (int j = 1; j <= n; ++j) acc += coeff(j) * r.coeff(n - j);
        r.set_coeff(n, -c0inv * acc);
    }
    return r;
}

TruncatedSeries TruncatedSeries::compose_power(int k) const {
    if (k < 1) throw ValidationError("compose_power needs k >= 1");
    TruncatedSeries r(order_);
    for (int n = 0; static_cast<long>(n) * k <= order_; ++n)
        r.set_coeff(n * k, coeff(n));
    return r;
}

bool TruncatedSeries::is_character() const {
    if (coeff(0) != 1) return false;
    for (const Rat& c : coeffs_)
        if (c.get_den() != 1 || c < 0) return false;
    return true;
}

CycleIndex::CycleIndex(int degree, std::map<CycleTypeKey, Rat> terms)
    : degree_(degree), terms_(std::move(terms)) {
    for (const auto& [ct, w] : terms_) {
        long total = 0;
        for (const auto& [k, m] : ct) {
            if (k < 1 || m < 0) throw ValidationError("bad cycle type");
            total += static_cast<long>(k) * m;
        }
        if (total != degree_) throw ValidationError("cycle type does not match degree");
        if (w <= 0) throw ValidationError("cycle index weights must be positive");
    }
    if (weight_sum() != 1) throw ValidationError("cycle index weights must sum to 1");
}

Rat CycleIndex::weight_sum() const {
    Rat s(0);
    for (const auto& [ct, w] : terms_) s += w;
    return s;
}

TruncatedSeries cycle_index_character(const CycleIndex& zi, const TruncatedSeries& a, int order) {
    if (a.coeff(0) != 1) throw ValidationError("seed character must have a_0 = 1");
    TruncatedSeries a_trunc = a.order() > order ? a.truncated(order) : a;
    // cache a(t^k) truncated at `order`
    std::map<int, TruncatedSeries> powers;
    auto a_pow = [&](int k) -> const TruncatedSeries& {
        auto it = powers.find(k);
        if (it == powers.end()) {
            TruncatedSeries s(order);
            for (int n = 0; n <= a_trunc.order() && static_cast<long>(n) * k <= order; ++n)
                s.set_coeff(n * k, a_trunc.coeff(n));
            it = powers.emplace(k, std::move(s)).first;
        }
        return it->second;
    };
    TruncatedSeries result(order);
    for (const auto& [ct, w] : zi.terms()) {
        TruncatedSeries term = TruncatedSeries::one(order);
        for (const auto& [k, m] : ct) {
            if (m == 0) continue;
            term = term * a_pow(k).pow(static_cast<unsigned>(m));
        }
        TruncatedSeries weighted(order);
        for (int n = 0; n <= order; ++n) weighted.set_coeff(n, term.coeff(n) * w);
        result = result + weighted;
    }
    for (int n = 0; n <= order; ++n)
        if (result.coeff(n).get_den() != 1)
            throw ValidationError("non-integral fixed-point character coefficient at t^" +
                                  std::to_string(n) + " (corrupted cycle index)");
    return result;
}

TruncatedSeries sym_limit_character(const TruncatedSeries& a, int order) {
    if (a.coeff(0) != 1) throw ValidationError("seed character must have a_0 = 1");
    TruncatedSeries result = TruncatedSeries::one(order);
    for (int m = 1; m <= std::min(order, a.order()); ++m) {
        const Rat& am = a.coeff(m);
        if (am.get_den() != 1 || am < 0)
            throw ValidationError("seed coefficients must be nonnegative integers");
        if (am == 0) continue;
        // (1 - t^m)^{-a_m}
        TruncatedSeries factor(order);
        factor.set_coeff(0, Rat(1));
        factor.set_coeff(m, Rat(-1));
        unsigned long e = am.get_num().get_ui();
        result = result * factor.recip().pow(static_cast<unsigned>(e));
    }
    return result;
}

} // namespace orblab
