#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "orblab/seed.hpp"

namespace orblab {
namespace {

// Fock-space oracle for the rank-1 free boson. Basis states are partitions
// (nonincreasing mode lists) lambda with a_{-lambda_1}...a_{-lambda_k}|0>,
// inner product <lambda|lambda> = prod_k k^{m_k} m_k!. Field modes are
// computed with the iterate formula
//   (a_{-m}v)_n c = sum_{j>=0} C(m+j-1, j)
//       [ a_{-m-j}(v_{n+j} c) - (-1)^m v_{n-m-j}(a_j c) ]
// which together with a_n |0> and [a_m, a_n] = m delta_{m+n} determines all
// structure constants.

using Partition = std::vector<int>; // nonincreasing
using FockVec = std::map<Partition, Rat>;

int weight_of(const Partition& p) {
    int w = 0;
    for (int k : p) w += k;
    return w;
}

Int norm_sq(const Partition& p) {
    std::map<int, int> mult;
    for (int k : p) ++mult[k];
    Int n(1);
    for (const auto& [k, m] : mult)
        n *= pow_int(Int(k), static_cast<unsigned long>(m)) *
             factorial(static_cast<unsigned long>(m));
    return n;
}

void add_to(FockVec& v, const Partition& p, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = v.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

// Heisenberg operator alpha_m (m != 0): creation for m < 0, annihilation
// for m > 0.
FockVec heisenberg_mode(int m, const FockVec& v) {
    FockVec out;
    for (const auto& [p, c] : v) {
        if (m < 0) {
            Partition np = p;
            np.insert(std::upper_bound(np.begin(), np.end(), -m, std::greater<>()), -m);
            add_to(out, np, c);
        } else if (m > 0) {
            long mult = static_cast<long>(std::count(p.begin(), p.end(), m));
            if (mult == 0) continue;
            Partition np = p;
            np.erase(std::find(np.begin(), np.end(), m));
            add_to(out, np, c * Rat(static_cast<long>(m) * mult));
        }
    }
    return out;
}

// u_{(n)} applied to a Fock vector, u given as a basis partition.
FockVec apply_mode(const Partition& u, long n, const FockVec& c) {
    if (c.empty()) return {};
    if (u.empty()) {
        // vacuum field is the identity: |0>_{(n)} = delta_{n,-1} id
        return n == -1 ? c : FockVec{};
    }
    int m = u.front();
    Partition v(u.begin() + 1, u.end());
    int wt_v = weight_of(v);
    int wt_c = 0;
    for (const auto& [p, coef] : c) wt_c = std::max(wt_c, weight_of(p));

    FockVec out;
    // first sum: a_{-m-j}(v_{n+j} c); v_{n+j} c has weight wt(v)+wt(c)-n-j-1
    for (long j = 0; wt_v + wt_c - n - j - 1 >= 0; ++j) {
        Rat coef(binomial(Int(m + j - 1), static_cast<unsigned long>(j)));
        FockVec inner = apply_mode(v, n + j, c);
        FockVec term = heisenberg_mode(static_cast<int>(-m - j), inner);
        for (const auto& [p, cc] : term) add_to(out, p, cc * coef);
    }
    // second sum: -(-1)^m v_{n-m-j}(a_j c); a_j c vanishes for j > wt(c)
    Rat sign(m % 2 == 0 ? -1 : 1);
    for (long j = 1; j <= wt_c; ++j) {
        Rat coef(binomial(Int(m + j - 1), static_cast<unsigned long>(j)));
        FockVec inner = heisenberg_mode(static_cast<int>(j), c);
        FockVec term = apply_mode(v, n - m - j, inner);
        for (const auto& [p, cc] : term) add_to(out, p, cc * coef * sign);
    }
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    out.push_back({}); // vacuum
    Partition cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (!cur.empty()) out.push_back(cur);
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(max_weight, max_weight);
    // order: vacuum first, then by (weight, partition)
    std::sort(out.begin() + 1, out.end(), [](const Partition& a, const Partition& b) {
        int wa = weight_of(a), wb = weight_of(b);
        return wa != wb ? wa < wb : a < b;
    });
    return out;
}

std::string label_id(const Partition& p) {
    if (p.empty()) return "vac";
    std::string s = "b";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "_" : "") + std::to_string(p[i]);
    return s;
}

} // namespace

SeedTable heisenberg_seed(int cutoff) {
    if (cutoff < 0 || cutoff > 4)
        throw ValidationError("heis cutoff must be in [0, 4] in v1");
    std::vector<Partition> basis = partitions_up_to(cutoff);
    int L = static_cast<int>(basis.size());
    std::vector<SeedLabel> labels;
    std::vector<Int> norms;
    for (const auto& p : basis) {
        labels.push_back({label_id(p), weight_of(p)});
        norms.push_back(norm_sq(p));
    }
    std::map<std::array<int, 3>, Scalar> consts;
    for (int b = 0; b < L; ++b) {
        for (int cc = 0; cc < L; ++cc) {
            FockVec cvec;
            cvec[basis[static_cast<size_t>(cc)]] = Rat(1);
            for (int a = 0; a < L; ++a) {
                long n = labels[static_cast<size_t>(b)].wt + labels[static_cast<size_t>(cc)].wt -
                         labels[static_cast<size_t>(a)].wt - 1;
                FockVec w = apply_mode(basis[static_cast<size_t>(b)], n, cvec);
                auto it = w.find(basis[static_cast<size_t>(a)]);
                if (it == w.end()) continue;
                // <e_a, (e_b)_n e_c> with e = |lambda>/sqrt(norm)
                Scalar val = Scalar(it->second * Rat(norms[static_cast<size_t>(a)])) *
                             Scalar::sqrt_of(Rat(1) / Rat(norms[static_cast<size_t>(a)])) *
                             Scalar::sqrt_of(Rat(1) / Rat(norms[static_cast<size_t>(b)])) *
                             Scalar::sqrt_of(Rat(1) / Rat(norms[static_cast<size_t>(cc)]));
                if (!val.is_zero()) consts[{a, b, cc}] = val;
            }
        }
    }
    return SeedTable("heis:" + std::to_string(cutoff), cutoff, std::move(labels),
                     std::move(consts));
}

} // namespace orblab
