#include "orblab/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace orblab {

long default_element_budget = 20000000;

Permutation Permutation::identity(int degree) {
    Permutation p;
    p.images.resize(static_cast<size_t>(degree));
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images.resize(images.size());
    for (int x = 0; x < degree(); ++x) p.images[static_cast<size_t>(images[static_cast<size_t>(x)])] = x;
    return p;
}

Permutation Permutation::then(const Permutation& other) const {
    Permutation p;
    p.images.resize(images.size());
    for (int x = 0; x < degree(); ++x)
        p.images[static_cast<size_t>(x)] = other.apply(apply(x));
    return p;
}

CycleTypeKey cycle_type(const Permutation& p) {
    if (!p.is_valid()) throw ValidationError("invalid permutation");
    CycleTypeKey ct;
    std::vector<bool> seen(p.images.size(), false);
    for (int x = 0; x < p.degree(); ++x) {
        if (seen[static_cast<size_t>(x)]) continue;
        int len = 0;
        int y = x;
        do {
            seen[static_cast<size_t>(y)] = true;
            y = p.apply(y);
            ++len;
        } while (y != x);
        ++ct[len];
    }
    return ct;
}

std::vector<int> gl_decode_point(int x, int N, int q) {
    std::vector<int> v(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        v[static_cast<size_t>(i)] = x % q;
        x /= q;
    }
    return v;
}

int gl_encode_point(const std::vector<int>& v, int q) {
    int x = 0;
    for (size_t i = v.size(); i-- > 0;) x = x * q + v[i];
    return x;
}

PermGroupHandle build_group(GroupKind kind, int N, std::optional<int> q) {
    if (N < 1) throw ValidationError("N must be >= 1");
    PermGroupHandle h;
    h.kind_ = kind;
    h.n_ = N;
    switch (kind) {
        case GroupKind::symmetric:
            h.degree_ = N;
            h.order_ = factorial(static_cast<unsigned long>(N));
            break;
        case GroupKind::cyclic:
            h.degree_ = N;
            h.order_ = N;
            break;
        case GroupKind::general_linear: {
            if (!q) throw ValidationError("general_linear needs q");
            if (!is_prime(Int(*q)) || *q < 2)
                throw ValidationError("q must be prime (v1 supports prime fields only)");
            h.q_ = *q;
            Int qn = pow_int(Int(*q), static_cast<unsigned long>(N));
            if (qn > 1 << 26) throw ValidationError("q^N too large");
            h.degree_ = static_cast<int>(qn.get_si());
            Int ord(1);
            for (int i = 0; i < N; ++i) ord *= qn - pow_int(Int(*q), static_cast<unsigned long>(i));
            h.order_ = ord;
            break;
        }
    }
    return h;
}

PermGroupHandle parse_group_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    try {
        if (parts.size() == 2 && parts[0] == "S")
            return build_group(GroupKind::symmetric, std::stoi(parts[1]));
        if (parts.size() == 2 && parts[0] == "Z")
            return build_group(GroupKind::cyclic, std::stoi(parts[1]));
        if (parts.size() == 3 && parts[0] == "GL")
            return build_group(GroupKind::general_linear, std::stoi(parts[1]), std::stoi(parts[2]));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw ValidationError("bad group spec '" + spec + "' (expected S:<N>, Z:<N>, or GL:<N>:<q>)");
}

std::string PermGroupHandle::spec_string() const {
    switch (kind_) {
        case GroupKind::symmetric: return "S:" + std::to_string(n_);
        case GroupKind::cyclic: return "Z:" + std::to_string(n_);
        case GroupKind::general_linear:
            return "GL:" + std::to_string(n_) + ":" + std::to_string(q_);
    }
    return "?";
}

namespace {

// Streams invertible NxN matrices over F_2 in lexicographic row-major order
// (rows built top-down, each row skipped when in the span of the previous ones)
// and reports the induced permutation of F_2^N under v -> Mv.
void stream_gl2(int N, const std::function<void(const Permutation&)>& fn) {
    int points = 1 << N;
    std::vector<int> rows(static_cast<size_t>(N), 0);
    std::vector<int> echelon; // row-reduced span of chosen rows
    Permutation perm;
    perm.images.assign(static_cast<size_t>(points), 0);
    std::vector<int> cols(static_cast<size_t>(N), 0);

    std::function<void(int)> rec = [&](int level) {
        if (level == N) {
            // columns of M from its rows
            for (int j = 0; j < N; ++j) {
                int c = 0;
                for (int i = 0; i < N; ++i)
                    if (rows[static_cast<size_t>(i)] >> j & 1) c |= 1 << i;
                cols[static_cast<size_t>(j)] = c;
            }
            // images by linearity: x with lowest set bit j extends x ^ (1<<j)
            for (int x = 1; x < points; ++x) {
                int j = __builtin_ctz(x);
                perm.images[static_cast<size_t>(x)] =
                    perm.images[static_cast<size_t>(x ^ (1 << j))] ^ cols[static_cast<size_t>(j)];
            }
            fn(perm);
            return;
        }
        for (int r = 1; r < points; ++r) {
            int red = r;
            for (int b : echelon) {
                int lead = 1 << (31 - __builtin_clz(b));
                if (red & lead) red ^= b;
            }
            if (red == 0) continue;
            rows[static_cast<size_t>(level)] = r;
            // insert keeping leads in descending order (reduction relies on it)
            auto it = std::lower_bound(echelon.begin(), echelon.end(), red, std::greater<>());
            it = echelon.insert(it, red);
            rec(level + 1);
            echelon.erase(std::find(echelon.begin(), echelon.end(), red));
        }
    };
    rec(0);
}

// Generic prime q: same row-by-row enumeration with modular row reduction.
void stream_gl_generic(int N, int q, const std::function<void(const Permutation&)>& fn) {
    Int points_big = pow_int(Int(q), static_cast<unsigned long>(N));
    int points = static_cast<int>(points_big.get_si());
    std::vector<std::vector<int>> rows(static_cast<size_t>(N));
    std::vector<std::vector<int>> echelon; // reduced rows with leading coeff 1
    Permutation perm;
    perm.images.assign(static_cast<size_t>(points), 0);

    auto lead_pos = [](const std::vector<int>& b) {
        size_t p = 0;
        while (p < b.size() && b[p] == 0) ++p;
        return p;
    };
    // echelon rows have distinct leads, leading coefficient 1, and are kept
    // sorted by lead position, so one ascending pass reduces fully
    auto reduce = [&](std::vector<int> v) {
        for (const auto& b : echelon) {
            size_t lead = lead_pos(b);
            if (v[lead] != 0) {
                int c = v[lead];
                for (size_t i = 0; i < v.size(); ++i) v[i] = ((v[i] - c * b[i]) % q + q) % q;
            }
        }
        return v;
    };

    std::function<void(int)> rec = [&](int level) {
        if (level == N) {
            // columns of M
            std::vector<std::vector<int>> cols(static_cast<size_t>(N),
                                               std::vector<int>(static_cast<size_t>(N)));
            for (int j = 0; j < N; ++j)
                for (int i = 0; i < N; ++i)
                    cols[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                        rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            // image digit vectors by linearity over digits of x
            std::vector<std::vector<int>> w(static_cast<size_t>(points));
            w[0].assign(static_cast<size_t>(N), 0);
            std::vector<int> qpow(static_cast<size_t>(N));
            for (int i = 0; i < N; ++i)
                qpow[static_cast<size_t>(i)] = static_cast<int>(
                    pow_int(Int(q), static_cast<unsigned long>(i)).get_si());
            for (int x = 1; x < points; ++x) {
                int p = 0;
                while ((x / qpow[static_cast<size_t>(p)]) % q == 0) ++p;
                int prev = x - qpow[static_cast<size_t>(p)];
                w[static_cast<size_t>(x)] = w[static_cast<size_t>(prev)];
                for (int i = 0; i < N; ++i)
                    w[static_cast<size_t>(x)][static_cast<size_t>(i)] =
                        (w[static_cast<size_t>(x)][static_cast<size_t>(i)] +
                         cols[static_cast<size_t>(p)][static_cast<size_t>(i)]) % q;
            }
            for (int x = 0; x < points; ++x)
                perm.images[static_cast<size_t>(x)] = gl_encode_point(w[static_cast<size_t>(x)], q);
            fn(perm);
            return;
        }
        for (int r = 1; r < points; ++r) {
            std::vector<int> v = gl_decode_point(r, N, q);
            std::vector<int> red = reduce(v);
            if (std::all_of(red.begin(), red.end(), [](int c) { return c == 0; })) continue;
            rows[static_cast<size_t>(level)] = v;
            // normalize leading coefficient to 1 (mod q, q prime)
            size_t lead = lead_pos(red);
            int inv = 1;
            for (int t = 1; t < q; ++t)
                if (red[lead] * t % q == 1) { inv = t; break; }
            for (auto& c : red) c = c * inv % q;
            auto it = std::lower_bound(
                echelon.begin(), echelon.end(), red,
                [&](const std::vector<int>& a, const std::vector<int>& b) {
                    return lead_pos(a) < lead_pos(b);
                });
            it = echelon.insert(it, red);
            rec(level + 1);
            echelon.erase(std::find(echelon.begin(), echelon.end(), red));
        }
    };
    rec(0);
}

} // namespace

void PermGroupHandle::for_each_element(const std::function<void(const Permutation&)>& fn,
                                       long budget) const {
    if (order_ > budget)
        throw BudgetExceeded("group order " + order_.get_str() + " exceeds element budget " +
                             std::to_string(budget));
    switch (kind_) {
        case GroupKind::symmetric: {
            Permutation p = Permutation::identity(n_);
            do {
                fn(p);
            } while (std::next_permutation(p.images.begin(), p.images.end()));
            break;
        }
        case GroupKind::cyclic: {
            for (int r = 0; r < n_; ++r) {
                Permutation p;
                p.images.resize(static_cast<size_t>(n_));
                for (int x = 0; x < n_; ++x) p.images[static_cast<size_t>(x)] = (x + r) % n_;
                fn(p);
            }
            break;
        }
        case GroupKind::general_linear:
            if (q_ == 2)
                stream_gl2(n_, fn);
            else
                stream_gl_generic(n_, q_, fn);
            break;
    }
}

std::vector<Permutation> PermGroupHandle::elements(long budget) const {
    std::vector<Permutation> out;
    if (order_ <= budget) out.reserve(static_cast<size_t>(order_.get_si()));
    for_each_element([&](const Permutation& p) { out.push_back(p); }, budget);
    return out;
}

CycleIndex symmetric_cycle_index(int N) {
    std::map<CycleTypeKey, Rat> terms;
    Int nfact = factorial(static_cast<unsigned long>(N));
    // enumerate partitions of N as nonincreasing part lists
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            CycleTypeKey ct;
            for (int p : parts) ++ct[p];
            Int z(1);
            for (const auto& [k, m] : ct)
                z *= pow_int(Int(k), static_cast<unsigned long>(m)) *
                     factorial(static_cast<unsigned long>(m));
            terms[ct] = Rat(1) / Rat(z); // 1/z_lambda; class size over N! reduces to this
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(N, N);
    (void)nfact;
    return CycleIndex(N, std::move(terms));
}

const CycleIndex& PermGroupHandle::cycle_index(long budget) const {
    if (cycle_index_cache_) return *cycle_index_cache_;
    std::map<CycleTypeKey, Rat> terms;
    switch (kind_) {
        case GroupKind::symmetric:
            cycle_index_cache_ = std::make_shared<const CycleIndex>(symmetric_cycle_index(n_));
            return *cycle_index_cache_;
        case GroupKind::cyclic: {
            // rotation by r has gcd(N,r) cycles of length N/gcd(N,r):
            // divisor d contributes phi(d) elements of type {d : N/d}
            for (int d = 1; d <= n_; ++d) {
                if (n_ % d != 0) continue;
                long phi = 0;
                for (int r = 0; r < d; ++r)
                    if (std::gcd(r, d) == 1) ++phi;
                CycleTypeKey ct;
                ct[d] = n_ / d;
                Rat w(phi, n_);
                w.canonicalize();
                terms[ct] = w;
            }
            break;
        }
        case GroupKind::general_linear: {
            std::map<CycleTypeKey, long> histogram;
            for_each_element([&](const Permutation& p) { ++histogram[cycle_type(p)]; }, budget);
            for (const auto& [ct, count] : histogram) terms[ct] = Rat(Int(count)) / Rat(order_);
            break;
        }
    }
    cycle_index_cache_ = std::make_shared<const CycleIndex>(CycleIndex(degree_, std::move(terms)));
    return *cycle_index_cache_;
}

StabilizerInfo stabilizers(const PermGroupHandle& g, const std::vector<int>& K, long budget) {
    std::vector<int> sortedK = K;
    std::sort(sortedK.begin(), sortedK.end());
    if (std::adjacent_find(sortedK.begin(), sortedK.end()) != sortedK.end())
        throw ValidationError("subset K has duplicate points");
    for (int p : sortedK)
        if (p < 0 || p >= g.degree()) throw ValidationError("subset point out of range");
    int k = static_cast<int>(sortedK.size());

    StabilizerInfo info;
    if (g.kind() == GroupKind::symmetric) {
        int N = g.param_n();
        info.setwise_order =
            factorial(static_cast<unsigned long>(k)) * factorial(static_cast<unsigned long>(N - k));
        info.pointwise_order = factorial(static_cast<unsigned long>(N - k));
        Permutation p = Permutation::identity(k);
        do {
            info.restriction.push_back(p);
        } while (std::next_permutation(p.images.begin(), p.images.end()));
        return info;
    }

    std::map<int, int> pos;
    for (int i = 0; i < k; ++i) pos[sortedK[static_cast<size_t>(i)]] = i;
    long setwise = 0, pointwise = 0;
    std::set<Permutation> restriction;
    g.for_each_element(
        [&](const Permutation& sigma) {
            Permutation r;
            r.images.resize(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) {
                int img = sigma.apply(sortedK[static_cast<size_t>(i)]);
                auto it = pos.find(img);
                if (it == pos.end()) return; // not setwise-stabilizing
                r.images[static_cast<size_t>(i)] = it->second;
            }
            ++setwise;
            if (r == Permutation::identity(k)) ++pointwise;
            restriction.insert(std::move(r));
        },
        budget);
    info.setwise_order = setwise;
    info.pointwise_order = pointwise;
    info.restriction.assign(restriction.begin(), restriction.end());
    if (Int(static_cast<long>(info.restriction.size())) * info.pointwise_order !=
        info.setwise_order)
        throw ValidationError("stabilizer factorization |G^K| = |Ghat^K| * |G(K)| failed");
    return info;
}

GlOrderAsymptotic gl_order_asymptotic(int N, int q) {
    if (N < 1) throw ValidationError("N must be >= 1");
    if (!is_prime(Int(q))) throw ValidationError("q must be prime");
    Int qn = pow_int(Int(q), static_cast<unsigned long>(N));
    Int exact(1);
    for (int i = 0; i < N; ++i) exact *= qn - pow_int(Int(q), static_cast<unsigned long>(i));
    Rat main_term = Rat(pow_int(Int(q), static_cast<unsigned long>(N) * static_cast<unsigned long>(N)));
    for (int j = 1; j <= N; ++j)
        main_term *= Rat(1) - Rat(1, pow_int(Int(q), static_cast<unsigned long>(j)));
    GlOrderAsymptotic out;
    out.exact = exact;
    out.ratio = Rat(exact) / main_term;
    out.ratio.canonicalize();
    return out;
}

} // namespace orblab
