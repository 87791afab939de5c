#include "orblab/structure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace orblab {
namespace {

int label_at(const WeightedFunction& g, int x) {
    auto it = g.support.find(x);
    return it == g.support.end() ? 0 : it->second + 1; // seed index (0 = vacuum)
}

std::vector<int> sorted_support(const WeightedFunction& g) {
    std::vector<int> K;
    K.reserve(g.support.size());
    for (const auto& [x, l] : g.support) K.push_back(x);
    return K; // map keys are already sorted
}

std::vector<int> set_transform(const std::vector<int>& A, const Permutation& sigma) {
    std::vector<int> out;
    out.reserve(A.size());
    for (int x : A) out.push_back(sigma.apply(x));
    std::sort(out.begin(), out.end());
    return out;
}

int primitive_root(int q) {
    for (int g = 2; g < q; ++g) {
        int ord = 1;
        long v = g;
        while (v != 1) {
            v = v * g % q;
            ++ord;
        }
        if (ord == q - 1) return g;
    }
    throw ValidationError("no primitive root mod " + std::to_string(q));
}

Permutation linear_map_perm(const std::function<void(std::vector<int>&)>& update, int N,
                            int q) {
    int deg = 1;
    for (int i = 0; i < N; ++i) deg *= q;
    Permutation p;
    p.images.resize(static_cast<size_t>(deg));
    for (int x = 0; x < deg; ++x) {
        std::vector<int> v = gl_decode_point(x, N, q);
        update(v);
        p.images[static_cast<size_t>(x)] = gl_encode_point(v, q);
    }
    return p;
}

// A small generating set of the group as point permutations.
std::vector<Permutation> group_generators(const PermGroupHandle& G) {
    int N = G.param_n();
    std::vector<Permutation> gens;
    switch (G.kind()) {
    case GroupKind::symmetric: {
        if (N < 2) return gens;
        Permutation t = Permutation::identity(N);
        std::swap(t.images[0], t.images[1]);
        gens.push_back(t);
        Permutation c;
        c.images.resize(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) c.images[static_cast<size_t>(i)] = (i + 1) % N;
        gens.push_back(c);
        return gens;
    }
    case GroupKind::cyclic: {
        if (N < 2) return gens;
        Permutation c;
        c.images.resize(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) c.images[static_cast<size_t>(i)] = (i + 1) % N;
        gens.push_back(c);
        return gens;
    }
    case GroupKind::general_linear: {
        int q = G.q();
        // elementary transvections generate SL; one diagonal scaling extends to GL
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (i == j) continue;
                gens.push_back(linear_map_perm(
                    [i, j, q](std::vector<int>& v) {
                        v[static_cast<size_t>(i)] =
                            (v[static_cast<size_t>(i)] + v[static_cast<size_t>(j)]) % q;
                    },
                    N, q));
            }
        if (q > 2) {
            int g = primitive_root(q);
            gens.push_back(linear_map_perm(
                [g, q](std::vector<int>& v) { v[0] = v[0] * g % q; }, N, q));
        }
        return gens;
    }
    }
    return gens;
}

struct SpanInfo {
    int dim = 0;
    std::vector<int> points; // all q^dim span points, sorted
};

SpanInfo span_of(const std::vector<int>& pts, int N, int q) {
    // reduced row echelon basis, indexed by lead position (q prime)
    std::map<int, std::vector<int>> rows;
    for (int x : pts) {
        std::vector<int> v = gl_decode_point(x, N, q);
        for (const auto& [lead, row] : rows) {
            int c = v[static_cast<size_t>(lead)]; // rows are normalized (lead entry 1)
            if (c != 0)
                for (int i = 0; i < N; ++i)
                    v[static_cast<size_t>(i)] =
                        ((v[static_cast<size_t>(i)] - c * row[static_cast<size_t>(i)]) % q + q) % q;
        }
        int lead = -1;
        for (int i = 0; i < N; ++i)
            if (v[static_cast<size_t>(i)] != 0) {
                lead = i;
                break;
            }
        if (lead < 0) continue;
        int inv = 1;
        while (v[static_cast<size_t>(lead)] * inv % q != 1) ++inv;
        for (int i = 0; i < N; ++i) v[static_cast<size_t>(i)] = v[static_cast<size_t>(i)] * inv % q;
        // keep the basis fully reduced: clear the new lead from existing rows
        for (auto& [l, row] : rows) {
            int c = row[static_cast<size_t>(lead)];
            if (c != 0)
                for (int i = 0; i < N; ++i)
                    row[static_cast<size_t>(i)] =
                        ((row[static_cast<size_t>(i)] - c * v[static_cast<size_t>(i)]) % q + q) % q;
        }
        rows.emplace(lead, std::move(v));
    }
    std::vector<std::vector<int>> basis;
    for (auto& [l, row] : rows) basis.push_back(std::move(row));
    SpanInfo info;
    info.dim = static_cast<int>(basis.size());
    long total = 1;
    for (int i = 0; i < info.dim; ++i) total *= q;
    info.points.reserve(static_cast<size_t>(total));
    for (long t = 0; t < total; ++t) {
        std::vector<int> v(static_cast<size_t>(N), 0);
        long tt = t;
        for (size_t bi = 0; bi < basis.size(); ++bi) {
            int c = static_cast<int>(tt % q);
            tt /= q;
            if (c != 0)
                for (int i = 0; i < N; ++i)
                    v[static_cast<size_t>(i)] =
                        (v[static_cast<size_t>(i)] + c * basis[bi][static_cast<size_t>(i)]) % q;
        }
        info.points.push_back(gl_encode_point(v, q));
    }
    std::sort(info.points.begin(), info.points.end());
    return info;
}

std::vector<int> union_of(const std::array<std::vector<int>, 3>& A) {
    std::set<int> u;
    for (const auto& a : A) u.insert(a.begin(), a.end());
    return {u.begin(), u.end()};
}

std::vector<int> intersect3(const std::array<std::vector<int>, 3>& A) {
    std::vector<int> t, out;
    std::set_intersection(A[0].begin(), A[0].end(), A[1].begin(), A[1].end(),
                          std::back_inserter(t));
    std::set_intersection(t.begin(), t.end(), A[2].begin(), A[2].end(),
                          std::back_inserter(out));
    return out;
}

int log_base(long size, int q) {
    int d = 0;
    while (size > 1) {
        size /= q;
        ++d;
    }
    return d;
}

Int scan_pointwise(const std::vector<Permutation>& elems, const std::vector<int>& K) {
    long c = 0;
    for (const auto& e : elems) {
        bool ok = true;
        for (int x : K)
            if (e.apply(x) != x) {
                ok = false;
                break;
            }
        if (ok) ++c;
    }
    return Int(c);
}

Int scan_setwise_sim(const std::vector<Permutation>& elems,
                     const std::array<std::vector<int>, 3>& A) {
    long c = 0;
    for (const auto& e : elems) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) ok = set_transform(A[static_cast<size_t>(i)], e) ==
                                              A[static_cast<size_t>(i)];
        if (ok) ++c;
    }
    return Int(c);
}

// restriction perm on positions of sorted K, extended to a degree-N permutation
Permutation extend_restriction(const Permutation& r, const std::vector<int>& K, int N) {
    Permutation p = Permutation::identity(N);
    for (size_t j = 0; j < K.size(); ++j)
        p.images[static_cast<size_t>(K[j])] = K[static_cast<size_t>(r.apply(static_cast<int>(j)))];
    return p;
}

std::vector<int> flatten_key(const std::array<std::vector<int>, 3>& A) {
    std::vector<int> key;
    for (const auto& a : A) {
        key.insert(key.end(), a.begin(), a.end());
        key.push_back(-1);
    }
    return key;
}

std::string decay_string(GroupKind kind, int q, const CosetClass& c) {
    std::ostringstream os;
    if (kind == GroupKind::symmetric) {
        if (c.covering_integral)
            os << "O(N^(-" << c.n3 << "/2))";
        else
            os << "O(N^(" << c.limit_exponent << "/2))";
    } else {
        if (c.covering_integral)
            os << "O(" << q << "^(-N*" << c.n3 << "))";
        else
            os << "O(" << q << "^(N*" << c.limit_exponent << "/2))";
    }
    return os.str();
}

} // namespace

LabelSet seed_label_set(const SeedTable& seed) {
    LabelSet ls;
    for (int i = 1; i < seed.label_count(); ++i) ls.weights.push_back(seed.weight(i));
    return ls;
}

Scalar tensor_constant(const WeightedFunction& g1, const WeightedFunction& g2,
                       const WeightedFunction& g3, const SeedTable& seed) {
    if (g1.degree != g2.degree || g1.degree != g3.degree)
        throw ValidationError("tensor_constant requires a common degree");
    std::set<int> pts;
    for (const auto* g : {&g1, &g2, &g3})
        for (const auto& [x, l] : g->support) pts.insert(x);
    Scalar out(Rat(1));
    for (int x : pts) {
        const Scalar& f = seed.f(label_at(g1, x), label_at(g2, x), label_at(g3, x));
        if (f.is_zero()) return Scalar();
        out *= f;
    }
    return out;
}

SymmetrizedState normalization(const WeightedFunction& g, const PermGroupHandle& G,
                               const SeedTable& seed, long budget) {
    (void)seed; // orthonormal labels: inner products are Kronecker deltas
    if (g.degree != G.degree())
        throw ValidationError("state degree does not match the group degree");
    std::vector<int> K = sorted_support(g);
    StabilizerInfo stab = stabilizers(G, K, budget);
    WeightedFunction pos{static_cast<int>(K.size()), {}};
    for (size_t j = 0; j < K.size(); ++j)
        pos.support[static_cast<int>(j)] = g.support.at(K[j]);
    Int A(0);
    for (const auto& r : stab.restriction)
        if (pos.transformed(r) == pos) ++A;

    SymmetrizedState s;
    if (G.kind() == GroupKind::symmetric) {
        // orbit minimum: support {0..|K|-1} with labels sorted ascending
        std::vector<int> labels;
        for (const auto& [x, l] : g.support) labels.push_back(l);
        std::sort(labels.begin(), labels.end());
        s.rep.degree = g.degree;
        for (size_t j = 0; j < labels.size(); ++j)
            s.rep.support[static_cast<int>(j)] = labels[j];
    } else {
        s.rep = g;
        G.for_each_element(
            [&](const Permutation& sigma) {
                WeightedFunction h = g.transformed(sigma);
                if (h < s.rep) s.rep = h;
            },
            budget);
    }
    s.A = A;
    s.A_full = A * G.order() * stab.pointwise_order;
    return s;
}

Scalar bruteforce_constant(const WeightedFunction& g1, const WeightedFunction& g2,
                           const WeightedFunction& g3, const PermGroupHandle& G,
                           const SeedTable& seed, long budget) {
    if (G.order() > budget)
        throw BudgetExceeded("bruteforce_constant: |G| exceeds budget");
    std::vector<Permutation> elems = G.elements(budget);
    Int af1 = normalization(g1, G, seed).A_full;
    Int af2 = normalization(g2, G, seed).A_full;
    Int af3 = normalization(g3, G, seed).A_full;
    std::vector<WeightedFunction> t2, t3;
    t2.reserve(elems.size());
    t3.reserve(elems.size());
    for (const auto& e : elems) {
        t2.push_back(g2.transformed(e));
        t3.push_back(g3.transformed(e));
    }
    // diagonal invariance: the sigma_1 sum contributes a factor |G|
    Scalar sum;
    for (const auto& h2 : t2)
        for (const auto& h3 : t3) sum += tensor_constant(g1, h2, h3, seed);
    sum *= Scalar(Rat(G.order()));
    return sum * Scalar::sqrt_of(Rat(1) / Rat(af1 * af2 * af3));
}

std::vector<CosetClass> coset_analysis(const std::vector<int>& K1, const std::vector<int>& K2,
                                       const std::vector<int>& K3, const PermGroupHandle& G,
                                       long budget) {
    int N = G.degree();
    std::array<std::vector<int>, 3> K{K1, K2, K3};
    for (auto& k : K) std::sort(k.begin(), k.end());
    std::vector<Permutation> gens = group_generators(G);

    // orbit of each K_i with a witness permutation per member
    std::array<std::map<std::vector<int>, Permutation>, 3> orbit;
    for (int i = 0; i < 3; ++i) {
        auto& orb = orbit[static_cast<size_t>(i)];
        std::vector<std::vector<int>> frontier{K[static_cast<size_t>(i)]};
        orb.emplace(K[static_cast<size_t>(i)], Permutation::identity(N));
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& A : frontier) {
                const Permutation& w = orb.at(A);
                for (const auto& gperm : gens) {
                    std::vector<int> B = set_transform(A, gperm);
                    if (orb.emplace(B, w.then(gperm)).second) next.push_back(B);
                }
            }
            frontier = std::move(next);
        }
    }
    long triples = static_cast<long>(orbit[0].size()) * static_cast<long>(orbit[1].size()) *
                   static_cast<long>(orbit[2].size());
    if (triples > budget || triples > 5000000)
        throw BudgetExceeded("coset_analysis: too many support triples");

    bool symmetric = G.kind() == GroupKind::symmetric;
    std::vector<Permutation> elems;
    std::array<Int, 3> pw_k;
    std::array<SpanInfo, 3> spans;
    if (!symmetric) elems = G.elements(budget);
    for (int i = 0; i < 3; ++i) {
        if (symmetric)
            pw_k[static_cast<size_t>(i)] =
                factorial(static_cast<unsigned long>(N - static_cast<int>(K[static_cast<size_t>(i)].size())));
        else
            pw_k[static_cast<size_t>(i)] = scan_pointwise(elems, K[static_cast<size_t>(i)]);
        if (G.kind() == GroupKind::general_linear)
            spans[static_cast<size_t>(i)] = span_of(K[static_cast<size_t>(i)], G.param_n(), G.q());
    }

    std::vector<CosetClass> classes;
    std::set<std::vector<int>> visited;
    for (const auto& [a1, w1] : orbit[0])
        for (const auto& [a2, w2] : orbit[1])
            for (const auto& [a3, w3] : orbit[2]) {
                std::array<std::vector<int>, 3> rep{a1, a2, a3};
                if (visited.count(flatten_key(rep))) continue;
                // BFS over the diagonal action; the scan order makes `rep`
                // the lex-min member, hence canonical
                std::vector<std::array<std::vector<int>, 3>> frontier{rep};
                visited.insert(flatten_key(rep));
                while (!frontier.empty()) {
                    std::vector<std::array<std::vector<int>, 3>> next;
                    for (const auto& tr : frontier)
                        for (const auto& gperm : gens) {
                            std::array<std::vector<int>, 3> moved{set_transform(tr[0], gperm),
                                                                  set_transform(tr[1], gperm),
                                                                  set_transform(tr[2], gperm)};
                            if (visited.insert(flatten_key(moved)).second)
                                next.push_back(moved);
                        }
                    frontier = std::move(next);
                }

                CosetClass c;
                c.supports = rep;
                c.witnesses = {orbit[0].at(rep[0]), orbit[1].at(rep[1]), orbit[2].at(rep[2])};
                std::vector<int> uni = union_of(rep);
                if (G.kind() == GroupKind::general_linear) {
                    SpanInfo su = span_of(uni, G.param_n(), G.q());
                    std::array<std::vector<int>, 3> sp{spans[0].points, spans[1].points,
                                                       spans[2].points};
                    std::vector<int> inter = intersect3(sp);
                    c.n3 = log_base(static_cast<long>(inter.size()), G.q());
                    int sum_d = spans[0].dim + spans[1].dim + spans[2].dim;
                    c.limit_exponent = 2 * su.dim - sum_d;
                    c.covering_integral = (2 * su.dim == sum_d - c.n3);
                } else {
                    c.n3 = static_cast<int>(intersect3(rep).size());
                    int sum_k = 0;
                    for (const auto& k : K) sum_k += static_cast<int>(k.size());
                    c.limit_exponent = 2 * static_cast<int>(uni.size()) - sum_k;
                    c.covering_integral = (2 * static_cast<int>(uni.size()) == sum_k - c.n3);
                }
                if (symmetric) {
                    int U = static_cast<int>(uni.size());
                    c.pointwise_union_order = factorial(static_cast<unsigned long>(N - U));
                    // simultaneous setwise stabilizer: product of cell factorials
                    std::map<int, int> mask;
                    for (int i = 0; i < 3; ++i)
                        for (int x : rep[static_cast<size_t>(i)]) mask[x] |= 1 << i;
                    std::map<int, int> cell_size;
                    for (const auto& [x, m] : mask) ++cell_size[m];
                    Int sa = factorial(static_cast<unsigned long>(N - U));
                    for (const auto& [m, sz] : cell_size)
                        sa *= factorial(static_cast<unsigned long>(sz));
                    c.setwise_sim_order = sa;
                } else {
                    c.pointwise_union_order = scan_pointwise(elems, uni);
                    c.setwise_sim_order = scan_setwise_sim(elems, rep);
                }
                c.M_squared = Rat(pw_k[0] * pw_k[1] * pw_k[2]) /
                              (Rat(G.order()) * Rat(c.pointwise_union_order * c.pointwise_union_order));
                classes.push_back(std::move(c));
            }
    return classes;
}

Rat sn_m_closed_form(int K1, int K2, int K3, int n3, int N) {
    int s = K1 + K2 + K3 - n3;
    if (s % 2 != 0)
        throw ValidationError("non-integral union size: configuration contributes zero");
    int U = s / 2;
    if (U > N) throw ValidationError("union size exceeds N");
    if (K1 > N || K2 > N || K3 > N) throw ValidationError("K_i exceeds N");
    Int num = factorial(static_cast<unsigned long>(N - K1)) *
              factorial(static_cast<unsigned long>(N - K2)) *
              factorial(static_cast<unsigned long>(N - K3));
    Int dU = factorial(static_cast<unsigned long>(N - U));
    Rat m2 = Rat(num) / (Rat(factorial(static_cast<unsigned long>(N))) * Rat(dU * dU));
    m2.canonicalize();
    return m2;
}

namespace {

// shared core of factored_constant and limit_constant
struct FactoredParts {
    std::array<std::vector<int>, 3> K;
    std::array<StabilizerInfo, 3> stabs;
    std::array<Int, 3> A;
    std::vector<CosetClass> classes;
};

FactoredParts factored_parts(const WeightedFunction& g1, const WeightedFunction& g2,
                             const WeightedFunction& g3, const PermGroupHandle& G,
                             const SeedTable& seed, long budget) {
    FactoredParts p;
    const WeightedFunction* gs[3] = {&g1, &g2, &g3};
    for (int i = 0; i < 3; ++i) {
        p.K[static_cast<size_t>(i)] = sorted_support(*gs[i]);
        p.stabs[static_cast<size_t>(i)] = stabilizers(G, p.K[static_cast<size_t>(i)], budget);
        p.A[static_cast<size_t>(i)] = normalization(*gs[i], G, seed, budget).A;
    }
    p.classes = coset_analysis(p.K[0], p.K[1], p.K[2], G, budget);
    return p;
}

Scalar class_inner_sum(const CosetClass& cls, const FactoredParts& parts,
                       const WeightedFunction& g1, const WeightedFunction& g2,
                       const WeightedFunction& g3, const PermGroupHandle& G,
                       const SeedTable& seed) {
    int N = G.degree();
    const WeightedFunction* gs[3] = {&g1, &g2, &g3};
    std::array<std::vector<WeightedFunction>, 3> moved;
    for (int i = 0; i < 3; ++i) {
        for (const auto& r : parts.stabs[static_cast<size_t>(i)].restriction) {
            Permutation sig = extend_restriction(r, parts.K[static_cast<size_t>(i)], N);
            moved[static_cast<size_t>(i)].push_back(
                gs[i]->transformed(sig).transformed(cls.witnesses[static_cast<size_t>(i)]));
        }
    }
    Scalar inner;
    for (const auto& h1 : moved[0])
        for (const auto& h2 : moved[1])
            for (const auto& h3 : moved[2]) inner += tensor_constant(h1, h2, h3, seed);
    return inner;
}

} // namespace

Scalar factored_constant(const WeightedFunction& g1, const WeightedFunction& g2,
                         const WeightedFunction& g3, const PermGroupHandle& G,
                         const SeedTable& seed, long budget) {
    FactoredParts parts = factored_parts(g1, g2, g3, G, seed, budget);
    Scalar total;
    for (const auto& cls : parts.classes) {
        Scalar inner = class_inner_sum(cls, parts, g1, g2, g3, G, seed);
        if (inner.is_zero()) continue;
        // class weight sqrt(M^2) * |Ghat^U| / |S(A)|; the second factor
        // quotients the residual diagonal symmetry of the support triple
        Scalar weight = Scalar::sqrt_of(cls.M_squared) *
                        Scalar(Rat(cls.pointwise_union_order) / Rat(cls.setwise_sim_order));
        total += weight * inner;
    }
    for (int i = 0; i < 3; ++i)
        total *= Scalar::sqrt_of(Rat(1) / Rat(parts.A[static_cast<size_t>(i)]));
    return total;
}

LimitResult limit_constant(const WeightedFunction& g1, const WeightedFunction& g2,
                           const WeightedFunction& g3, GroupKind kind, int q,
                           const SeedTable& seed, long budget) {
    if (kind != GroupKind::symmetric && kind != GroupKind::general_linear)
        throw ValidationError("limit defined for symmetric and general_linear families only");
    const WeightedFunction* gs[3] = {&g1, &g2, &g3};
    int max_pt = -1;
    for (const auto* g : gs)
        for (const auto& [x, l] : g->support) max_pt = std::max(max_pt, x);

    int N_ref = 1;
    if (kind == GroupKind::symmetric) {
        int sum_k = 0;
        for (const auto* g : gs) sum_k += static_cast<int>(g->support.size());
        N_ref = std::max({max_pt + 1, sum_k, 1});
    } else {
        int bits = 1;
        long cap = q;
        while (cap <= max_pt) {
            cap *= q;
            ++bits;
        }
        int sum_d = 0;
        for (const auto* g : gs) sum_d += span_of(sorted_support(*g), bits, q).dim;
        N_ref = std::max({bits, sum_d, 1});
    }
    PermGroupHandle G = build_group(kind, N_ref,
                                    kind == GroupKind::general_linear ? std::optional<int>(q)
                                                                      : std::nullopt);
    WeightedFunction e1 = g1, e2 = g2, e3 = g3;
    e1.degree = e2.degree = e3.degree = G.degree();

    FactoredParts parts = factored_parts(e1, e2, e3, G, seed, budget);
    LimitResult res;
    res.reference_N = N_ref;
    Scalar total;
    for (const auto& cls : parts.classes) {
        ClassCertificate cert;
        cert.cls = cls;
        Scalar inner = class_inner_sum(cls, parts, e1, e2, e3, G, seed);
        if (cls.limit_exponent > 0) {
            // some point is covered exactly once, so every C carries a
            // vanishing 1-point factor; a nonzero sum would contradict that
            if (!inner.is_zero())
                throw ValidationError("class with non-decaying, non-unit M factor encountered");
            cert.kept = false;
            cert.decay = "vanishing C (single-covered point)";
            res.certificate.push_back(std::move(cert));
            continue;
        }
        if (cls.limit_exponent == 0) {
            cert.kept = true;
            cert.decay = "limit 1";
            cert.contribution =
                Scalar(Rat(cls.pointwise_union_order) / Rat(cls.setwise_sim_order)) * inner;
            total += cert.contribution;
        } else {
            cert.kept = false;
            cert.decay = decay_string(kind, q, cls);
            cert.contribution = inner; // pre-M value, recorded for auditability
        }
        res.certificate.push_back(std::move(cert));
    }
    for (int i = 0; i < 3; ++i)
        total *= Scalar::sqrt_of(Rat(1) / Rat(parts.A[static_cast<size_t>(i)]));
    res.value = total;
    return res;
}

namespace {

Int gen_binomial(long top, unsigned long j) {
    // generalized binomial coefficient: top may be negative
    Int num(1);
    for (unsigned long i = 0; i < j; ++i) num *= Int(top - static_cast<long>(i));
    return num / factorial(j);
}

} // namespace

JacobiReport jacobi_check(const SeedTable& table, int cap) {
    if (cap > table.cutoff())
        throw ValidationError("insufficient cutoff: intermediate weight " +
                              std::to_string(table.cutoff() + 1) + " missing from the table");
    JacobiReport rep;
    int L = table.label_count();
    std::vector<int> lab;
    for (int i = 0; i < L; ++i)
        if (table.weight(i) <= cap) lab.push_back(i);
    for (int e : lab)
        for (int a : lab)
            for (int b : lab)
                for (int c : lab) {
                    int wa = table.weight(a), wb = table.weight(b), wc = table.weight(c);
                    int we = table.weight(e);
                    // grading fixes m + n + k = wt(a)+wt(b)+wt(c)-wt(e)-2;
                    // off that shell both sides vanish identically
                    long shell = wa + wb + wc - we - 2;
                    for (long n = wa + wb - cap - 1; n <= wa + wb + cap; ++n)
                        for (long k = wb + wc - cap - 1; k <= wb + wc + cap; ++k) {
                            long m = shell - n - k;
                            {
                                long b1 = wa + wb - n - 1; // max wt(d) per sum
                                long b2 = wb + wc - k - 1;
                                long b3 = wa + wc - m - 1;
                                if (b1 < 0 && b2 < 0 && b3 < 0) continue; // trivially 0 = 0
                                if (b1 > cap || b2 > cap || b3 > cap) {
                                    ++rep.skipped_insufficient_cutoff;
                                    continue;
                                }
                                Scalar lhs, rhs;
                                for (int d : lab) {
                                    int wd = table.weight(d);
                                    long j1 = wb + wa - wd - n - 1;
                                    if (j1 >= 0) {
                                        Scalar t = table.f(e, d, c) * table.f(d, a, b);
                                        if (!t.is_zero())
                                            lhs += t * Scalar(Rat(gen_binomial(m, static_cast<unsigned long>(j1))));
                                    }
                                    long j2 = wc + wb - wd - k - 1;
                                    if (j2 >= 0) {
                                        Scalar t = table.f(e, a, d) * table.f(d, b, c);
                                        if (!t.is_zero()) {
                                            Rat coef(gen_binomial(n, static_cast<unsigned long>(j2)));
                                            if (j2 % 2 != 0) coef = -coef;
                                            rhs += t * Scalar(coef);
                                        }
                                    }
                                    long j3 = wc + wa - wd - m - 1;
                                    if (j3 >= 0) {
                                        Scalar t = table.f(e, b, d) * table.f(d, a, c);
                                        if (!t.is_zero()) {
                                            Rat coef(gen_binomial(n, static_cast<unsigned long>(j3)));
                                            if (((j3 + n) % 2 + 2) % 2 != 0) coef = -coef;
                                            rhs += -t * Scalar(coef);
                                        }
                                    }
                                }
                                ++rep.checked;
                                if (lhs != rhs) {
                                    rep.ok = false;
                                    rep.witness = JacobiWitness{
                                        {e, a, b, c}, m, n, k, lhs, rhs};
                                    return rep;
                                }
                            }
                        }
                }
    return rep;
}

SeedTable fixed_point_table(const PermGroupHandle& G, const SeedTable& seed, int cap,
                            long budget) {
    LabelSet ls = seed_label_set(seed);
    std::vector<SeedLabel> labels{{"vac", 0}};
    std::vector<WeightedFunction> states;
    states.push_back(WeightedFunction{G.degree(), {}});
    for (int n = 1; n <= cap; ++n) {
        std::vector<WeightedFunction> reps = orbit_representatives(G, ls, n);
        int i = 0;
        for (const auto& r : reps) {
            labels.push_back({"g" + std::to_string(n) + "_" + std::to_string(i++), n});
            states.push_back(r);
        }
    }
    int L = static_cast<int>(labels.size());
    std::map<std::array<int, 3>, Scalar> consts;
    for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b)
            for (int c = 0; c < L; ++c) {
                Scalar v = bruteforce_constant(states[static_cast<size_t>(a)],
                                               states[static_cast<size_t>(b)],
                                               states[static_cast<size_t>(c)], G, seed, budget);
                if (!v.is_zero()) consts[{a, b, c}] = v;
            }
    return SeedTable("fixedpoint:" + G.spec_string() + ":" + seed.name(), cap,
                     std::move(labels), std::move(consts));
}

FreenessReport freeness_report(GroupKind kind, int q, const SeedTable& seed, int cap,
                               long budget) {
    FreenessReport rep;
    std::vector<WeightedFunction> traces;
    for (int l = 0; l + 1 < seed.label_count(); ++l) {
        if (seed.weight(l + 1) > cap) continue;
        traces.push_back(WeightedFunction{0, {{0, l}}});
        if (kind == GroupKind::general_linear)
            traces.push_back(WeightedFunction{0, {{1, l}}}); // nonzero-vector support
    }
    for (const auto& s1 : traces)
        for (const auto& s2 : traces)
            for (const auto& s3 : traces) {
                LimitResult lim = limit_constant(s1, s2, s3, kind, q, seed, budget);
                FreenessEntry entry;
                entry.states = {s1, s2, s3};
                entry.limit_value = lim.value;
                std::set<std::string> rates;
                for (const auto& cert : lim.certificate)
                    if (!cert.kept && !cert.contribution.is_zero()) rates.insert(cert.decay);
                for (const auto& r : rates)
                    entry.decay += (entry.decay.empty() ? "" : ", ") + r;
                if (!lim.value.is_zero()) rep.free = false;
                rep.entries.push_back(std::move(entry));
            }
    if (kind == GroupKind::symmetric) {
        // injected f_{aaa}=1 single-trace triple: value proportional to
        // M(1,1,1,n3=1,N); compare N=8 vs N=32
        double v8 = std::sqrt(sn_m_closed_form(1, 1, 1, 1, 8).get_d());
        double v32 = std::sqrt(sn_m_closed_form(1, 1, 1, 1, 32).get_d());
        rep.scaling_exponent = std::log(v32 / v8) / std::log(32.0 / 8.0);
        rep.notes.push_back("single-trace triple scaling from closed form at N=8 vs N=32");
    } else if (kind == GroupKind::general_linear) {
        rep.notes.push_back("single-trace triples decay per class certificates above");
    }
    return rep;
}

} // namespace orblab
