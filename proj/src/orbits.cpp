#include "orblab/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <cmath>
#include <numeric>
#include <set>

namespace orblab {

LabelSet LabelSet::from_series(const TruncatedSeries& a) {
    if (a.coeff(0) != 1) throw ValidationError("seed character must have a_0 = 1");
    LabelSet ls;
    for (int m = 1; m <= a.order(); ++m) {
        const Rat& am = a.coeff(m);
        if (am.get_den() != 1 || am < 0)
            throw ValidationError("seed coefficients must be nonnegative integers");
        for (unsigned long i = 0; i < am.get_num().get_ui(); ++i) ls.weights.push_back(m);
    }
    return ls;
}

int WeightedFunction::weight(const LabelSet& labels) const {
    int w = 0;
    for (const auto& [pt, lab] : support) w += labels.weights.at(static_cast<size_t>(lab));
    return w;
}

WeightedFunction WeightedFunction::transformed(const Permutation& sigma) const {
    WeightedFunction out;
    out.degree = degree;
    for (const auto& [pt, lab] : support) out.support[sigma.apply(pt)] = lab;
    return out;
}

namespace {

// All functions of exact weight n on `degree` points, support listed in
// increasing point order.
std::vector<WeightedFunction> enumerate_weight_n(int degree, const LabelSet& labels, int n,
                                                 long state_budget) {
    std::vector<WeightedFunction> out;
    WeightedFunction cur;
    cur.degree = degree;
    std::function<void(int, int)> rec = [&](int next_point, int remaining) {
        if (remaining == 0) {
            if (static_cast<long>(out.size()) >= state_budget)
                throw BudgetExceeded("weight-" + std::to_string(n) +
                                     " state enumeration exceeds budget");
            out.push_back(cur);
            return;
        }
        for (int p = next_point; p < degree; ++p) {
            for (int l = 0; l < labels.count(); ++l) {
                int w = labels.weights[static_cast<size_t>(l)];
                if (w > remaining) continue;
                cur.support[p] = l;
                rec(p + 1, remaining - w);
                cur.support.erase(p);
            }
        }
    };
    rec(0, n);
    return out;
}

struct UnionFind {
    std::vector<int> parent, size;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)), size(static_cast<size_t>(n), 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int i) {
        while (parent[static_cast<size_t>(i)] != i) {
            parent[static_cast<size_t>(i)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(i)])];
            i = parent[static_cast<size_t>(i)];
        }
        return i;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
    }
};

// Orbit partition of the weight-n functions under the full element stream.
std::pair<std::vector<WeightedFunction>, std::vector<int>> orbit_partition(
    const PermGroupHandle& g, const LabelSet& labels, int n, long budget, long state_budget) {
    std::vector<WeightedFunction> states = enumerate_weight_n(g.degree(), labels, n, state_budget);
    std::map<WeightedFunction, int> index;
    for (int i = 0; i < static_cast<int>(states.size()); ++i)
        index[states[static_cast<size_t>(i)]] = i;
    UnionFind uf(static_cast<int>(states.size()));
    g.for_each_element(
        [&](const Permutation& sigma) {
            for (int i = 0; i < static_cast<int>(states.size()); ++i) {
                WeightedFunction moved = states[static_cast<size_t>(i)].transformed(sigma);
                uf.unite(i, index.at(moved));
            }
        },
        budget);
    std::vector<int> roots(states.size());
    for (int i = 0; i < static_cast<int>(states.size()); ++i) roots[static_cast<size_t>(i)] = uf.find(i);
    return {std::move(states), std::move(roots)};
}

} // namespace

OrbitTable bn_table(const PermGroupHandle& g, const TruncatedSeries& a, int n_max, long budget) {
    if (n_max < 0) throw ValidationError("n_max must be >= 0");
    TruncatedSeries z = cycle_index_character(g.cycle_index(budget), a, n_max);
    OrbitTable t;
    t.family = g.spec_string();
    t.kind = "bn";
    for (int n = 0; n <= n_max; ++n)
        t.rows.push_back({n, g.param_n(), Int(z.coeff(n).get_num())});
    return t;
}

Int direct_orbit_count(const PermGroupHandle& g, const LabelSet& labels, int n, long budget,
                       long state_budget) {
    auto [states, roots] = orbit_partition(g, labels, n, budget, state_budget);
    std::set<int> distinct(roots.begin(), roots.end());
    return Int(static_cast<long>(distinct.size()));
}

std::vector<WeightedFunction> orbit_representatives(const PermGroupHandle& g,
                                                    const LabelSet& labels, int n, long budget,
                                                    long state_budget) {
    auto [states, roots] = orbit_partition(g, labels, n, budget, state_budget);
    std::map<int, WeightedFunction> reps;
    for (size_t i = 0; i < states.size(); ++i) {
        auto it = reps.find(roots[i]);
        if (it == reps.end() || states[i] < it->second) reps[roots[i]] = states[i];
    }
    std::vector<WeightedFunction> out;
    for (auto& [root, wf] : reps) out.push_back(std::move(wf));
    std::sort(out.begin(), out.end());
    return out;
}

OrbitTable fn_table(const PermGroupHandle& g, int n_max, long budget) {
    OrbitTable t;
    t.family = g.spec_string();
    t.kind = "fn";
    if (g.kind() == GroupKind::symmetric) {
        for (int n = 0; n <= n_max; ++n)
            t.rows.push_back({n, g.param_n(), Int(n <= g.param_n() ? 1 : 0)});
        return t;
    }
    // f_n = Burnside count of n-subsets: substitute s_k -> 1 + t^k
    TruncatedSeries subset_seed(n_max);
    subset_seed.set_coeff(0, Rat(1));
    if (n_max >= 1) subset_seed.set_coeff(1, Rat(1));
    TruncatedSeries z = cycle_index_character(g.cycle_index(budget), subset_seed, n_max);
    for (int n = 0; n <= n_max; ++n)
        t.rows.push_back({n, g.param_n(), Int(z.coeff(n).get_num())});
    return t;
}

Int direct_fn_count(const PermGroupHandle& g, int n, long budget, long state_budget) {
    LabelSet marker;
    marker.weights = {1};
    return direct_orbit_count(g, marker, n, budget, state_budget);
}

FnBounds gl_fn_bounds(int n, int q) {
    if (n < 0) throw ValidationError("n must be >= 0");
    FnBounds b;
    b.upper = 0;
    for (int k = 0; k <= n; ++k)
        b.upper += pow_int(Int(q), static_cast<unsigned long>(k) * static_cast<unsigned long>(n - k));
    int half = n / 2;
    b.lower = binomial(pow_int(Int(q), static_cast<unsigned long>(half)),
                       static_cast<unsigned long>(half));
    b.odd_heuristic = (n % 2 != 0);
    return b;
}

OligoReport oligomorphic_check(GroupKind kind, int q, const TruncatedSeries& a, int n_max,
                               int N_max, long budget) {
    if (N_max < 3) throw ValidationError("N_max must be >= 3");
    OligoReport rep;
    std::vector<PermGroupHandle> family;
    for (int N = 1; N <= N_max; ++N)
        family.push_back(kind == GroupKind::general_linear ? build_group(kind, N, q)
                                                           : build_group(kind, N));
    rep.family = family.back().spec_string() + " family";

    // A(n) = sum_{j<=n} a_j for the bound b_n <= A(n)^n f_n
    std::vector<Int> A(static_cast<size_t>(n_max) + 1, Int(0));
    for (int n = 0; n <= n_max; ++n) {
        A[static_cast<size_t>(n)] = (n > 0) ? A[static_cast<size_t>(n - 1)] : Int(0);
        if (n <= a.order()) A[static_cast<size_t>(n)] += Int(a.coeff(n).get_num());
    }

    for (const auto& g : family) {
        OrbitTable bt = bn_table(g, a, n_max, budget);
        OrbitTable ft = fn_table(g, n_max, budget);
        for (int n = 0; n <= n_max; ++n) {
            const Int& bn = bt.rows[static_cast<size_t>(n)].count;
            rep.bn_by_N[n].push_back(bn);
            Int bound = pow_int(A[static_cast<size_t>(n)], static_cast<unsigned long>(n)) *
                        ft.rows[static_cast<size_t>(n)].count;
            if (n > 0 && bn > bound) {
                rep.bound_ok = false;
                rep.notes.push_back("bound b_n <= A(n)^n f_n violated at n=" + std::to_string(n) +
                                    " N=" + std::to_string(g.param_n()));
            }
        }
    }

    bool all_stable = true;
    bool any_growing = false;
    for (int n = 0; n <= n_max; ++n) {
        const auto& vals = rep.bn_by_N.at(n);
        int stable_from = -1;
        for (int i = static_cast<int>(vals.size()) - 2; i >= 0; --i) {
            if (vals[static_cast<size_t>(i)] == vals.back())
                stable_from = i + 1; // N = i+1
            else
                break;
        }
        rep.stabilization_N[n] = stable_from;
        if (stable_from < 0) {
            all_stable = false;
            size_t m = vals.size();
            if (m >= 3 && vals[m - 1] > vals[m - 2] && vals[m - 2] >= vals[m - 3])
                any_growing = true;
        }
    }

    // restriction-group stabilization for sampled K at the last two N
    std::vector<std::vector<int>> samples;
    if (kind == GroupKind::general_linear) {
        samples.push_back({1});
        if (family.back().degree() > q) samples.push_back({1, q});
    } else {
        samples.push_back({0});
        samples.push_back({0, 1});
    }
    for (const auto& K : samples) {
        bool ok = true;
        try {
            const auto& g1 = family[static_cast<size_t>(N_max - 2)];
            const auto& g2 = family[static_cast<size_t>(N_max - 1)];
            if (static_cast<int>(K.size()) <= g1.degree()) {
                auto s1 = stabilizers(g1, K, budget);
                auto s2 = stabilizers(g2, K, budget);
                ok = s1.restriction == s2.restriction;
            }
        } catch (const BudgetExceeded&) {
            rep.notes.push_back("restriction sample skipped (budget)");
            continue;
        }
        if (!ok) {
            all_stable = false;
            rep.notes.push_back("restriction group not stabilized for sampled K");
        }
    }

    if (all_stable)
        rep.verdict = OligoVerdict::consistent;
    else if (any_growing)
        rep.verdict = OligoVerdict::not_oligomorphic;
    else
        rep.verdict = OligoVerdict::inconclusive;
    if (rep.verdict == OligoVerdict::inconclusive)
        rep.notes.push_back("inconclusive: N_max too small to decide stabilization");
    return rep;
}

double log_of_int(const Int& v) {
    if (v <= 0) throw ValidationError("log of nonpositive count");
    signed long e = 0;
    double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

std::vector<GrowthEstimate> growth_exponent(const std::vector<Int>& counts_by_n) {
    if (counts_by_n.size() < 3) throw ValidationError("need at least 3 entries");
    std::vector<GrowthEstimate> out;
    double prev = 0.0;
    for (size_t n = 1; n < counts_by_n.size(); ++n) {
        if (counts_by_n[n] <= 0) throw ValidationError("zero count in growth table");
        double alpha = log_of_int(counts_by_n[n]) / static_cast<double>(n * n);
        out.push_back({static_cast<int>(n), alpha, out.empty() ? 0.0 : alpha - prev});
        prev = alpha;
    }
    return out;
}

} // namespace orblab
