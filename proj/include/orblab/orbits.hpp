#ifndef ORBLAB_ORBITS_HPP
#define ORBLAB_ORBITS_HPP

#include <map>
#include <string>
#include <vector>

#include "orblab/groups.hpp"

namespace orblab {

// Non-vacuum label alphabet derived from a seed character: label i has
// weight weights[i] >= 1. Labels of equal weight are distinguishable.
struct LabelSet {
    std::vector<int> weights;

    int count() const { return static_cast<int>(weights.size()); }
    static LabelSet from_series(const TruncatedSeries& a);
};

// A function X_N -> Phi recorded by its non-vacuum support only.
struct WeightedFunction {
    int degree = 0;
    std::map<int, int> support; // point -> label index

    int weight(const LabelSet& labels) const;
    bool operator==(const WeightedFunction&) const = default;
    bool operator<(const WeightedFunction& o) const {
        return support < o.support; // lex on (sorted points, labels)
    }
    // pullback along sigma: (sigma g)(x) = g(x sigma^{-1}), support moves K -> K.sigma
    WeightedFunction transformed(const Permutation& sigma) const;
};

struct OrbitTableRow {
    int n = 0;
    int N = 0;
    Int count;
};

struct OrbitTable {
    std::string family;   // group spec of the family member(s)
    std::string seed;     // seed name or inline description
    std::string kind;     // "bn" or "fn"
    std::vector<OrbitTableRow> rows;
};

// b_n for n <= n_max via the cycle index (Burnside route).
OrbitTable bn_table(const PermGroupHandle& g, const TruncatedSeries& a, int n_max,
                    long budget = default_element_budget);

// Independent oracle: direct orbit count of weight-n functions by union-find
// over the full element stream.
Int direct_orbit_count(const PermGroupHandle& g, const LabelSet& labels, int n,
                       long budget = default_element_budget,
                       long state_budget = 10000000);

// One canonical representative per orbit (minimal under the lex order on
// (sorted support points, labels)); size equals the b_n entry.
std::vector<WeightedFunction> orbit_representatives(const PermGroupHandle& g,
                                                    const LabelSet& labels, int n,
                                                    long budget = default_element_budget,
                                                    long state_budget = 10000000);

// f_n: orbits of n-element subsets. Symmetric kind by closed form (1 for
// n <= N), otherwise by cycle-index substitution s_k -> 1 + t^k.
OrbitTable fn_table(const PermGroupHandle& g, int n_max,
                    long budget = default_element_budget);

// Brute-force subset-orbit oracle (union-find over n-subsets).
Int direct_fn_count(const PermGroupHandle& g, int n, long budget = default_element_budget,
                    long state_budget = 10000000);

// Growth envelopes for f_n(GL(N,q)) at large N:
// lower = C(q^floor(n/2), floor(n/2)), upper = sum_K q^{K(n-K)}.
// The upper bound is exact for every n; the lower bound is an asymptotic
// device that can exceed the true count at small n (C(4,2) = 6 > f_4 = 5
// for q = 2), so treat it as indicative below n ~ 6.
struct FnBounds {
    Int lower;
    Int upper;
    bool odd_heuristic = false; // lower bound uses floor(n/2) in both slots
};
FnBounds gl_fn_bounds(int n, int q);

enum class OligoVerdict { consistent, not_oligomorphic, inconclusive };

struct OligoReport {
    OligoVerdict verdict = OligoVerdict::inconclusive;
    std::string family;
    // per n: first N at which b_n has stabilized through N_max (-1 if never)
    std::map<int, int> stabilization_N;
    std::map<int, std::vector<Int>> bn_by_N; // n -> values for N = 1..N_max
    bool bound_ok = true;                    // b_n <= A(n)^n f_n everywhere checked
    std::vector<std::string> notes;
};

// Stabilization + growth diagnostics across the family G_1..G_{N_max}.
OligoReport oligomorphic_check(GroupKind kind, int q, const TruncatedSeries& a, int n_max,
                               int N_max, long budget = default_element_budget);

// log(b_n)/n^2 per n plus successive differences; no fitting.
struct GrowthEstimate {
    int n;
    double alpha;      // log(count)/n^2
    double delta;      // alpha_n - alpha_{n-1} (0 for the first entry)
};
std::vector<GrowthEstimate> growth_exponent(const std::vector<Int>& counts_by_n);

double log_of_int(const Int& v);

} // namespace orblab

#endif
