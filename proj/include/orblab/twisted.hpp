#ifndef ORBLAB_TWISTED_HPP
#define ORBLAB_TWISTED_HPP

#include <string>
#include <vector>

#include "orblab/groups.hpp"

namespace orblab {

// Conformal weight of the unique irreducible g-twisted module:
// rho_g = (c/24) * sum_t m_t * (t - 1/t); 1-cycles contribute 0.
Rat twisted_weight(const CycleTypeKey& ct, const Rat& c);

struct TwistedClassRow {
    CycleTypeKey cycle_type;
    Rat rho;
    int moved_points = 0;
    bool attains_moved_bound = false; // rho == moved * c / 32 (all 2-cycles)
};

struct TwistedWeightReport {
    std::string group;
    Rat c;
    std::vector<TwistedClassRow> classes;    // nontrivial cycle types only
    Rat min_rho;                             // over nontrivial classes
    CycleTypeKey attained_by;
    Rat moved_bound_min;                     // min over classes of moved*c/32
    bool per_element_bound_ok = true;        // rho >= moved*c/32 everywhere
    bool gl_bound_applicable = false;
    Rat gl_bound;                            // (q-1)*N*c/32
    bool gl_bound_ok = true;                 // min_rho >= gl_bound (non-strict)
    bool gl_bound_equality = false;
};

// Exact min of rho_g over nontrivial elements, via the cached cycle index.
TwistedWeightReport min_twisted_weight(const PermGroupHandle& G, const Rat& c,
                                       long budget = default_element_budget);

struct OrbifoldLimitRow {
    int N = 0;
    Rat min_rho;
    Rat gl_bound;
    CycleTypeKey attained_by;
};

struct OrbifoldLimitReport {
    std::string family;
    Rat c;
    std::vector<OrbifoldLimitRow> rows;
    // "diverges" (GL: twisted weights grow with N), "persists" (S_N: constant
    // min), or "degenerate" (c = 0)
    std::string verdict;
};

OrbifoldLimitReport orbifold_limit_report(GroupKind kind, int q, const Rat& c, int N_min,
                                          int N_max, long budget = default_element_budget);

} // namespace orblab

#endif
