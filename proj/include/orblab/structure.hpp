#ifndef ORBLAB_STRUCTURE_HPP
#define ORBLAB_STRUCTURE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orblab/orbits.hpp"
#include "orblab/seed.hpp"

namespace orblab {

// Functions g: X_N -> Phi are WeightedFunctions whose support values are
// seed label indices minus 1 (non-vacuum labels only).
LabelSet seed_label_set(const SeedTable& seed);

// C(g1,g2,g3) = prod_x f_{g1(x) g2(x) g3(x)}; vacuum factors contribute 1.
Scalar tensor_constant(const WeightedFunction& g1, const WeightedFunction& g2,
                       const WeightedFunction& g3, const SeedTable& seed);

struct SymmetrizedState {
    WeightedFunction rep;
    Int A;      // reduced normalization: #{sigma in G(K) fixing the labeling}
    Int A_full; // A * |G| * |Ghat^K|
};

SymmetrizedState normalization(const WeightedFunction& g, const PermGroupHandle& G,
                               const SeedTable& seed, long budget = default_element_budget);

// Eq-by-definition oracle: (prod A_full^{-1/2}) * sum over G^3 of C.
Scalar bruteforce_constant(const WeightedFunction& g1, const WeightedFunction& g2,
                           const WeightedFunction& g3, const PermGroupHandle& G,
                           const SeedTable& seed, long budget = 200);

struct CosetClass {
    std::array<std::vector<int>, 3> supports; // canonical (A1, A2, A3), sorted
    std::array<Permutation, 3> witnesses;     // kappa_i with K_i . kappa_i = A_i
    int n3 = 0;           // |A1 n A2 n A3| (sets) or dim of span intersection (GL)
    Rat M_squared;        // pointwise-stabilizer ratio (the theorem's M^2)
    Int pointwise_union_order;  // |Ghat^{A1 u A2 u A3}|
    Int setwise_sim_order;      // |{tau : A_i tau = A_i for all i}|
    // 2*U - sum K (sets) or 2*dim<union> - sum dim spans (GL); the large-N
    // exponent driving M -> 1 (zero) or M -> 0 (negative)
    int limit_exponent = 0;
    bool covering_integral = true; // union size equals (K1+K2+K3-n3)/2
};

// Diagonal classes of support triples (A_i in the G-orbit of K_i), with
// multiplicity data.
std::vector<CosetClass> coset_analysis(const std::vector<int>& K1, const std::vector<int>& K2,
                                       const std::vector<int>& K3, const PermGroupHandle& G,
                                       long budget = default_element_budget);

// (N-K1)!(N-K2)!(N-K3)! / (N! * (N-U)!^2) with U = (K1+K2+K3-n3)/2.
// Throws ValidationError when U is not integral (configuration contributes 0).
Rat sn_m_closed_form(int K1, int K2, int K3, int n3, int N);

// Theorem route: class sum with M factors and restriction-group relabelings.
// Exactly equals bruteforce_constant.
Scalar factored_constant(const WeightedFunction& g1, const WeightedFunction& g2,
                         const WeightedFunction& g3, const PermGroupHandle& G,
                         const SeedTable& seed, long budget = default_element_budget);

struct ClassCertificate {
    CosetClass cls;
    bool kept = false;
    std::string decay; // e.g. "O(N^{-1/2})", "O(q^{-2N})", or "limit 1"
    Scalar contribution;
};

struct LimitResult {
    Scalar value;
    int reference_N = 0;
    std::vector<ClassCertificate> certificate;
};

// N -> infinity structure constant via the closed-form M limits; classes with
// limit_exponent 0 are kept (M -> 1), negative ones dropped with their decay
// rate recorded. Supports symmetric and general_linear families.
LimitResult limit_constant(const WeightedFunction& g1, const WeightedFunction& g2,
                           const WeightedFunction& g3, GroupKind kind, int q,
                           const SeedTable& seed, long budget = default_element_budget);

struct JacobiWitness {
    std::array<int, 4> labels; // (e, a, b, c)
    long m = 0, n = 0, k = 0;
    Scalar lhs, rhs;
};

struct JacobiReport {
    bool ok = true;
    long checked = 0;
    long skipped_insufficient_cutoff = 0;
    std::optional<JacobiWitness> witness;
};

// Exhaustive Borcherds-identity check on a structure-constant table for all
// label quadruples with weights <= cap and all admissible (m,n,k).
JacobiReport jacobi_check(const SeedTable& table, int cap);

// Parse/serialize + full validation (structure and Jacobi closure).
SeedTable load_seed(const std::string& json_text);
std::string seed_to_json(const SeedTable& seed, const std::string& group_spec = "",
                         int N = 0);

// Structure-constant table of V^G up to weight cap, labels named g<n>_<i>
// in representative order; computed with bruteforce_constant.
SeedTable fixed_point_table(const PermGroupHandle& G, const SeedTable& seed, int cap,
                            long budget = 200);

struct FreenessEntry {
    std::array<WeightedFunction, 3> states;
    Scalar limit_value;
    std::string decay;
};

struct FreenessReport {
    bool free = true;
    std::vector<FreenessEntry> entries;
    // finite-N scaling of the injected f_{aaa}=1 single-trace triple via the
    // closed form, between N and 4N
    double scaling_exponent = 0.0;
    std::vector<std::string> notes;
};

FreenessReport freeness_report(GroupKind kind, int q, const SeedTable& seed, int cap,
                               long budget = default_element_budget);

} // namespace orblab

#endif
