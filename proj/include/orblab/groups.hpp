#ifndef ORBLAB_GROUPS_HPP
#define ORBLAB_GROUPS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "orblab/series.hpp"

namespace orblab {

// Points are 0-based. The group acts on points on the right: y = x . sigma,
// realized as images[x]. Functions transform as (sigma g)(x) = g(x sigma^{-1}).
struct Permutation {
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }
    int apply(int x) const { return images.at(static_cast<size_t>(x)); }

    Permutation inverse() const;
    // (this then other): x . (a*b) = (x . a) . b
    Permutation then(const Permutation& other) const;
    static Permutation identity(int degree);
    bool is_valid() const;
    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return images < o.images; }
};

CycleTypeKey cycle_type(const Permutation& p);

enum class GroupKind { symmetric, cyclic, general_linear };

extern long default_element_budget; // 2e7; overridable (CLI: --budget / ORBLAB_BUDGET)

// A named finite permutation action: S_N, Z_N, or GL(N,q) on F_q^N.
// Immutable except for a lazily cached cycle index.
class PermGroupHandle {
  public:
    GroupKind kind() const { return kind_; }
    int param_n() const { return n_; }
    int q() const { return q_; }
    int degree() const { return degree_; }
    const Int& order() const { return order_; }

    // Deterministic element stream. S_N and Z_N enumerate in lexicographic
    // image order; GL streams invertible matrices in lexicographic
    // row-major entry order, converted to permutations via v -> sum v_i q^{i-1}.
    void for_each_element(const std::function<void(const Permutation&)>& fn,
                          long budget = default_element_budget) const;

    // Materialized element list (throws BudgetExceeded when too large).
    std::vector<Permutation> elements(long budget = default_element_budget) const;

    // Cached; S_N uses the partition closed form, Z_N the divisor formula,
    // GL full element streaming.
    const CycleIndex& cycle_index(long budget = default_element_budget) const;

    std::string spec_string() const; // "S:<N>", "Z:<N>", "GL:<N>:<q>"

    friend PermGroupHandle build_group(GroupKind kind, int N, std::optional<int> q);

  private:
    GroupKind kind_{};
    int n_ = 0;
    int q_ = 0; // 0 unless general_linear
    int degree_ = 0;
    Int order_;
    mutable std::shared_ptr<const CycleIndex> cycle_index_cache_;
};

PermGroupHandle build_group(GroupKind kind, int N, std::optional<int> q = std::nullopt);
PermGroupHandle parse_group_spec(const std::string& spec); // "S:3", "Z:4", "GL:2:2"

struct StabilizerInfo {
    Int setwise_order;
    Int pointwise_order;
    // Restriction group G(K): permutations of K written in positions of the
    // sorted subset (degree |K|). Satisfies setwise = pointwise * |restriction|.
    std::vector<Permutation> restriction;
};

// Setwise/pointwise stabilizers of K and the restriction group. Closed forms
// for the symmetric kind, element enumeration otherwise.
StabilizerInfo stabilizers(const PermGroupHandle& g, const std::vector<int>& K,
                           long budget = default_element_budget);

// Exact |GL(N,q)| and its ratio to q^{N^2} * prod_{j=1..N}(1 - q^{-j}).
struct GlOrderAsymptotic {
    Int exact;
    Rat ratio;
};
GlOrderAsymptotic gl_order_asymptotic(int N, int q);

// GL helpers shared with orbits/structure: encoding of F_q^N points.
std::vector<int> gl_decode_point(int x, int N, int q);
int gl_encode_point(const std::vector<int>& v, int q);

// Cycle index of S_N via partitions of N with weight 1/z_lambda.
CycleIndex symmetric_cycle_index(int N);

} // namespace orblab

#endif
