#ifndef ORBLAB_SEED_HPP
#define ORBLAB_SEED_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "orblab/scalar.hpp"
#include "orblab/series.hpp"

namespace orblab {

struct SeedLabel {
    std::string id;
    int wt = 0;
};

// Truncated orthonormal-basis structure-constant table of a seed VOA.
// Label index 0 is always the vacuum "vac" of weight 0. Constants absent
// from the map are zero; every label has weight <= cutoff.
class SeedTable {
  public:
    SeedTable(std::string name, int cutoff, std::vector<SeedLabel> labels,
              std::map<std::array<int, 3>, Scalar> constants);

    const std::string& name() const { return name_; }
    int cutoff() const { return cutoff_; }
    int label_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<SeedLabel>& labels() const { return labels_; }
    int weight(int label) const { return labels_.at(static_cast<size_t>(label)).wt; }
    int label_index(const std::string& id) const;

    const Scalar& f(int a, int b, int c) const;

    // shifted character a(t): a_n = number of labels of weight n
    TruncatedSeries character(int order) const;

    const std::map<std::array<int, 3>, Scalar>& constants() const { return constants_; }

    // structural checks: unique vacuum, f_vvv = 1, two-vacuum constants
    // vanish, vacuum-slot deltas. Jacobi closure is checked separately.
    void validate_structure() const;

  private:
    std::string name_;
    int cutoff_;
    std::vector<SeedLabel> labels_;
    std::map<std::array<int, 3>, Scalar> constants_;
};

// Builtin seeds.
SeedTable vacuum_seed();
SeedTable unit1_seed(); // one weight-1 label with trivial constants
// Orthonormal basis of the rank-1 free boson up to `cutoff` (<= 4), with
// constants from the normal-ordered-mode oracle.
SeedTable heisenberg_seed(int cutoff);
// name: "vac", "unit1", "heis:<cutoff>"
SeedTable builtin_seed(const std::string& name);

} // namespace orblab

#endif
