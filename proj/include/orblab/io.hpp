#ifndef ORBLAB_IO_HPP
#define ORBLAB_IO_HPP

#include <string>

#include "orblab/orbits.hpp"
#include "orblab/structure.hpp"
#include "orblab/twisted.hpp"

namespace orblab {

// {"order": n, "coeffs": ["p/q", ...]}
std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

// [{"cycles": {"k": m, ...}, "weight": "p/q"}, ...]
std::string cycle_index_to_json(const CycleIndex& zi);

// "p/q" for rationals, {"rad": "s", "coef": "r/s"} for single radicals,
// double fallback otherwise (never produced by the bundled pipelines)
std::string scalar_to_json_value(const Scalar& v);
Scalar scalar_from_json_value(const std::string& text);

std::string cycle_type_to_string(const CycleTypeKey& ct); // e.g. "1^4 2^2"

// CSV: family,seed,kind,n,N,count
std::string orbit_table_to_csv(const OrbitTable& t);

// CSV: group,N,q,c,min_rho_num,min_rho_den,bound_num,bound_den,attained_by_cycle_type
std::string twisted_report_to_csv(const OrbifoldLimitReport& rep, int q);

} // namespace orblab

#endif
