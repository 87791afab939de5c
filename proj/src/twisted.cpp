#include "orblab/twisted.hpp"

namespace orblab {

Rat twisted_weight(const CycleTypeKey& ct, const Rat& c) {
    Rat sum(0);
    for (const auto& [t, m] : ct) {
        if (t < 1 || m < 0) throw ValidationError("invalid cycle type");
        if (t == 1) continue;
        sum += Rat(m) * (Rat(t) - Rat(1, static_cast<unsigned long>(t)));
    }
    Rat rho = c / Rat(24) * sum;
    rho.canonicalize();
    return rho;
}

TwistedWeightReport min_twisted_weight(const PermGroupHandle& G, const Rat& c, long budget) {
    TwistedWeightReport rep;
    rep.group = G.spec_string();
    rep.c = c;
    const CycleIndex& zi = G.cycle_index(budget);
    bool first = true;
    for (const auto& [ct, w] : zi.terms()) {
        int moved = 0;
        for (const auto& [t, m] : ct)
            if (t > 1) moved += t * static_cast<int>(m);
        if (moved == 0) continue; // identity class
        TwistedClassRow row;
        row.cycle_type = ct;
        row.rho = twisted_weight(ct, c);
        row.moved_points = moved;
        Rat moved_bound = Rat(moved) * c / Rat(32);
        moved_bound.canonicalize();
        row.attains_moved_bound = (row.rho == moved_bound);
        if (row.rho < moved_bound) rep.per_element_bound_ok = false;
        if (first || row.rho < rep.min_rho) {
            rep.min_rho = row.rho;
            rep.attained_by = ct;
        }
        if (first || moved_bound < rep.moved_bound_min) rep.moved_bound_min = moved_bound;
        first = false;
        rep.classes.push_back(std::move(row));
    }
    if (first) {
        rep.min_rho = Rat(0); // trivial group: no nontrivial classes
        rep.moved_bound_min = Rat(0);
    }
    if (G.kind() == GroupKind::general_linear) {
        rep.gl_bound_applicable = true;
        rep.gl_bound = Rat(G.q() - 1) * Rat(G.param_n()) * c / Rat(32);
        rep.gl_bound.canonicalize();
        rep.gl_bound_ok = !(rep.min_rho < rep.gl_bound);
        rep.gl_bound_equality = (rep.min_rho == rep.gl_bound);
    }
    return rep;
}

OrbifoldLimitReport orbifold_limit_report(GroupKind kind, int q, const Rat& c, int N_min,
                                          int N_max, long budget) {
    OrbifoldLimitReport rep;
    rep.c = c;
    switch (kind) {
        case GroupKind::symmetric: rep.family = "S"; break;
        case GroupKind::cyclic: rep.family = "Z"; break;
        case GroupKind::general_linear: rep.family = "GL:" + std::to_string(q); break;
    }
    for (int N = N_min; N <= N_max; ++N) {
        PermGroupHandle G = build_group(kind, N,
                                        kind == GroupKind::general_linear
                                            ? std::optional<int>(q)
                                            : std::nullopt);
        TwistedWeightReport w = min_twisted_weight(G, c, budget);
        OrbifoldLimitRow row;
        row.N = N;
        row.min_rho = w.min_rho;
        row.gl_bound = w.gl_bound_applicable ? w.gl_bound : Rat(0);
        row.attained_by = w.attained_by;
        rep.rows.push_back(std::move(row));
    }
    if (c == 0) {
        rep.verdict = "degenerate";
    } else if (kind == GroupKind::general_linear) {
        rep.verdict = "diverges";
    } else {
        rep.verdict = "persists";
    }
    return rep;
}

} // namespace orblab
