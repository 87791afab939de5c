#include "doctest.h"

#include <cmath>

#include "orblab/orbits.hpp"

using namespace orblab;

namespace {

TruncatedSeries make(int order, std::vector<long> v) {
    TruncatedSeries s(order);
    for (size_t i = 0; i < v.size(); ++i) s.set_coeff(static_cast<int>(i), Rat(v[i]));
    return s;
}

std::vector<Int> counts(const OrbitTable& t) {
    std::vector<Int> out;
    for (const auto& r : t.rows) out.push_back(r.count);
    return out;
}

} // namespace

TEST_CASE("bn_table examples") {
    TruncatedSeries a = make(4, {1, 1});
    PermGroupHandle s3 = build_group(GroupKind::symmetric, 3);
    CHECK(counts(bn_table(s3, a, 3)) == std::vector<Int>{1, 1, 1, 1});

    PermGroupHandle gl22 = build_group(GroupKind::general_linear, 2, 2);
    CHECK(counts(bn_table(gl22, a, 4)) == std::vector<Int>{1, 2, 2, 2, 1});
}

TEST_CASE("bn_table equals direct union-find counting") {
    TruncatedSeries a2 = make(4, {1, 1, 1});
    LabelSet ls = LabelSet::from_series(a2);
    for (const char* spec : {"S:4", "Z:5", "GL:2:2"}) {
        PermGroupHandle g = parse_group_spec(spec);
        OrbitTable t = bn_table(g, a2, 4);
        for (int n = 0; n <= 4; ++n) {
            CAPTURE(spec);
            CAPTURE(n);
            CHECK(t.rows[static_cast<size_t>(n)].count == direct_orbit_count(g, ls, n));
        }
    }
}

TEST_CASE("orbit representatives") {
    TruncatedSeries a = make(4, {1, 1});
    LabelSet ls = LabelSet::from_series(a);

    PermGroupHandle s2 = build_group(GroupKind::symmetric, 2);
    auto reps = orbit_representatives(s2, ls, 1);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].support == std::map<int, int>{{0, 0}});

    PermGroupHandle gl22 = build_group(GroupKind::general_linear, 2, 2);
    auto reps2 = orbit_representatives(gl22, ls, 1);
    REQUIRE(reps2.size() == 2);
    CHECK(reps2[0].support == std::map<int, int>{{0, 0}});
    CHECK(reps2[1].support == std::map<int, int>{{1, 0}});

    PermGroupHandle gl32 = build_group(GroupKind::general_linear, 3, 2);
    CHECK(orbit_representatives(gl32, ls, 3).size() == 3);
    // representative count always equals the Burnside b_n
    for (int n = 0; n <= 4; ++n)
        CHECK(Int(static_cast<long>(orbit_representatives(gl32, ls, n).size())) ==
              bn_table(gl32, a, 4).rows[static_cast<size_t>(n)].count);
}

TEST_CASE("fn_table examples and subset oracle") {
    PermGroupHandle s6 = build_group(GroupKind::symmetric, 6);
    CHECK(counts(fn_table(s6, 4)) == std::vector<Int>{1, 1, 1, 1, 1});

    PermGroupHandle gl32 = build_group(GroupKind::general_linear, 3, 2);
    OrbitTable f = fn_table(gl32, 3);
    CHECK(f.rows[2].count == 2);
    CHECK(f.rows[3].count == 3);
    for (int n = 0; n <= 3; ++n)
        CHECK(f.rows[static_cast<size_t>(n)].count == direct_fn_count(gl32, n));

    PermGroupHandle z6 = build_group(GroupKind::cyclic, 6);
    OrbitTable fz = fn_table(z6, 3);
    for (int n = 0; n <= 3; ++n)
        CHECK(fz.rows[static_cast<size_t>(n)].count == direct_fn_count(z6, n));
}

TEST_CASE("gl_fn_bounds") {
    FnBounds b2 = gl_fn_bounds(2, 2);
    CHECK(b2.lower == 2);
    CHECK(b2.upper == 4);
    CHECK_FALSE(b2.odd_heuristic);

    FnBounds b0 = gl_fn_bounds(0, 2);
    CHECK(b0.lower == 1);
    CHECK(b0.upper == 1);

    CHECK(gl_fn_bounds(4, 2).upper == 34);
    CHECK(gl_fn_bounds(3, 2).odd_heuristic);
}

TEST_CASE("f_n <= b_n with a weight-1 label present") {
    TruncatedSeries a = make(4, {1, 1, 1});
    PermGroupHandle gl32 = build_group(GroupKind::general_linear, 3, 2);
    OrbitTable b = bn_table(gl32, a, 4);
    OrbitTable f = fn_table(gl32, 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(f.rows[static_cast<size_t>(n)].count <= b.rows[static_cast<size_t>(n)].count);
}

TEST_CASE("oligomorphic_check verdicts") {
    TruncatedSeries a1 = make(4, {1, 1});
    OligoReport s = oligomorphic_check(GroupKind::symmetric, 0, a1, 4, 8);
    CHECK(s.verdict == OligoVerdict::consistent);
    CHECK(s.bound_ok);
    for (int n = 1; n <= 4; ++n) CHECK(s.stabilization_N.at(n) <= n);

    TruncatedSeries a2 = make(4, {1, 1, 1});
    OligoReport z = oligomorphic_check(GroupKind::cyclic, 0, a2, 4, 12);
    CHECK(z.verdict == OligoVerdict::not_oligomorphic);

    OligoReport gl = oligomorphic_check(GroupKind::general_linear, 2, a1, 3, 4);
    CHECK(gl.verdict == OligoVerdict::consistent);
    CHECK(gl.bound_ok);
}

TEST_CASE("growth_exponent") {
    std::vector<Int> synth;
    for (int n = 0; n <= 4; ++n) synth.push_back(pow_int(Int(2), static_cast<unsigned long>(n * n)));
    auto est = growth_exponent(synth);
    for (const auto& e : est) CHECK(e.alpha == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    std::vector<Int> ones(5, Int(1));
    for (const auto& e : growth_exponent(ones)) CHECK(e.alpha == doctest::Approx(0.0));

    CHECK_THROWS_AS(growth_exponent({Int(1), Int(0), Int(2)}), ValidationError);
}
