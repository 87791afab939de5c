#include "doctest.h"

#include "orblab/io.hpp"

using namespace orblab;

TEST_CASE("series JSON round trip is exact") {
    TruncatedSeries s(3, {Rat(1), Rat(744), Rat(-1, 2), Rat(0)});
    CHECK(series_from_json(series_to_json(s)) == s);
    CHECK(series_to_json(s).find("744") != std::string::npos);
    CHECK_THROWS_AS(series_from_json("{\"coeffs\": []}"), ValidationError);
    CHECK_THROWS_AS(series_from_json("not json"), ValidationError);
}

TEST_CASE("cycle index JSON rendering") {
    PermGroupHandle s2 = build_group(GroupKind::symmetric, 2);
    std::string j = cycle_index_to_json(s2.cycle_index());
    CHECK(j.find("\"cycles\"") != std::string::npos);
    CHECK(j.find("1/2") != std::string::npos);
}

TEST_CASE("scalar JSON values round trip") {
    for (const Scalar& v :
         {Scalar(Rat(3, 2)), Scalar(0), Scalar::sqrt_of(Rat(2)),
          Scalar(Rat(-2, 3)) * Scalar::sqrt_of(Rat(6))}) {
        CHECK(scalar_from_json_value(scalar_to_json_value(v)) == v);
    }
    CHECK(scalar_to_json_value(Scalar(Rat(3, 2))) == "\"3/2\"");
    CHECK(scalar_to_json_value(Scalar::sqrt_of(Rat(2))).find("rad") != std::string::npos);
}

TEST_CASE("cycle type formatting") {
    CHECK(cycle_type_to_string({{1, 4}, {2, 2}}) == "1^4 2^2");
    CHECK(cycle_type_to_string({{3, 1}}) == "3^1");
}

TEST_CASE("orbit table CSV") {
    TruncatedSeries a(2, {Rat(1), Rat(1), Rat(0)});
    PermGroupHandle s3 = build_group(GroupKind::symmetric, 3);
    OrbitTable t = bn_table(s3, a, 2);
    t.family = "S:3";
    t.seed = "unit1";
    std::string csv = orbit_table_to_csv(t);
    CHECK(csv.rfind("family,seed,kind,n,N,count", 0) == 0);
    CHECK(csv.find("S:3,unit1") != std::string::npos);
}

TEST_CASE("twisted report CSV") {
    OrbifoldLimitReport rep = orbifold_limit_report(GroupKind::general_linear, 2, Rat(24), 2, 3);
    std::string csv = twisted_report_to_csv(rep, 2);
    CHECK(csv.rfind("group,N,q,c,min_rho_num,min_rho_den,bound_num,bound_den,"
                    "attained_by_cycle_type", 0) == 0);
    CHECK(csv.find("\n") != std::string::npos);
}
