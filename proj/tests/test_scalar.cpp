#include "doctest.h"

#include "orblab/scalar.hpp"

using namespace orblab;

TEST_CASE("squarefree_split") {
    CHECK(squarefree_split(Int(8)) == std::pair{Int(2), Int(2)});
    CHECK(squarefree_split(Int(12)) == std::pair{Int(3), Int(2)});
    CHECK(squarefree_split(Int(1)) == std::pair{Int(1), Int(1)});
    CHECK(squarefree_split(Int(49)) == std::pair{Int(1), Int(7)});
}

TEST_CASE("sqrt_of reduces radicands and perfect squares") {
    CHECK(Scalar::sqrt_of(Rat(4)) == Scalar(Rat(2)));
    CHECK(Scalar::sqrt_of(Rat(4, 9)) == Scalar(Rat(2, 3)));
    CHECK(Scalar::sqrt_of(Rat(8)) == Scalar(Rat(2)) * Scalar::sqrt_of(Rat(2)));
    CHECK(Scalar::sqrt_of(Rat(1, 2)) == Scalar::sqrt_of(Rat(2)) / Scalar(Rat(2)));
    CHECK(Scalar::sqrt_of(Rat(0)).is_zero());
}

TEST_CASE("radical arithmetic is exact") {
    Scalar r2 = Scalar::sqrt_of(Rat(2));
    CHECK(r2 * r2 == Scalar(Rat(2)));
    CHECK((Scalar(1) + r2) * (Scalar(1) - r2) == Scalar(Rat(-1)));

    Scalar r3 = Scalar::sqrt_of(Rat(3));
    CHECK(r2 * r3 == Scalar::sqrt_of(Rat(6)));
    CHECK((r2 + r3) - r3 == r2);
    CHECK((r2 + r3) * (r2 + r3) == Scalar(5) + Scalar(2) * Scalar::sqrt_of(Rat(6)));
    CHECK(-(r2 - r3) == r3 - r2);
}

TEST_CASE("division against rationals and single radicals") {
    Scalar r2 = Scalar::sqrt_of(Rat(2));
    CHECK((Scalar(6) / Scalar(3)) == Scalar(2));
    CHECK((Scalar(2) / r2) == r2);
    CHECK(((r2 + Scalar(1)) / r2) == Scalar(1) + r2 / Scalar(2));
    // multi-term divisor is out of scope
    CHECK_THROWS_AS(Scalar(1) / (r2 + Scalar(1)), ValidationError);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), ValidationError);
}

TEST_CASE("rationality queries and rendering") {
    Scalar r2 = Scalar::sqrt_of(Rat(2));
    CHECK(Scalar(Rat(3, 2)).is_rational());
    CHECK(Scalar(Rat(3, 2)).rational_value() == Rat(3, 2));
    CHECK_FALSE(r2.is_rational());
    CHECK(Scalar().is_zero());
    CHECK(Scalar().is_rational());
    CHECK(Scalar().rational_value() == Rat(0));

    CHECK(Scalar(Rat(3, 2)).to_string() == "3/2");
    CHECK(r2.to_double() == doctest::Approx(1.41421356237).epsilon(1e-10));
}
