#include "doctest.h"

#include "orblab/series.hpp"

using namespace orblab;

namespace {

TruncatedSeries make(int order, std::vector<long> v) {
    TruncatedSeries s(order);
    for (size_t i = 0; i < v.size(); ++i) s.set_coeff(static_cast<int>(i), Rat(v[i]));
    return s;
}

} // namespace

TEST_CASE("series arithmetic basics") {
    TruncatedSeries one_t = make(2, {1, 1});
    CHECK((one_t * one_t) == make(2, {1, 2, 1}));

    TruncatedSeries g = make(3, {1, -1});
    CHECK(g.recip() == make(3, {1, 1, 1, 1}));

    TruncatedSeries j = make(2, {1, 744});
    CHECK((j * j).coeff(2) == Rat(553536));

    CHECK_THROWS_AS(make(2, {0, 1}).recip(), ValidationError);
}

TEST_CASE("series ops truncate to min order and never extend") {
    TruncatedSeries a = make(5, {1, 1, 1, 1, 1, 1});
    TruncatedSeries b = make(2, {1, 2, 3});
    CHECK((a * b).order() == 2);
    CHECK((a + b).order() == 2);
    CHECK(a.pow(3).order() == 5);
    CHECK(a.compose_power(2) == make(5, {1, 0, 1, 0, 1, 0}));
}

TEST_CASE("cycle index character: S_2, GL(2,2), trivial seed") {
    CycleIndex zs2(2, {{{{1, 2}}, Rat(1, 2)}, {{{2, 1}}, Rat(1, 2)}});
    TruncatedSeries a = make(2, {1, 1});
    CHECK(cycle_index_character(zs2, a, 2) == make(2, {1, 1, 1}));

    CycleIndex zgl(4, {{{{1, 4}}, Rat(1, 6)},
                       {{{1, 2}, {2, 1}}, Rat(1, 2)},
                       {{{1, 1}, {3, 1}}, Rat(1, 3)}});
    TruncatedSeries a4 = make(4, {1, 1});
    CHECK(cycle_index_character(zgl, a4, 4) == make(4, {1, 2, 2, 2, 1}));

    TruncatedSeries triv = make(4, {1});
    CHECK(cycle_index_character(zgl, triv, 4) == make(4, {1, 0, 0, 0, 0}));
}

TEST_CASE("cycle index character rejects non-integral output") {
    // corrupted weights (sum to 1 but not a group average)
    CycleIndex bad(2, {{{{1, 2}}, Rat(1, 3)}, {{{2, 1}}, Rat(2, 3)}});
    TruncatedSeries a = make(2, {1, 1});
    CHECK_THROWS_AS(cycle_index_character(bad, a, 2), ValidationError);
}

TEST_CASE("E8 theta and e8cubed character") {
    TruncatedSeries theta = e8_theta_series(3);
    CHECK(theta.coeff(0) == Rat(1));
    CHECK(theta.coeff(1) == Rat(240));
    CHECK(theta.coeff(2) == Rat(2160));
    CHECK(theta.coeff(3) == Rat(6720));

    TruncatedSeries a = e8cubed_character(3);
    CHECK(a.coeff(0) == Rat(1));
    CHECK(a.coeff(1) == Rat(744));
    CHECK(a.coeff(2) == Rat(196884));
    CHECK(a.coeff(3) == Rat(21493760));
    CHECK(a.is_character());
}

TEST_CASE("sym_limit_character") {
    CHECK(sym_limit_character(make(4, {1, 1}), 4) == make(4, {1, 1, 1, 1, 1}));
    // partitions of 4 into parts of size 1 and 2
    CHECK(sym_limit_character(make(4, {1, 1, 1}), 4).coeff(4) == Rat(3));
    CHECK(sym_limit_character(make(2, {1, 744}), 2).coeff(2) == Rat(744) * Rat(745) / Rat(2));
    TruncatedSeries neg(2);
    neg.set_coeff(0, Rat(1));
    neg.set_coeff(1, Rat(-1));
    CHECK_THROWS_AS(sym_limit_character(neg, 2), ValidationError);
}
