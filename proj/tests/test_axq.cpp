#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qshelf/axq.hpp"
#include "qshelf/errors.hpp"
#include "qshelf/shelves.hpp"
#include "qshelf/tri_series.hpp"

using namespace qshelf;

TEST_CASE("trivariate binomial multiply and divide are inverse")
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        TriSeries t = TriSeries::q_truncated(12);
        for (int q = 0; q < 12; ++q)
            for (int x = 0; x <= q; ++x)
                t.set(static_cast<int>(rng() % 3), x, q, static_cast<int>(rng() % 7) - 3);
        TriSeries u = t;
        u.mul_binomial(1, 1, 1, 1).div_binomial(1, 1, 1, 1);
        CHECK(compare(t, u).equal);
        u.mul_binomial(-1, 0, 1, 2).div_binomial(-1, 0, 1, 2);
        CHECK(compare(t, u).equal);
    }
}

TEST_CASE("x -> xq then division by xq")
{
    TriSeries t = TriSeries::q_truncated(10);
    t.set(0, 0, 0, 1);
    t.set(1, 2, 3, 5);
    TriSeries s = substitute_x(t, 1);
    CHECK(s.coeff(1, 2, 5) == Integer(5));
    TriSeries shifted = s;
    shifted.shift(0, 2, 2);
    TriSeries back = divide_exact_by_xq_power(shifted, 2);
    CHECK(compare(back, s).equal);
    CHECK_THROWS_AS(divide_exact_by_xq_power(s, 1), NotDivisible);
}

TEST_CASE("support check")
{
    TriSeries t = TriSeries::q_truncated(6);
    t.set(0, 1, 1, 1);
    CHECK_NOTHROW(assert_support(t, "ok"));
    t.set(2, 0, 1, 1);
    CHECK_THROWS_AS(assert_support(t, "bad"), NegativeExponent);
}

TEST_CASE("J and JJ routes agree")
{
    for (int k = 2; k <= 5; ++k) {
        for (int i = 1; i <= k + 1; ++i)
            CHECK(compare(J_tilde_combination(k, i, 24), J_tilde_single_sum(k, i, 24)).equal);
        for (int i = 1; i <= k; ++i) {
            TriSeries c = J_ghost_combination(k, i, 24);
            CHECK(compare(c, J_ghost_interpolation(k, i, 24)).equal);
            CHECK(compare(c, J_ghost_single_sum(k, i, 24)).equal);
        }
    }
}

TEST_CASE("J(k,0) is -a H(k,1)(xq) and sits outside the support")
{
    for (int k = 2; k <= 4; ++k) {
        TriSeries j0 = J_tilde_combination(k, 0, 16);
        TriSeries want = H_tilde_scaled(k, 1, 1, 0, 16, 16);
        want.shift(1, 0, 0);
        CHECK(compare(j0, -want).equal);
        CHECK(j0.support_violation());
    }
}

TEST_CASE("constant terms")
{
    for (int k = 2; k <= 4; ++k)
        for (int i = 1; i <= k; ++i) {
            CHECK(J_tilde(k, i, 10).coeff(0, 0, 0) == Integer(1));
            CHECK(J_tilde_ghost(k, i, 10).coeff(0, 0, 0) == Integer(1));
        }
}

TEST_CASE("dictionary specializations")
{
    for (int k = 2; k <= 4; ++k)
        for (int j = 0; j <= 2; ++j) {
            for (int i = 1; i <= k; ++i)
                CHECK(compare(specialize_dictionary(J_tilde(k, k - i + 1, 30), j, 30), closed_form_G(k, j, i, 30)).equal);
            for (int i = 2; i <= k; ++i)
                CHECK(compare(specialize_dictionary(J_tilde_ghost(k, k - i + 1, 30), j, 30),
                              closed_form_ghost(k, j, i, 30))
                          .equal);
        }
    for (int k = 2; k <= 4; ++k)
        CHECK(compare(ghost_position_one(k, 0, 40), closed_form_G(k, 0, 2, 40)).equal);
}

TEST_CASE("unsubstituted H needs an x bound")
{
    CHECK_THROWS(H_tilde(3, 1, 10, 0));
    CHECK_THROWS(J_tilde(1, 1, 10));
}
