#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive.hpp"
#include "qshelf/errors.hpp"
#include "qshelf/shelves.hpp"

using namespace qshelf;

TEST_CASE("shelf 0 is the infinite product, including the extended i = 1")
{
    for (int k = 2; k <= 5; ++k)
        for (int i = 1; i <= k; ++i) {
            naive::Poly p = naive::bgg_product(k, i, 50);
            CHECK(naive::same(closed_form_G(k, 0, i, 50), p));
            CHECK(naive::same(shelf0_sum_form(k, i, 50), p));
            CHECK(naive::same(product_side(k, i, 50), p));
        }
}

TEST_CASE("edge matching between neighbouring shelves")
{
    for (int k = 2; k <= 5; ++k)
        for (int j = 0; j <= 4; ++j)
            CHECK(compare(closed_form_G(k, j, k, 60), closed_form_G(k, j + 1, 1, 60)).equal);
}

TEST_CASE("precision bookkeeping")
{
    CHECK(shelf_step_loss(3, 0) == 4);
    CHECK(shelf_step_loss(4, 2) == 18);
    CHECK(required_degree(4, 3, 1) == 37);
    CHECK(required_degree(2, 0, 10) == 10);
    for (int k = 2; k <= 4; ++k) {
        ShelfPair p = shelf_from_closed_forms(k, 0, 60);
        for (int j = 0; j < 3; ++j) {
            int before = p.effective_prec;
            p = next_shelf(p);
            // the per-step figure is a bound; positions not at the minimum lose less
            CHECK(p.effective_prec <= before);
            CHECK(p.effective_prec >= before - shelf_step_loss(k, j));
            CHECK(p.effective_prec >= required_degree(k, 0, 60) - (required_degree(k, j + 1, 0)));
        }
    }
}

TEST_CASE("recursion reproduces the closed forms on its window")
{
    for (int k = 2; k <= 4; ++k) {
        ShelfPair p = shelf_from_closed_forms(k, 0, 80);
        for (int j = 1; j <= 3; ++j) {
            ShelfStepTrace tr;
            p = next_shelf(p, &tr);
            CHECK(tr.position2_is_ghost.equal);
            for (const auto& c : tr.alternate_agreement)
                CHECK(c.equal);
            for (const auto& d : tr.divisions)
                CHECK((d.numerator_valuation < 0 || d.numerator_valuation >= d.exponent));
            for (int i = 1; i <= k; ++i)
                CHECK(compare(p.G(i), closed_form_G(k, j, i, p.effective_prec)).equal);
            for (int i = 2; i <= k; ++i)
                CHECK(compare(p.ghost(i), closed_form_ghost(k, j, i, p.effective_prec)).equal);
        }
    }
}

TEST_CASE("a corrupted shelf breaks a strict division")
{
    for (int k = 2; k <= 4; ++k) {
        ShelfPair p = shelf_from_closed_forms(k, 0, 40);
        Series& g = p.officials.at(static_cast<std::size_t>(k - 2));
        g.set_coeff(1, g.coeff(1) + Integer(1));
        CHECK_THROWS_AS(next_shelf(p), NotDivisible);
    }
}

TEST_CASE("ghost interpolation agrees with the ghost closed form")
{
    for (int k = 2; k <= 5; ++k)
        for (int j = 0; j <= 3; ++j) {
            std::vector<Series> off;
            for (int i = 1; i <= k; ++i)
                off.push_back(closed_form_G(k, j, i, 40));
            auto gh = ghosts_from_officials(k, j, off);
            for (int i = 2; i <= k; ++i)
                CHECK(compare(gh[static_cast<std::size_t>(i - 2)], closed_form_ghost(k, j, i, 40)).equal);
        }
    for (int k = 2; k <= 5; ++k)
        for (int i = 2; i <= k; ++i)
            CHECK(compare(ghost0_closed(k, i, 40), closed_form_ghost(k, 0, i, 40)).equal);
}

TEST_CASE("valuation bounds and their reports")
{
    for (int k = 2; k <= 5; ++k)
        for (int j = 0; j <= 4; ++j) {
            for (int i = 1; i <= k; ++i)
                CHECK(empirical_hypothesis_check(k, j, i, 40, false).pass);
            for (int i = 2; i <= k; ++i)
                CHECK(empirical_hypothesis_check(k, j, i, 40, true).pass);
        }
    ValuationReport r = empirical_hypothesis_check(3, 2, 3, 40, false);
    CHECK(r.required == 7);
    REQUIRE(r.valuation);
    CHECK(*r.valuation >= 7);

    Series bad = Series::one(10);
    bad.set_coeff(2, 1);
    CHECK_FALSE(valuation_report(bad, 3, 1, 1, false).pass);
    CHECK(valuation_report(bad, 3, 0, 1, false).pass);
    CHECK_THROWS(empirical_hypothesis_check(3, 4, 1, 11, false));
}

TEST_CASE("closed forms have nonnegative coefficients")
{
    for (int k = 2; k <= 4; ++k)
        for (int j = 0; j <= 3; ++j)
            for (int i = 1; i <= k; ++i) {
                CHECK(closed_form_G(k, j, i, 50).nonnegative());
                if (i >= 2)
                    CHECK(closed_form_ghost(k, j, i, 50).nonnegative());
            }
}

TEST_CASE("shelf labels")
{
    ShelfLabel a{3, 1, 3};
    CHECK(a.ell() == 5);
    ShelfLabel c = a.canonical();
    CHECK(c.j == 2);
    CHECK(c.i == 1);
    CHECK(c.ell() == a.ell());
}
