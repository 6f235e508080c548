#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qshelf/errors.hpp"
#include "qshelf/matrices.hpp"
#include "qshelf/shelves.hpp"

using namespace qshelf;

namespace {

LaurentPoly qp(int e)
{
    return LaurentPoly::monomial(1, e);
}

void check_row(const PolyMatrix& m, int r, const std::vector<LaurentPoly>& row)
{
    for (int c = 1; c <= m.k(); ++c)
        CHECK_MESSAGE(m.at(r, c) == row[static_cast<std::size_t>(c - 1)], "row ", r, " col ", c);
}

} // namespace

TEST_CASE("A for even k")
{
    for (int j = 1; j <= 3; ++j) {
        PolyMatrix a = build_A(4, j);
        check_row(a, 1, {0, 1, 0, qp(4 * j)});
        check_row(a, 2, {1, 0, qp(2 * j), 0});
        check_row(a, 3, {0, 1, 0, 0});
        check_row(a, 4, {1, 0, 0, 0});
        PolyMatrix a6 = build_A(6, j);
        check_row(a6, 1, {0, 1, 0, qp(4 * j), 0, qp(8 * j)});
        check_row(a6, 2, {1, 0, qp(2 * j), 0, qp(6 * j), 0});
    }
}

TEST_CASE("A for odd k")
{
    for (int j = 1; j <= 3; ++j) {
        PolyMatrix a = build_A(5, j);
        check_row(a, 1, {1, 0, qp(2 * j), 0, qp(6 * j)});
        check_row(a, 2, {0, 1, 0, qp(4 * j), 0});
        check_row(a, 3, {1, 0, qp(2 * j), 0, 0});
        check_row(a, 4, {0, 1, 0, 0, 0});
        check_row(a, 5, {1, 0, 0, 0, 0});
    }
}

TEST_CASE("A inverts B")
{
    for (int k = 2; k <= 7; ++k)
        for (int j = 1; j <= 4; ++j) {
            CHECK(build_A(k, j) * build_B(k, j) == PolyMatrix::identity(k));
            CHECK(build_B(k, j) * build_A(k, j) == PolyMatrix::identity(k));
        }
}

TEST_CASE("C is lower triangular with determinant (1 + q^2j)^(k-1)")
{
    for (int k = 2; k <= 6; ++k)
        for (int j = 1; j <= 3; ++j) {
            PolyMatrix c = build_C(k, j);
            for (int r = 1; r <= k; ++r)
                for (int col = r + 1; col <= k; ++col)
                    CHECK(c.at(r, col).is_zero());
            LaurentPoly det = 1, expect = 1;
            for (int r = 1; r <= k; ++r)
                det *= c.at(r, r);
            for (int r = 1; r < k; ++r)
                expect *= LaurentPoly(1) + qp(2 * j);
            CHECK(det == expect);
        }
}

TEST_CASE("first column of A' alternates q^(2j-1) and 1, ending in 1")
{
    for (int k = 2; k <= 6; ++k)
        for (int j = 1; j <= 3; ++j) {
            PolyMatrix m = build_Aprime(k, j);
            CHECK(m.nonnegative_exponents());
            CHECK(m.nonnegative_coefficients());
            for (int r = k; r >= 1; --r)
                CHECK(m.at(r, 1) == ((k - r) % 2 ? qp(2 * j - 1) : LaurentPoly(1)));
            for (int c = 2; c <= k; ++c)
                CHECK(m.at(k, c).is_zero());
        }
}

TEST_CASE("h routes agree on random parameters")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + static_cast<int>(rng() % 5);
        int J = static_cast<int>(rng() % 3);
        int j = J + static_cast<int>(rng() % 6);
        PolyMatrix h = h_by_product(k, J, j);
        CHECK(h == h_by_recursion(k, J, j));
        CHECK(h.nonnegative_coefficients());
        if (j == J)
            CHECK(h == PolyMatrix::identity(k));
    }
    for (int k = 2; k <= 5; ++k)
        for (int J = 0; J <= 3; ++J)
            CHECK(h_one_up(k, J) == h_by_recursion(k, J, J + 1));
}

TEST_CASE("matrix relations on closed-form shelves")
{
    const int N = 50;
    for (int k = 2; k <= 5; ++k)
        for (int j = 1; j <= 3; ++j) {
            std::vector<Series> g, prev;
            for (int i = 1; i <= k; ++i) {
                g.push_back(closed_form_G(k, j, i, N));
                prev.push_back(closed_form_G(k, j - 1, i, N));
            }
            auto lhs = mat_vec(build_C(k, j), g);
            auto rhs = mat_vec(build_B(k, j), prev);
            auto back = mat_vec(build_Aprime(k, j), g);
            for (int r = 0; r < k; ++r) {
                CHECK(compare(lhs[static_cast<std::size_t>(r)], rhs[static_cast<std::size_t>(r)]).equal);
                CHECK(compare(back[static_cast<std::size_t>(r)], prev[static_cast<std::size_t>(r)]).equal);
            }
        }
}

TEST_CASE("h12 stabilizes onto the official series")
{
    for (int k = 2; k <= 4; ++k)
        for (int J = 0; J <= 1; ++J)
            for (int i = 1; i <= k; ++i) {
                Stabilized s = h12_stabilized(k, i, J, 21);
                CHECK(compare(s.sum, closed_form_G(k, J, i, 21)).equal);
                CHECK(s.j_stop > J);
            }
    CHECK_THROWS_AS(h12_stabilized(3, 1, 0, 21, 3), NoStabilization);
}

TEST_CASE("first_difference reports an entry and exponent")
{
    PolyMatrix a = PolyMatrix::identity(3), b = a;
    b.at(2, 3) = qp(-4);
    auto d = first_difference(a, b);
    REQUIRE(d);
    CHECK(d->row == 2);
    CHECK(d->col == 3);
    CHECK(d->at.exponent == -4);
    CHECK(d->at.rhs == Integer(1));
}
