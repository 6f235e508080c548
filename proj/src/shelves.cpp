#include "qshelf/shelves.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qshelf/axq.hpp"
#include "qshelf/errors.hpp"

namespace qshelf {

namespace {

void check_position(int k, int i, int lo)
{
    if (k < 2)
        throw std::invalid_argument("k must be at least 2");
    if (i < lo || i > k)
        throw std::invalid_argument("position " + std::to_string(i) + " outside [" + std::to_string(lo) + ", "
                                    + std::to_string(k) + "]");
}

long long binom2(long long n)
{
    return n * (n - 1) / 2;
}

// sum over n of (-1)^n q^(E_n) * poly_n, where E_n = (4k-2) C(n,2) + n*lin
// and poly_n is produced by `bracket`; stops once E_n reaches N
template <class Bracket>
Series theta_sum(int k, int lin, int N, Bracket bracket)
{
    if (lin <= 0)
        throw std::logic_error("linear exponent must be positive for the cutoff");
    Series acc = Series::zero(N);
    for (int n = 0;; ++n) {
        long long e = (4LL * k - 2) * binom2(n) + static_cast<long long>(n) * lin;
        if (e >= N)
            break;
        LaurentPoly p = bracket(n).shifted(static_cast<int>(e));
        if (n % 2)
            p = -p;
        acc += Series::from_poly(p, N);
    }
    return acc;
}

LaurentPoly binomial(int sign, int d)
{
    return LaurentPoly(1) + LaurentPoly::monomial(sign, d);
}

// the four-term bracket shared by both closed forms
LaurentPoly closed_form_bracket(int k, int j, int i, int n)
{
    int a = 2 * (2 * n + j + 1);
    int odd = 2 * n + 2 * j + 1;
    return LaurentPoly(1) - LaurentPoly::monomial(1, a * (k - i + 1)) + LaurentPoly::monomial(1, odd)
           - LaurentPoly::monomial(1, odd + a * (k - i));
}

// the n-th Pochhammer quotient of the closed forms on [0, prec)
Series closed_form_body(int j, int n, int prec)
{
    Series b = Series::one(prec);
    for (int t = 0; t < n; ++t)
        b.mul_binomial(1, 2 * j + 2 + 2 * t);
    for (int t = 0; t < j; ++t)
        b.mul_binomial(-1, 2 * (n + 1) + 2 * t);
    for (int t = 0; t < n; ++t)
        b.div_binomial(1, 2 + 2 * t);
    for (int t = 0; t <= j; ++t)
        b.div_binomial(1, 2 * n + 1 + 2 * t);
    return b;
}

template <class Extra>
Series closed_form_sum(int k, int j, int i, int lin, int N, Extra extra)
{
    Series acc = Series::zero(N);
    for (int n = 0;; ++n) {
        long long e = (4LL * k - 2) * binom2(n) + static_cast<long long>(n) * lin;
        if (e >= N)
            break;
        int width = N - static_cast<int>(e);
        Series term = (extra(n) * closed_form_bracket(k, j, i, n)) * closed_form_body(j, n, width);
        term.shift(static_cast<int>(e));
        if (n % 2)
            term = -term;
        acc += term;
    }
    return acc;
}

} // namespace

Series product_side(int k, int i, int N)
{
    check_position(k, i, 1);
    Series s = Series::one(N);
    for (int m = 1; m < N; m += 2)
        s.mul_binomial(1, m);
    int step = 4 * k - 2;
    for (int first : {2 * k - 2 * i + 1, 2 * k + 2 * i - 3, step})
        for (int m = first; m < N; m += step)
            s.mul_binomial(-1, m);
    for (int m = 2; m < N; m += 2)
        s.div_binomial(-1, m);
    return s;
}

Series shelf0_sum_form(int k, int i, int N)
{
    check_position(k, i, 1);
    int w = 2 * k - 2 * i + 1;
    Series sum = theta_sum(k, 2 * i + 2 * k - 3, N, [&](int n) { return binomial(-1, w * (2 * n + 1)); });
    return sum * f_inverse(N);
}

Series ghost0_closed(int k, int i, int N)
{
    check_position(k, i, 2);
    int w = 2 * k - 2 * i + 1;
    Series sum = theta_sum(k, 2 * k + 2 * i - 5, N,
                           [&](int n) { return binomial(1, 2 * (2 * n + 1)) * binomial(-1, w * (2 * n + 1)); });
    sum.div_binomial(1, 2);
    return sum * f_inverse(N);
}

Series closed_form_G(int k, int j, int i, int N)
{
    check_position(k, i, 1);
    if (j < 0)
        throw std::invalid_argument("shelf must be nonnegative");
    int lin = 2 * k * (j + 1) + 2 * (i - j) - 3;
    Series sum = closed_form_sum(k, j, i, lin, N, [](int) { return LaurentPoly(1); });
    return sum * f_inverse(N);
}

Series closed_form_ghost(int k, int j, int i, int N)
{
    check_position(k, i, 2);
    if (j < 0)
        throw std::invalid_argument("shelf must be nonnegative");
    int lin = 2 * k * (j + 1) + 2 * (i - j - 1) - 3;
    Series sum = closed_form_sum(k, j, i, lin, N, [&](int n) { return binomial(1, 2 * (2 * n + j + 1)); });
    sum.div_binomial(1, 2 * j + 2);
    return sum * f_inverse(N);
}

Series ghost_position_one(int k, int j, int N)
{
    return specialize_dictionary(J_tilde_ghost(k, k, N), j, N);
}

void ShelfPair::refresh_prec()
{
    effective_prec = INT32_MAX;
    for (const auto& s : officials)
        effective_prec = std::min(effective_prec, s.prec());
    for (const auto& s : ghosts)
        effective_prec = std::min(effective_prec, s.prec());
}

ShelfPair shelf_from_closed_forms(int k, int j, int N)
{
    ShelfPair p{k, j, {}, {}, N};
    for (int i = 1; i <= k; ++i)
        p.officials.push_back(closed_form_G(k, j, i, N));
    for (int i = 2; i <= k; ++i)
        p.ghosts.push_back(closed_form_ghost(k, j, i, N));
    p.refresh_prec();
    return p;
}

std::vector<Series> ghosts_from_officials(int k, int j, const std::vector<Series>& g)
{
    if (static_cast<int>(g.size()) != k)
        throw std::invalid_argument("need k officials");
    int d = 2 * (j + 1);
    std::vector<Series> out;
    for (int i = 2; i <= k; ++i) {
        Series s = g[static_cast<std::size_t>(i - 2)];
        Series t = g[static_cast<std::size_t>(i == k ? k - 1 : i)];
        if (i < k)
            s += t.shift(d);
        else
            s -= t.shift(2 * j + 1);
        s.div_binomial(1, d);
        out.push_back(std::move(s));
    }
    return out;
}

ShelfPair next_shelf(const ShelfPair& pair, ShelfStepTrace* trace)
{
    const int k = pair.k;
    const int j = pair.j;
    const int d = 2 * (j + 1);
    if (pair.effective_prec - d * (k - 1) < 1)
        throw PrecisionExhausted(d * (k - 1) + 1, pair.effective_prec);

    auto strict = [&](Series numerator, int m, int position, bool alternate) {
        if (trace) {
            auto v = numerator.valuation();
            trace->divisions.push_back({position, m, alternate, v ? *v : -1});
        }
        try {
            return divide_exact_by_q_power(numerator, m);
        } catch (const NotDivisible& e) {
            throw NotDivisible(e.exponent, e.coefficient,
                               "shelf " + std::to_string(j + 1) + " position " + std::to_string(position)
                                   + (alternate ? " (second numerator)" : ""));
        }
    };
    // (numerator)/q^m - q^-1 prev, as one strict division
    auto step = [&](const Series& numerator, int m, const Series& prev, int position, bool alternate) {
        Series shifted = prev;
        shifted.shift(m - 1);
        return strict(numerator - shifted, m, position, alternate);
    };

    ShelfPair next{k, j + 1, {}, {}, 0};
    next.officials.push_back(pair.G(k));
    next.officials.push_back(step(pair.G(k - 1) - pair.ghost(k), d, next.officials[0], 2, false));
    if (trace)
        trace->position2_is_ghost = compare(next.officials[1], pair.ghost(k));
    for (int i = 3; i <= k; ++i) {
        const Series& prev = next.officials.back();
        Series primary = step(pair.G(k - i + 1) - pair.ghost(k - i + 2), d * (i - 1), prev, i, false);
        Series second = step(pair.ghost(k - i + 2) - pair.G(k - i + 3), d * (i - 2), prev, i, true);
        if (trace)
            trace->alternate_agreement.push_back(compare(primary, second));
        next.officials.push_back(std::move(primary));
    }
    next.ghosts = ghosts_from_officials(k, j + 1, next.officials);
    next.refresh_prec();
    return next;
}

int shelf_step_loss(int k, int j)
{
    return 2 * (j + 1) * (k - 1);
}

int required_degree(int k, int j_target, int window)
{
    int n = window;
    for (int t = 0; t < j_target; ++t)
        n += shelf_step_loss(k, t);
    return n;
}

ValuationReport valuation_report(const Series& s, int k, int j, int i, bool ghost)
{
    ValuationReport r{k, j, i, ghost, std::nullopt, s.prec(), 2 * j + 1, false};
    if (!ghost && i == k)
        r.required = 2 * j + 3;
    Series d = s - Series::one(s.prec());
    r.valuation = d.valuation();
    r.pass = r.valuation ? *r.valuation >= r.required : s.prec() >= r.required;
    return r;
}

ValuationReport empirical_hypothesis_check(int k, int j, int i, int N, bool ghost)
{
    if (N <= 2 * j + 3)
        throw std::invalid_argument("valuation check needs N > 2j + 3");
    Series s = ghost ? closed_form_ghost(k, j, i, N) : closed_form_G(k, j, i, N);
    return valuation_report(s, k, j, i, ghost);
}

} // namespace qshelf
