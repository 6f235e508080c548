#include "qshelf/tri_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "qshelf/errors.hpp"

namespace qshelf {

TriSeries::TriSeries(int q_prec, int x_prec) : qp_(std::max(q_prec, 0)), xp_(std::max(x_prec, 0))
{
}

TriSeries TriSeries::one(int q_prec, int x_prec)
{
    TriSeries t(q_prec, x_prec);
    if (t.qp_ > 0 && t.xp_ > 0)
        t.set(0, 0, 0, 1);
    return t;
}

void TriSeries::grow_a(int dim)
{
    if (dim <= ad_)
        return;
    d_.resize(static_cast<std::size_t>(dim) * static_cast<std::size_t>(xp_) * static_cast<std::size_t>(qp_));
    ad_ = dim;
}

void TriSeries::trim_a()
{
    std::size_t slab = static_cast<std::size_t>(xp_) * static_cast<std::size_t>(qp_);
    while (ad_ > 0) {
        auto first = d_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(ad_ - 1) * slab);
        if (!std::all_of(first, d_.end(), [](const Integer& c) { return c.is_zero(); }))
            break;
        d_.resize(static_cast<std::size_t>(ad_ - 1) * slab);
        --ad_;
    }
}

Integer TriSeries::coeff(int a, int x, int q) const
{
    if (a < 0 || x < 0 || q < 0)
        return Integer();
    if (q >= qp_ || x >= xp_)
        throw std::out_of_range("trivariate coefficient " + describe_monomial(a, x, q) + " is outside the window");
    if (a >= ad_)
        return Integer();
    return d_[idx(a, x, q)];
}

void TriSeries::set(int a, int x, int q, Integer c)
{
    if (a < 0 || x < 0 || q < 0 || q >= qp_ || x >= xp_)
        throw std::out_of_range("set outside the window: " + describe_monomial(a, x, q));
    if (a >= ad_) {
        if (c.is_zero())
            return;
        grow_a(a + 1);
    }
    d_[idx(a, x, q)] = std::move(c);
}

void TriSeries::add_at(int a, int x, int q, const Integer& c)
{
    if (q >= qp_ || x >= xp_)
        return;
    grow_a(a + 1);
    d_[idx(a, x, q)] += c;
}

bool TriSeries::is_zero() const
{
    return std::all_of(d_.begin(), d_.end(), [](const Integer& c) { return c.is_zero(); });
}

std::vector<TriTerm> TriSeries::terms() const
{
    std::vector<TriTerm> out;
    for (int q = 0; q < qp_; ++q)
        for (int a = 0; a < ad_; ++a)
            for (int x = 0; x < xp_; ++x) {
                const Integer& c = d_[idx(a, x, q)];
                if (!c.is_zero())
                    out.push_back({a, x, q, c});
            }
    return out;
}

TriSeries TriSeries::truncated(int q_prec, int x_prec) const
{
    q_prec = std::min(q_prec, qp_);
    x_prec = std::min(x_prec, xp_);
    if (q_prec == qp_ && x_prec == xp_)
        return *this;
    TriSeries t(q_prec, x_prec);
    t.grow_a(ad_);
    for (int a = 0; a < ad_; ++a)
        for (int x = 0; x < x_prec; ++x)
            for (int q = 0; q < q_prec; ++q)
                t.d_[t.idx(a, x, q)] = d_[idx(a, x, q)];
    t.trim_a();
    return t;
}

TriSeries& TriSeries::operator+=(const TriSeries& o)
{
    if (o.qp_ < qp_ || o.xp_ < xp_)
        *this = truncated(o.qp_, o.xp_);
    grow_a(o.ad_);
    for (int a = 0; a < o.ad_; ++a)
        for (int x = 0; x < xp_; ++x)
            for (int q = 0; q < qp_; ++q)
                d_[idx(a, x, q)] += o.d_[o.idx(a, x, q)];
    trim_a();
    return *this;
}

TriSeries& TriSeries::operator-=(const TriSeries& o)
{
    return *this += -o;
}

TriSeries TriSeries::operator-() const
{
    TriSeries t = *this;
    for (auto& c : t.d_)
        c = -c;
    return t;
}

TriSeries& TriSeries::shift(int A, int X, int N)
{
    if (A < 0 || X < 0 || N < 0)
        throw NegativeExponent("trivariate shift by " + describe_monomial(A, X, N));
    if (A == 0 && X == 0 && N == 0)
        return *this;
    TriSeries t(qp_, xp_);
    t.grow_a(ad_ + A);
    for (int a = 0; a < ad_; ++a)
        for (int x = 0; x + X < xp_; ++x)
            for (int q = 0; q + N < qp_; ++q)
                t.d_[t.idx(a + A, x + X, q + N)] = std::move(d_[idx(a, x, q)]);
    t.trim_a();
    return *this = std::move(t);
}

TriSeries& TriSeries::mul_binomial(const Integer& c, int A, int X, int N)
{
    if (A < 0 || X < 0 || N < 0 || (A == 0 && X == 0 && N == 0))
        throw std::invalid_argument("mul_binomial needs a nonconstant monomial");
    if (X >= xp_ || N >= qp_)
        return *this;
    grow_a(ad_ + A);
    for (int a = ad_ - 1; a >= A; --a)
        for (int x = xp_ - 1; x >= X; --x) {
            Integer* dst = &d_[idx(a, x, 0)];
            const Integer* src = &d_[idx(a - A, x - X, 0)];
            for (int q = qp_ - 1; q >= N; --q)
                if (!src[q - N].is_zero())
                    dst[q].add_product(c, src[q - N]);
        }
    trim_a();
    return *this;
}

TriSeries& TriSeries::div_binomial(const Integer& c, int A, int X, int N)
{
    if (A < 0 || X < 0 || N < 0 || X + N == 0)
        throw std::invalid_argument("div_binomial needs a monomial carrying x or q");
    if (X >= xp_ || N >= qp_)
        return *this;
    if (A > 0) {
        int reps = INT32_MAX;
        if (N > 0)
            reps = std::min(reps, (qp_ - 1) / N);
        if (X > 0)
            reps = std::min(reps, (xp_ - 1) / X);
        grow_a(ad_ + A * reps);
    }
    for (int a = A; a < ad_; ++a)
        for (int x = X; x < xp_; ++x) {
            Integer* dst = &d_[idx(a, x, 0)];
            const Integer* src = &d_[idx(a - A, x - X, 0)];
            for (int q = N; q < qp_; ++q)
                if (!src[q - N].is_zero())
                    dst[q].sub_product(c, src[q - N]);
        }
    trim_a();
    return *this;
}

TriSeries TriSeries::times(const std::vector<TriMonomial>& poly) const
{
    TriSeries t(qp_, xp_);
    int amax = 0;
    for (const auto& m : poly) {
        if (m.a < 0 || m.x < 0 || m.q < 0)
            throw NegativeExponent("trivariate factor with monomial " + describe_monomial(m.a, m.x, m.q));
        amax = std::max(amax, m.a);
    }
    t.grow_a(ad_ + amax);
    for (const auto& m : poly) {
        if (m.c.is_zero())
            continue;
        for (int a = 0; a < ad_; ++a)
            for (int x = 0; x + m.x < xp_; ++x) {
                Integer* dst = &t.d_[t.idx(a + m.a, x + m.x, 0)];
                const Integer* src = &d_[idx(a, x, 0)];
                for (int q = 0; q + m.q < qp_; ++q)
                    if (!src[q].is_zero())
                        dst[q + m.q].add_product(m.c, src[q]);
            }
    }
    t.trim_a();
    return t;
}

void TriSeries::add_shifted(const TriSeries& src, const Integer& c, int A, int X, int N)
{
    if (A < 0 || X < 0 || N < 0)
        throw NegativeExponent("trivariate shift by " + describe_monomial(A, X, N));
    if (c.is_zero() || X >= xp_ || N >= qp_)
        return;
    grow_a(src.ad_ + A);
    for (int a = 0; a < src.ad_; ++a)
        for (int x = 0; x < src.xp_ && x + X < xp_; ++x) {
            Integer* dst = &d_[idx(a + A, x + X, 0)];
            const Integer* from = &src.d_[src.idx(a, x, 0)];
            for (int q = 0; q < src.qp_ && q + N < qp_; ++q)
                if (!from[q].is_zero())
                    dst[q + N].add_product(c, from[q]);
        }
    trim_a();
}

std::optional<TriTerm> TriSeries::support_violation() const
{
    for (int q = 0; q < qp_; ++q)
        for (int a = 0; a < ad_; ++a)
            for (int x = 0; x < xp_; ++x) {
                const Integer& c = d_[idx(a, x, q)];
                if (!c.is_zero() && (x > q || a > q))
                    return TriTerm{a, x, q, c};
            }
    return std::nullopt;
}

TriSeries substitute_x(const TriSeries& t, int s)
{
    if (s < 0)
        throw std::invalid_argument("substitute_x needs s >= 0");
    if (s == 0)
        return t;
    int qp = std::min(t.q_prec(), t.x_prec());
    TriSeries r = TriSeries::q_truncated(qp);
    for (int a = 0; a < t.a_dim(); ++a)
        for (int x = 0; x < qp; ++x)
            for (int q = 0; q + s * x < qp; ++q) {
                Integer c = t.coeff(a, x, q);
                if (!c.is_zero())
                    r.set(a, x, q + s * x, std::move(c));
            }
    return r;
}

TriSeries divide_exact_by_xq_power(const TriSeries& t, int r)
{
    if (r < 0)
        throw std::invalid_argument("negative power");
    for (const auto& term : t.terms())
        if (term.x < r || term.q < r)
            throw NotDivisible(term.q, term.c, "division by (xq)^" + std::to_string(r) + " at "
                                                   + describe_monomial(term.a, term.x, term.q));
    TriSeries out(t.q_prec() - r, t.x_prec() - r);
    for (const auto& term : t.terms())
        if (term.q - r < out.q_prec() && term.x - r < out.x_prec())
            out.set(term.a, term.x - r, term.q - r, term.c);
    return out;
}

Series specialize_dictionary(const TriSeries& t, int j_shelf, int N)
{
    if (!t.q_only())
        throw std::invalid_argument("dictionary specialization needs a q-truncated series");
    int prec = std::min(N, t.q_prec());
    Series s = Series::zero(prec);
    for (const auto& term : t.terms()) {
        if (term.a > term.q || term.x > term.q)
            throw NegativeExponent("support violated at " + describe_monomial(term.a, term.x, term.q));
        long long e = 2LL * term.q - term.a + 2LL * j_shelf * term.x;
        if (e < prec)
            s.set_coeff(static_cast<int>(e), s.coeff(static_cast<int>(e)) + term.c);
    }
    return s;
}

Comparison compare(const TriSeries& lhs, const TriSeries& rhs)
{
    Comparison c;
    int qp = std::min(lhs.q_prec(), rhs.q_prec());
    int xp = std::min(lhs.x_prec(), rhs.x_prec());
    int ad = std::max(lhs.a_dim(), rhs.a_dim());
    c.through = qp - 1;
    for (int q = 0; q < qp; ++q)
        for (int a = 0; a < ad; ++a)
            for (int x = 0; x < xp; ++x) {
                Integer l = lhs.coeff(a, x, q);
                Integer r = rhs.coeff(a, x, q);
                if (l != r) {
                    c.equal = false;
                    c.mismatch = Mismatch{q, std::move(l), std::move(r), "a^" + std::to_string(a) + " x^" + std::to_string(x)};
                    return c;
                }
            }
    return c;
}

std::string describe_monomial(int a, int x, int q)
{
    return "a^" + std::to_string(a) + " x^" + std::to_string(x) + " q^" + std::to_string(q);
}

} // namespace qshelf
