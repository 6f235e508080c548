#include "qshelf/axq.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "qshelf/errors.hpp"

namespace qshelf {

namespace {

struct Mono {
    int c;
    long long a, x, q;
};

long long binom2(long long n)
{
    return n * (n - 1) / 2;
}

// prod_{t >= s+1} (1 + a x q^t) / prod_{t >= s} (1 - x q^t)
TriSeries base_product(int s, int Q, int X)
{
    TriSeries b = TriSeries::one(Q, X);
    for (int t = s; t < Q; ++t)
        b.div_binomial(-1, 0, 1, t);
    for (int t = std::max(s + 1, 1); t < Q; ++t)
        b.mul_binomial(1, 1, 1, t);
    return b;
}

// (-1)^n prod_{t<n}(a + q^t) prod_{t<n}(1 + x q^(s+t)) prod_{t>=n+s+1}(1 + a x q^t)
//   / [ (q^2;q^2)_n prod_{t>=n+s}(1 - x q^t) ]
TriSeries summand_body(const TriSeries& base, int n, int s, int Q, int X)
{
    TriSeries b = base.truncated(Q, X);
    for (int t = 0; t < n; ++t)
        b.mul_binomial(-1, 0, 2, 2 * (s + t));
    for (int t = s + 1; t <= s + n; ++t)
        b.div_binomial(1, 1, 1, t);
    for (int u = 1; u <= n; ++u)
        b.div_binomial(-1, 0, 0, 2 * u);
    for (int t = 0; t < n; ++t)
        b = b.times({{Integer(1), 1, 0, 0}, {Integer(1), 0, 0, t}});
    return n % 2 ? -b : b;
}

using Summand = std::function<std::vector<Mono>(int n)>;

TriSeries theta_tri(int s, int Q, int X, int n_limit, const Summand& f)
{
    if (s >= 1)
        X = Q;
    TriSeries acc(Q, X);
    TriSeries base = base_product(s, Q, X);
    for (int n = 0; n <= n_limit; ++n) {
        std::map<std::tuple<long long, long long, long long>, int> merged;
        for (const Mono& m : f(n)) {
            if (m.a < 0 || m.x < 0 || m.q < 0)
                throw NegativeExponent("summand " + std::to_string(n) + " has monomial "
                                       + describe_monomial(static_cast<int>(m.a), static_cast<int>(m.x),
                                                           static_cast<int>(m.q)));
            if (m.q < Q && m.x < X)
                merged[{m.a, m.x, m.q}] += m.c;
        }
        long long minq = Q, minx = X;
        bool any = false;
        for (const auto& [key, c] : merged)
            if (c != 0) {
                any = true;
                minq = std::min(minq, std::get<2>(key));
                minx = std::min(minx, std::get<1>(key));
            }
        if (!any)
            continue;
        TriSeries body = summand_body(base, n, s, Q - static_cast<int>(minq), X - static_cast<int>(minx));
        for (const auto& [key, c] : merged)
            if (c != 0)
                acc.add_shifted(body, c, static_cast<int>(std::get<0>(key)), static_cast<int>(std::get<1>(key)),
                                static_cast<int>(std::get<2>(key)));
    }
    return acc;
}

int sum_limit(int Q, int i)
{
    return Q + 4 * std::abs(i) + 8;
}

// the four-term bracket of the single sums, placed after a prefactor
std::vector<Mono> single_sum_bracket(int i, int n, long long px, long long pq)
{
    long long w = 2LL * n + 1;
    return {{1, 0, px, pq},
            {-1, 0, px + i, pq + w * i},
            {1, 1, px + 1, pq + n + 1},
            {-1, 1, px + i, pq + n + 1 + w * (i - 1)}};
}

void check_k(int k)
{
    if (k < 2)
        throw std::invalid_argument("k must be at least 2");
}

} // namespace

void assert_support(const TriSeries& t, const char* what)
{
    if (auto v = t.support_violation())
        throw NegativeExponent(std::string(what) + ": monomial " + describe_monomial(v->a, v->x, v->q)
                               + " carries fewer q than a or x");
}

TriSeries H_tilde_scaled(int k, int i, int s, int r, int q_prec, int x_prec)
{
    check_k(k);
    if (s == 0 && x_prec <= 0)
        throw std::invalid_argument("unsubstituted series needs an x bound");
    return theta_tri(s, q_prec, x_prec, sum_limit(q_prec, i), [=](int n) {
        long long px = static_cast<long long>(k - 1) * n + r;
        long long pq = static_cast<long long>(k) * n * n - binom2(n) + n - static_cast<long long>(i) * n + s * px;
        return std::vector<Mono>{{1, 0, px, pq}, {-1, 0, px + i, pq + static_cast<long long>(s) * i + 2LL * n * i}};
    });
}

TriSeries H_tilde(int k, int i, int q_prec, int x_prec)
{
    return H_tilde_scaled(k, i, 0, 0, q_prec, x_prec);
}

TriSeries H_ghost_scaled(int k, int i, int s, int r, int q_prec, int x_prec)
{
    TriSeries t = H_tilde_scaled(k, i + 1, s, r, q_prec, x_prec);
    t += H_tilde_scaled(k, i - 1, s, r + 1, q_prec, x_prec);
    t.div_binomial(1, 0, 1, s);
    return t;
}

TriSeries J_tilde_combination(int k, int i, int q_prec)
{
    TriSeries t = H_tilde_scaled(k, i, 1, 0, q_prec, q_prec);
    TriSeries u = H_tilde_scaled(k, i - 1, 1, 1, q_prec, q_prec);
    t += u.shift(1, 0, 0);
    // J_{k,0} = -a H_{k,1}(a;xq;q) has an a without q; it only ever appears multiplied by xq
    if (i >= 1)
        assert_support(t, "J combination");
    return t;
}

TriSeries J_tilde_single_sum(int k, int i, int q_prec)
{
    check_k(k);
    TriSeries t = theta_tri(1, q_prec, q_prec, sum_limit(q_prec, i), [=](int n) {
        long long px = static_cast<long long>(k - 1) * n;
        long long pq = static_cast<long long>(k) * n * n - binom2(n) + static_cast<long long>(k) * n
                       - static_cast<long long>(i) * n;
        return single_sum_bracket(i, n, px, pq);
    });
    if (i >= 1)
        assert_support(t, "J single sum");
    return t;
}

TriSeries J_tilde(int k, int i, int q_prec)
{
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, TriSeries> memo;
    {
        std::lock_guard lock(mu);
        auto it = memo.find({k, i, q_prec});
        if (it != memo.end())
            return it->second;
    }
    TriSeries a = J_tilde_combination(k, i, q_prec);
    TriSeries b = J_tilde_single_sum(k, i, q_prec);
    Comparison c = compare(a, b);
    if (!c)
        throw RouteMismatch("J(" + std::to_string(k) + "," + std::to_string(i) + "): " + c.describe());
    std::lock_guard lock(mu);
    return memo.emplace(std::tuple{k, i, q_prec}, std::move(a)).first->second;
}

TriSeries J_ghost_combination(int k, int i, int q_prec)
{
    TriSeries t = H_ghost_scaled(k, i, 1, 0, q_prec, q_prec);
    TriSeries u = H_ghost_scaled(k, i - 1, 1, 1, q_prec, q_prec);
    t += u.shift(1, 0, 0);
    assert_support(t, "ghost combination");
    return t;
}

TriSeries J_ghost_interpolation(int k, int i, int q_prec)
{
    TriSeries t = J_tilde(k, i + 1, q_prec);
    TriSeries u = J_tilde(k, i - 1, q_prec);
    t += u.shift(0, 1, 1);
    t.div_binomial(1, 0, 1, 1);
    assert_support(t, "ghost interpolation");
    return t;
}

TriSeries J_ghost_single_sum(int k, int i, int q_prec)
{
    check_k(k);
    TriSeries t = theta_tri(1, q_prec, q_prec, sum_limit(q_prec, i), [=](int n) {
        long long px = static_cast<long long>(k - 1) * n;
        long long pq = static_cast<long long>(k) * n * n - binom2(n) + static_cast<long long>(k) * n
                       - static_cast<long long>(i + 1) * n;
        std::vector<Mono> b = single_sum_bracket(i, n, px, pq);
        std::size_t m = b.size();
        for (std::size_t t = 0; t < m; ++t)
            b.push_back({b[t].c, b[t].a, b[t].x + 1, b[t].q + 2LL * n + 1});
        return b;
    });
    t.div_binomial(1, 0, 1, 1);
    assert_support(t, "ghost single sum");
    return t;
}

TriSeries J_tilde_ghost(int k, int i, int q_prec)
{
    if (i < 1 || i > k)
        throw std::invalid_argument("ghost index outside [1, k]");
    TriSeries a = J_ghost_combination(k, i, q_prec);
    TriSeries b = J_ghost_interpolation(k, i, q_prec);
    TriSeries c = J_ghost_single_sum(k, i, q_prec);
    std::string tag = "JJ(" + std::to_string(k) + "," + std::to_string(i) + ")";
    if (Comparison r = compare(a, b); !r)
        throw RouteMismatch(tag + " combination vs interpolation: " + r.describe());
    if (Comparison r = compare(a, c); !r)
        throw RouteMismatch(tag + " combination vs single sum: " + r.describe());
    return a;
}

} // namespace qshelf
