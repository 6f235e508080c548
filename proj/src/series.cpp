#include "qshelf/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qshelf/errors.hpp"

namespace qshelf {

Series::Series(int low, std::vector<Integer> coeffs, int prec) : low_(low), prec_(prec), c_(std::move(coeffs))
{
    if (prec < low)
        throw std::invalid_argument("series window with prec below low");
    auto width = static_cast<std::size_t>(prec - low);
    if (c_.size() > width)
        throw std::invalid_argument("more coefficients than the window holds");
    c_.resize(width);
}

Series Series::zero(int prec, int low)
{
    return Series(std::min(low, prec), {}, prec);
}

Series Series::one(int prec)
{
    return monomial(1, 0, prec);
}

Series Series::monomial(const Integer& c, int e, int prec)
{
    if (e >= prec)
        return zero(prec);
    Series s(e, {}, prec);
    s.c_[0] = c;
    return s;
}

Series Series::from_poly(const LaurentPoly& p, int prec)
{
    if (p.is_zero())
        return zero(prec);
    Series s(std::min(p.low(), prec), {}, prec);
    for (const auto& [e, c] : p.terms())
        if (e < prec)
            s.c_[static_cast<std::size_t>(e - s.low_)] = c;
    return s;
}

Integer Series::coeff(int e) const
{
    if (e >= prec_)
        throw std::out_of_range("coefficient of q^" + std::to_string(e) + " is beyond prec " + std::to_string(prec_));
    if (e < low_)
        return Integer();
    return c_[static_cast<std::size_t>(e - low_)];
}

void Series::set_coeff(int e, Integer c)
{
    if (e >= prec_)
        throw std::out_of_range("set_coeff beyond prec");
    if (e < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - e), Integer());
        low_ = e;
    }
    c_[static_cast<std::size_t>(e - low_)] = std::move(c);
}

std::optional<int> Series::valuation() const
{
    for (std::size_t t = 0; t < c_.size(); ++t)
        if (!c_[t].is_zero())
            return low_ + static_cast<int>(t);
    return std::nullopt;
}

bool Series::is_zero() const
{
    return !valuation();
}

bool Series::nonnegative() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return c.sign() >= 0; });
}

Series Series::truncated(int new_prec) const
{
    if (new_prec >= prec_)
        return *this;
    if (new_prec <= low_)
        return zero(new_prec);
    return Series(low_, std::vector<Integer>(c_.begin(), c_.begin() + (new_prec - low_)), new_prec);
}

void Series::reset_window(int low, int prec)
{
    if (low == low_ && prec == prec_)
        return;
    std::vector<Integer> out(static_cast<std::size_t>(prec - low));
    for (int e = std::max(low, low_); e < std::min(prec, prec_); ++e)
        out[static_cast<std::size_t>(e - low)] = std::move(c_[static_cast<std::size_t>(e - low_)]);
    c_ = std::move(out);
    low_ = low;
    prec_ = prec;
}

Series& Series::operator+=(const Series& o)
{
    int prec = std::min(prec_, o.prec_);
    int low = std::min(low_, std::min(o.low_, prec));
    reset_window(low, prec);
    for (int e = o.low_; e < prec_; ++e)
        c_[static_cast<std::size_t>(e - low_)] += o.c_[static_cast<std::size_t>(e - o.low_)];
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    int prec = std::min(prec_, o.prec_);
    int low = std::min(low_, std::min(o.low_, prec));
    reset_window(low, prec);
    for (int e = o.low_; e < prec_; ++e)
        c_[static_cast<std::size_t>(e - low_)] -= o.c_[static_cast<std::size_t>(e - o.low_)];
    return *this;
}

Series Series::operator-() const
{
    Series s = *this;
    for (auto& c : s.c_)
        c = -c;
    return s;
}

Series& Series::scale(const Integer& c)
{
    for (auto& v : c_)
        v *= c;
    return *this;
}

Series& Series::shift(int m)
{
    low_ += m;
    prec_ += m;
    return *this;
}

Series& Series::mul_binomial(int sign, int d)
{
    if (d < 0)
        throw std::invalid_argument("mul_binomial needs d >= 0");
    if (d == 0)
        return scale(Integer(1 + sign));
    auto n = static_cast<std::ptrdiff_t>(c_.size());
    if (sign > 0) {
        for (std::ptrdiff_t t = n - 1; t >= d; --t)
            c_[t] += c_[t - d];
    } else {
        for (std::ptrdiff_t t = n - 1; t >= d; --t)
            c_[t] -= c_[t - d];
    }
    return *this;
}

Series& Series::div_binomial(int sign, int d)
{
    if (d < 1)
        throw std::invalid_argument("div_binomial needs d >= 1");
    auto n = static_cast<std::ptrdiff_t>(c_.size());
    if (sign > 0) {
        for (std::ptrdiff_t t = d; t < n; ++t)
            c_[t] -= c_[t - d];
    } else {
        for (std::ptrdiff_t t = d; t < n; ++t)
            c_[t] += c_[t - d];
    }
    return *this;
}

namespace {

// prec of a product: every missing term of one factor meets the other
// factor's lowest nonzero term at the earliest
int product_prec(const Series& a, const Series& b)
{
    int va = a.valuation().value_or(a.prec());
    int vb = b.valuation().value_or(b.prec());
    return std::min(a.prec() + vb, b.prec() + va);
}

} // namespace

Series operator*(const Series& a, const Series& b)
{
    int prec = product_prec(a, b);
    int low = std::min(a.low() + b.low(), prec);
    std::vector<Integer> out(static_cast<std::size_t>(prec - low));
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t s = 0; s < ac.size(); ++s) {
        if (ac[s].is_zero())
            continue;
        int es = a.low() + static_cast<int>(s);
        for (std::size_t t = 0; t < bc.size(); ++t) {
            int e = es + b.low() + static_cast<int>(t);
            if (e >= prec)
                break;
            out[static_cast<std::size_t>(e - low)].add_product(ac[s], bc[t]);
        }
    }
    return Series(low, std::move(out), prec);
}

Series operator*(const LaurentPoly& p, const Series& s)
{
    if (p.is_zero())
        return Series::zero(s.prec());
    int prec = s.prec() + p.valuation();
    int low = std::min(s.low() + p.valuation(), prec);
    std::vector<Integer> out(static_cast<std::size_t>(prec - low));
    const auto& sc = s.coeffs();
    for (const auto& [e, c] : p.terms())
        for (std::size_t t = 0; t < sc.size(); ++t) {
            int f = e + s.low() + static_cast<int>(t);
            if (f >= prec)
                break;
            out[static_cast<std::size_t>(f - low)].add_product(c, sc[t]);
        }
    return Series(low, std::move(out), prec);
}

Series invert(const Series& s)
{
    auto v = s.valuation();
    if (!v)
        throw AllZero();
    const Integer u = s.coeff(*v);
    if (u != Integer(1) && u != Integer(-1))
        throw NotAUnit(*v, u);
    // s = q^v (u + s_1 q + ...), known through q^(prec - v) inside the bracket
    int n = s.prec() - *v;
    std::vector<Integer> r(static_cast<std::size_t>(std::max(n, 0)));
    if (n > 0)
        r[0] = u;
    for (int m = 1; m < n; ++m) {
        Integer acc;
        for (int t = 1; t <= m; ++t) {
            const Integer& st = s.coeffs()[static_cast<std::size_t>(*v + t - s.low())];
            if (!st.is_zero())
                acc.add_product(st, r[static_cast<std::size_t>(m - t)]);
        }
        r[static_cast<std::size_t>(m)] = u.sign() > 0 ? -acc : acc;
    }
    return Series(-*v, std::move(r), s.prec() - 2 * *v);
}

Series divide_by_q_power(const Series& s, int m)
{
    Series r = s;
    return r.shift(-m);
}

Series divide_exact_by_q_power(const Series& s, int m)
{
    int upto = std::min(m, s.prec());
    for (int e = s.low(); e < upto; ++e) {
        Integer c = s.coeff(e);
        if (!c.is_zero())
            throw NotDivisible(e, c, "division by q^" + std::to_string(m));
    }
    int prec = s.prec() - m;
    if (prec <= 0)
        return Series::zero(prec);
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(prec));
    for (int e = m; e < s.prec(); ++e)
        out.push_back(s.coeff(e));
    return Series(0, std::move(out), prec);
}

Series substitute_q_power(const Series& s, int m)
{
    if (m < 1)
        throw std::invalid_argument("substitute_q_power needs m >= 1");
    Series r = Series::zero(s.prec() * m, s.low() * m);
    for (int e = s.low(); e < s.prec(); ++e) {
        Integer c = s.coeff(e);
        if (!c.is_zero())
            r.set_coeff(e * m, std::move(c));
    }
    return r;
}

Series pochhammer(int sign, int e, int step, int n, int prec)
{
    if (step < 1)
        throw std::invalid_argument("pochhammer step must be positive");
    Series r = Series::one(prec);
    if (n < 0) {
        if (e <= 0)
            throw DivergentProduct(e);
        for (int d = e; d < prec; d += step)
            r.mul_binomial(-sign, d);
        return r;
    }
    for (int t = 0; t < n; ++t) {
        int d = e + step * t;
        if (d >= 0) {
            if (d < r.prec())
                r.mul_binomial(-sign, d);
        } else {
            r = (LaurentPoly(1) + LaurentPoly::monomial(-sign, d)) * r;
        }
    }
    return r;
}

const Series& f_inverse(int prec)
{
    static std::mutex mu;
    static std::map<int, Series> memo;
    std::lock_guard lock(mu);
    auto it = memo.find(prec);
    if (it != memo.end())
        return it->second;
    Series r = Series::one(std::max(prec, 0));
    for (int m = 1; m < prec; ++m)
        if (m % 4 != 2)
            r.div_binomial(-1, m);
    return memo.emplace(prec, std::move(r)).first->second;
}

std::string Comparison::describe() const
{
    std::ostringstream os;
    if (equal) {
        os << "equal through degree " << through;
    } else if (mismatch) {
        os << "first mismatch at ";
        if (!mismatch->where.empty())
            os << mismatch->where << ' ';
        os << "q^" << mismatch->exponent << ": " << mismatch->lhs << " vs " << mismatch->rhs;
    } else {
        os << "not equal";
    }
    return os.str();
}

Comparison compare(const Series& lhs, const Series& rhs)
{
    Comparison c;
    int hi = std::min(lhs.prec(), rhs.prec());
    int lo = std::min(lhs.low(), rhs.low());
    c.through = hi - 1;
    for (int e = lo; e < hi; ++e) {
        Integer a = lhs.coeff(e);
        Integer b = rhs.coeff(e);
        if (a != b) {
            c.equal = false;
            c.mismatch = Mismatch{e, std::move(a), std::move(b), {}};
            return c;
        }
    }
    return c;
}

std::pair<Series, Series> jacobi_triple_product_sides(int z, int s, int N)
{
    if (s < 1 || s - z < 1 || s + z < 1)
        throw std::invalid_argument("triple product instantiation must keep product exponents positive");
    Series sum = Series::zero(N);
    for (int n = 0;; ++n) {
        long long e1 = static_cast<long long>(s) * n * n + static_cast<long long>(z) * n;
        if (e1 >= N)
            break;
        long long e2 = e1 + static_cast<long long>(s - z) * (2 * n + 1);
        Integer sign = (n % 2) ? -1 : 1;
        sum.set_coeff(static_cast<int>(e1), sum.coeff(static_cast<int>(e1)) + sign);
        if (e2 < N)
            sum.set_coeff(static_cast<int>(e2), sum.coeff(static_cast<int>(e2)) - sign);
    }
    Series prod = pochhammer(1, 2 * s, 2 * s, infinite, N);
    prod = pochhammer(1, s + z, 2 * s, infinite, N) * prod;
    prod = pochhammer(1, s - z, 2 * s, infinite, N) * prod;
    return {std::move(sum), std::move(prod)};
}

Comparison jacobi_triple_product_check(int z, int s, int N)
{
    auto [sum, prod] = jacobi_triple_product_sides(z, s, N);
    return compare(sum, prod);
}

std::string to_string(const Series& s, int max_terms)
{
    std::ostringstream os;
    int shown = 0;
    for (int e = s.low(); e < s.prec() && shown < max_terms; ++e) {
        Integer c = s.coeff(e);
        if (c.is_zero())
            continue;
        os << (shown ? (c.sign() < 0 ? " - " : " + ") : (c.sign() < 0 ? "-" : ""));
        Integer mag = abs(c);
        if (e == 0)
            os << mag;
        else
            os << (mag == Integer(1) ? "" : mag.to_string() + "*") << "q^" << e;
        ++shown;
    }
    if (!shown)
        os << "0";
    os << " + O(q^" << s.prec() << ")";
    return os.str();
}

} // namespace qshelf
