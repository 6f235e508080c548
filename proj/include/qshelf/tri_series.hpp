#ifndef QSHELF_TRI_SERIES_HPP
#define QSHELF_TRI_SERIES_HPP

#include <string>
#include <vector>

#include "qshelf/integer.hpp"
#include "qshelf/series.hpp"

namespace qshelf {

struct TriMonomial {
    Integer c;
    int a = 0;
    int x = 0;
    int q = 0;
};

struct TriTerm {
    int a, x, q;
    Integer c;
};

// Series in a, x, q with nonnegative exponents. A monomial a^A x^X q^N is
// known when N < q_prec and X < x_prec. With x_prec == q_prec the series is
// "q-truncated": every x is assumed to carry a q, so x < q_prec is implied.
// Storage is dense in (x, q) per power of a; a grows on demand.
class TriSeries {
public:
    TriSeries() = default;
    TriSeries(int q_prec, int x_prec);
    static TriSeries q_truncated(int q_prec) { return TriSeries(q_prec, q_prec); }
    static TriSeries one(int q_prec, int x_prec);

    int q_prec() const noexcept { return qp_; }
    int x_prec() const noexcept { return xp_; }
    int a_dim() const noexcept { return ad_; }
    bool q_only() const noexcept { return xp_ == qp_; }

    Integer coeff(int a, int x, int q) const;
    void set(int a, int x, int q, Integer c);
    void add_at(int a, int x, int q, const Integer& c);
    bool is_zero() const;
    std::vector<TriTerm> terms() const; // nonzero terms, ordered by (q, a, x)

    TriSeries truncated(int q_prec, int x_prec) const;

    TriSeries& operator+=(const TriSeries& o);
    TriSeries& operator-=(const TriSeries& o);
    TriSeries operator-() const;
    friend TriSeries operator+(TriSeries l, const TriSeries& r) { return l += r; }
    friend TriSeries operator-(TriSeries l, const TriSeries& r) { return l -= r; }

    // multiply by c a^A x^X q^N (nonnegative exponents)
    TriSeries& shift(int a, int x, int q);
    // *= (1 + c a^A x^X q^N), (A, X, N) != 0
    TriSeries& mul_binomial(const Integer& c, int a, int x, int q);
    // /= (1 + c a^A x^X q^N), X + N > 0
    TriSeries& div_binomial(const Integer& c, int a, int x, int q);
    // product with a finite polynomial with nonnegative exponents
    TriSeries times(const std::vector<TriMonomial>& poly) const;
    // *this += c a^A x^X q^N src, dropping whatever leaves the window
    void add_shifted(const TriSeries& src, const Integer& c, int A, int X, int N);

    // lowest (q, a, x)-ordered term violating q >= x and q >= a, if any
    std::optional<TriTerm> support_violation() const;

private:
    std::size_t idx(int a, int x, int q) const
    {
        return (static_cast<std::size_t>(a) * static_cast<std::size_t>(xp_) + static_cast<std::size_t>(x))
                   * static_cast<std::size_t>(qp_)
               + static_cast<std::size_t>(q);
    }
    void grow_a(int dim);
    void trim_a();

    int qp_ = 0;
    int xp_ = 0;
    int ad_ = 0;
    std::vector<Integer> d_;
};

// x -> x q^s. The result is q-truncated at min(q_prec, x_prec) when s >= 1.
TriSeries substitute_x(const TriSeries& t, int s);

// strict division by (x q)^r; NotDivisible names the offending monomial
TriSeries divide_exact_by_xq_power(const TriSeries& t, int r);

// (a, x, q) -> (1/q, q^(2 j), q^2), exact below min(q_prec, N).
Series specialize_dictionary(const TriSeries& t, int j_shelf, int N);

Comparison compare(const TriSeries& lhs, const TriSeries& rhs);

std::string describe_monomial(int a, int x, int q);

} // namespace qshelf

#endif
