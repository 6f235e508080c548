#ifndef QSHELF_SERIES_HPP
#define QSHELF_SERIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qshelf/integer.hpp"
#include "qshelf/laurent_poly.hpp"

namespace qshelf {

// A q-series known exactly on the window [low, prec). Below low it is zero,
// from prec on it is unknown. Coefficients are stored densely on the window.
class Series {
public:
    Series() = default;
    Series(int low, std::vector<Integer> coeffs, int prec);

    static Series zero(int prec, int low = 0);
    static Series one(int prec);
    static Series monomial(const Integer& c, int e, int prec);
    static Series from_poly(const LaurentPoly& p, int prec);

    int low() const noexcept { return low_; }
    int prec() const noexcept { return prec_; }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }

    // zero below low; throws std::out_of_range at or above prec
    Integer coeff(int e) const;
    void set_coeff(int e, Integer c);
    std::optional<int> valuation() const;
    bool is_zero() const;
    bool nonnegative() const;

    Series truncated(int new_prec) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series operator-() const;
    Series& scale(const Integer& c);
    Series& shift(int m);
    // in place multiplication by (1 + sign q^d), d >= 0
    Series& mul_binomial(int sign, int d);
    // in place division by (1 + sign q^d), d >= 1
    Series& div_binomial(int sign, int d);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

private:
    void reset_window(int low, int prec);

    int low_ = 0;
    int prec_ = 0;
    std::vector<Integer> c_;
};

Series operator*(const Series& a, const Series& b);
Series operator*(const LaurentPoly& p, const Series& s);

Series invert(const Series& s);
// exponent shift by -m; the strict variant demands vanishing below m
Series divide_by_q_power(const Series& s, int m);
Series divide_exact_by_q_power(const Series& s, int m);
Series substitute_q_power(const Series& s, int m);

// prod_{t<n} (1 - sign q^(e + step t)); n < 0 means infinite
Series pochhammer(int sign, int e, int step, int n, int prec);
inline constexpr int infinite = -1;

// 1/F(q) = prod over m not congruent 2 mod 4 of 1/(1 - q^m), memoized
const Series& f_inverse(int prec);

struct Mismatch {
    int exponent;
    Integer lhs;
    Integer rhs;
    std::string where; // extra coordinates for matrices and trivariate series
};

struct Comparison {
    bool equal = true;
    int through = -1; // last exponent compared
    std::optional<Mismatch> mismatch;
    explicit operator bool() const noexcept { return equal; }
    std::string describe() const;
};

// compare on the overlap of the two known windows
Comparison compare(const Series& lhs, const Series& rhs);

// Sum side against product side of the triple product identity after
// q -> q^step, z -> q^z_exponent, on the window below N.
Comparison jacobi_triple_product_check(int z_exponent, int q_step, int N);
// (sum side, product side) of the same instantiation
std::pair<Series, Series> jacobi_triple_product_sides(int z_exponent, int q_step, int N);

std::string to_string(const Series& s, int max_terms = 12);

} // namespace qshelf

#endif
