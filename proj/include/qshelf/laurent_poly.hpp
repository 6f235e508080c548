#ifndef QSHELF_LAURENT_POLY_HPP
#define QSHELF_LAURENT_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "qshelf/integer.hpp"

namespace qshelf {

// Exact Laurent polynomial in q. Stored densely between the lowest and
// highest nonzero exponents; terms() exposes only the nonzero ones.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Integer& c);
    template <std::signed_integral T>
    LaurentPoly(T c) : LaurentPoly(Integer(c)) {}

    static LaurentPoly monomial(const Integer& c, int e);
    static LaurentPoly from_terms(const std::map<int, Integer>& terms);

    bool is_zero() const noexcept { return c_.empty(); }
    int valuation() const;
    int degree() const;
    Integer coeff(int e) const;
    std::map<int, Integer> terms() const;
    std::size_t term_count() const;
    bool nonnegative_coefficients() const;

    LaurentPoly shifted(int m) const;
    LaurentPoly truncated_above(int max_exp) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    std::string to_string() const;

    // raw dense view, valid when !is_zero(): coefficient of q^(low() + t)
    int low() const noexcept { return low_; }
    const std::vector<Integer>& dense() const noexcept { return c_; }

private:
    void trim();

    int low_ = 0;
    std::vector<Integer> c_;
};

} // namespace qshelf

#endif
