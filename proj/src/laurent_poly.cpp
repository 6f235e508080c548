#include "qshelf/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qshelf {

LaurentPoly::LaurentPoly(const Integer& c)
{
    if (!c.is_zero())
        c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int e)
{
    LaurentPoly p(c);
    p.low_ = e;
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Integer>& terms)
{
    LaurentPoly p;
    if (terms.empty())
        return p;
    p.low_ = terms.begin()->first;
    p.c_.resize(static_cast<std::size_t>(terms.rbegin()->first - p.low_ + 1));
    for (const auto& [e, c] : terms)
        p.c_[static_cast<std::size_t>(e - p.low_)] = c;
    p.trim();
    return p;
}

void LaurentPoly::trim()
{
    std::size_t head = 0;
    while (head < c_.size() && c_[head].is_zero())
        ++head;
    if (head == c_.size()) {
        c_.clear();
        low_ = 0;
        return;
    }
    while (c_.back().is_zero())
        c_.pop_back();
    if (head) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(head));
        low_ += static_cast<int>(head);
    }
}

int LaurentPoly::valuation() const
{
    if (is_zero())
        throw std::domain_error("valuation of the zero polynomial");
    return low_;
}

int LaurentPoly::degree() const
{
    if (is_zero())
        throw std::domain_error("degree of the zero polynomial");
    return low_ + static_cast<int>(c_.size()) - 1;
}

Integer LaurentPoly::coeff(int e) const
{
    if (is_zero() || e < low_ || e > degree())
        return Integer();
    return c_[static_cast<std::size_t>(e - low_)];
}

std::map<int, Integer> LaurentPoly::terms() const
{
    std::map<int, Integer> out;
    for (std::size_t t = 0; t < c_.size(); ++t)
        if (!c_[t].is_zero())
            out.emplace(low_ + static_cast<int>(t), c_[t]);
    return out;
}

std::size_t LaurentPoly::term_count() const
{
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Integer& c) { return !c.is_zero(); }));
}

bool LaurentPoly::nonnegative_coefficients() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return c.sign() >= 0; });
}

LaurentPoly LaurentPoly::shifted(int m) const
{
    LaurentPoly p = *this;
    if (!p.is_zero())
        p.low_ += m;
    return p;
}

LaurentPoly LaurentPoly::truncated_above(int max_exp) const
{
    if (is_zero() || degree() <= max_exp)
        return *this;
    LaurentPoly p;
    if (max_exp < low_)
        return p;
    p.low_ = low_;
    p.c_.assign(c_.begin(), c_.begin() + (max_exp - low_ + 1));
    p.trim();
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(degree(), o.degree());
    if (lo < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Integer());
        low_ = lo;
    }
    c_.resize(static_cast<std::size_t>(hi - low_ + 1));
    for (std::size_t t = 0; t < o.c_.size(); ++t)
        c_[static_cast<std::size_t>(o.low_ - low_) + t] += o.c_[t];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly p = *this;
    for (auto& c : p.c_)
        c = -c;
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly p;
    if (a.is_zero() || b.is_zero())
        return p;
    p.low_ = a.low_ + b.low_;
    p.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (std::size_t s = 0; s < a.c_.size(); ++s) {
        if (a.c_[s].is_zero())
            continue;
        for (std::size_t t = 0; t < b.c_.size(); ++t)
            p.c_[s + t].add_product(a.c_[s], b.c_[t]);
    }
    p.trim();
    return p;
}

std::string LaurentPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        Integer mag = abs(c);
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == Integer(1);
        if (e == 0) {
            os << mag;
            continue;
        }
        if (!unit)
            os << mag << '*';
        os << "q";
        if (e != 1)
            os << '^' << e;
    }
    return os.str();
}

} // namespace qshelf
