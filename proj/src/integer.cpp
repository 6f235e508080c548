#include "qshelf/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace qshelf {

Integer::Integer(std::string_view decimal)
{
    if (decimal.empty())
        throw std::invalid_argument("empty integer literal");
    std::size_t pos = (decimal[0] == '-' || decimal[0] == '+') ? 1 : 0;
    if (pos == decimal.size())
        throw std::invalid_argument("bad integer literal");
    for (std::size_t t = pos; t < decimal.size(); ++t)
        if (decimal[t] < '0' || decimal[t] > '9')
            throw std::invalid_argument("bad integer literal: " + std::string(decimal));
    assign(Big(std::string(decimal[0] == '+' ? decimal.substr(1) : decimal)));
}

void Integer::assign(const Big& v)
{
    static const Big lo(std::numeric_limits<std::int64_t>::min());
    static const Big hi(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) {
        small_ = static_cast<std::int64_t>(v);
        big_.reset();
    } else {
        small_ = 0;
        if (big_)
            *big_ = v;
        else
            big_ = std::make_unique<Big>(v);
    }
}

int Integer::sign() const noexcept
{
    if (big_)
        return big_->sign();
    return small_ > 0 ? 1 : (small_ < 0 ? -1 : 0);
}

std::int64_t Integer::to_int64() const
{
    if (big_)
        throw std::overflow_error("integer does not fit in int64: " + big_->str());
    return small_;
}

std::string Integer::to_string() const
{
    return big_ ? big_->str() : std::to_string(small_);
}

std::ostream& operator<<(std::ostream& os, const Integer& v)
{
    return os << v.to_string();
}

Integer abs(const Integer& v)
{
    return v.sign() < 0 ? -v : v;
}

} // namespace qshelf
