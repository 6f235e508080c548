#ifndef QSHELF_INTEGER_HPP
#define QSHELF_INTEGER_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qshelf {

// Signed integer of unbounded size. Values that fit in int64 live inline and
// never touch the heap; cpp_int takes over only after an overflow.
// Invariant: big_ is non-null iff the value does not fit in int64.
class Integer {
public:
    using Big = boost::multiprecision::cpp_int;

    Integer() noexcept = default;
    template <std::signed_integral T>
        requires(sizeof(T) <= sizeof(std::int64_t))
    Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}
    explicit Integer(const Big& v) { assign(v); }
    explicit Integer(std::string_view decimal);

    Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<Big>(*o.big_) : nullptr) {}
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o)
    {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;

    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    bool fits_int64() const noexcept { return !big_; }
    int sign() const noexcept;
    std::int64_t to_int64() const;
    Big to_big() const { return big_ ? *big_ : Big(small_); }
    std::string to_string() const;

    Integer& operator+=(const Integer& o)
    {
        if (!big_ && !o.big_) {
            std::int64_t r;
            if (!__builtin_add_overflow(small_, o.small_, &r)) {
                small_ = r;
                return *this;
            }
        }
        assign(to_big() + o.to_big());
        return *this;
    }
    Integer& operator-=(const Integer& o)
    {
        if (!big_ && !o.big_) {
            std::int64_t r;
            if (!__builtin_sub_overflow(small_, o.small_, &r)) {
                small_ = r;
                return *this;
            }
        }
        assign(to_big() - o.to_big());
        return *this;
    }
    Integer& operator*=(const Integer& o)
    {
        if (!big_ && !o.big_) {
            std::int64_t r;
            if (!__builtin_mul_overflow(small_, o.small_, &r)) {
                small_ = r;
                return *this;
            }
        }
        assign(to_big() * o.to_big());
        return *this;
    }
    // *this += a * b
    void add_product(const Integer& a, const Integer& b)
    {
        if (!big_ && !a.big_ && !b.big_) {
            std::int64_t p, r;
            if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
                small_ = r;
                return;
            }
        }
        assign(to_big() + a.to_big() * b.to_big());
    }
    void sub_product(const Integer& a, const Integer& b)
    {
        if (!big_ && !a.big_ && !b.big_) {
            std::int64_t p, r;
            if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_sub_overflow(small_, p, &r)) {
                small_ = r;
                return;
            }
        }
        assign(to_big() - a.to_big() * b.to_big());
    }

    Integer operator-() const
    {
        if (!big_ && small_ != INT64_MIN)
            return Integer(-small_);
        Integer r;
        r.assign(-to_big());
        return r;
    }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b)
    {
        if (!a.big_ && !b.big_)
            return a.small_ == b.small_;
        return a.to_big() == b.to_big();
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b)
    {
        if (!a.big_ && !b.big_)
            return a.small_ <=> b.small_;
        auto c = a.to_big().compare(b.to_big());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v);

private:
    void assign(const Big& v);

    std::int64_t small_ = 0;
    std::unique_ptr<Big> big_;
};

Integer abs(const Integer& v);

} // namespace qshelf

#endif
