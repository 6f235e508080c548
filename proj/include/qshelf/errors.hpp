#ifndef QSHELF_ERRORS_HPP
#define QSHELF_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "qshelf/integer.hpp"

namespace qshelf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAUnit : public Error {
public:
    NotAUnit(int exponent, const Integer& c)
        : Error("lowest coefficient " + c.to_string() + " at q^" + std::to_string(exponent) + " is not a unit"),
          exponent(exponent), coefficient(c)
    {
    }
    int exponent;
    Integer coefficient;
};

class AllZero : public Error {
public:
    AllZero() : Error("series is zero on its known window") {}
};

class NotDivisible : public Error {
public:
    NotDivisible(int exponent, const Integer& c, const std::string& what = {})
        : Error("not divisible: coefficient " + c.to_string() + " at q^" + std::to_string(exponent)
                + (what.empty() ? "" : " (" + what + ")")),
          exponent(exponent), coefficient(c)
    {
    }
    int exponent;
    Integer coefficient;
};

class DivergentProduct : public Error {
public:
    explicit DivergentProduct(int e) : Error("infinite product with first exponent " + std::to_string(e) + " <= 0") {}
};

class PrecisionExhausted : public Error {
public:
    PrecisionExhausted(int needed, int available)
        : Error("precision exhausted: need prec " + std::to_string(needed) + ", have " + std::to_string(available)),
          needed(needed), available(available)
    {
    }
    int needed;
    int available;
};

class PatternMismatch : public Error {
public:
    using Error::Error;
};

class RouteMismatch : public Error {
public:
    using Error::Error;
};

class NoStabilization : public Error {
public:
    explicit NoStabilization(int budget)
        : Error("no stabilization within j budget " + std::to_string(budget)), budget(budget)
    {
    }
    int budget;
};

class NegativeExponent : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace qshelf

#endif
