#ifndef QSHELF_TESTS_NAIVE_HPP
#define QSHELF_TESTS_NAIVE_HPP

// Plain int64 power series used as a second opinion in the tests. Nothing
// clever: schoolbook products, geometric expansion for 1/(1 - q^e).

#include <cstdint>
#include <random>
#include <vector>

#include "qshelf/series.hpp"

namespace naive {

using Poly = std::vector<std::int64_t>;

inline Poly one(int n)
{
    Poly p(static_cast<std::size_t>(n), 0);
    p[0] = 1;
    return p;
}

// p *= (1 + c q^e)
inline void mul_bin(Poly& p, std::int64_t c, int e)
{
    for (int t = static_cast<int>(p.size()) - 1; t >= e; --t)
        p[static_cast<std::size_t>(t)] += c * p[static_cast<std::size_t>(t - e)];
}

// p /= (1 - q^e), e >= 1
inline void div_geom(Poly& p, int e)
{
    for (std::size_t t = static_cast<std::size_t>(e); t < p.size(); ++t)
        p[t] += p[t - static_cast<std::size_t>(e)];
}

inline bool same(const qshelf::Series& s, const Poly& p)
{
    int n = std::min(s.prec(), static_cast<int>(p.size()));
    for (int e = 0; e < n; ++e)
        if (s.coeff(e) != qshelf::Integer(p[static_cast<std::size_t>(e)]))
            return false;
    return true;
}

// the infinite product with (1 + q^odd) over (1 - q^even), times the three
// factors removed at residues a, b and 0 modulo m
inline Poly bgg_product(int k, int i, int n)
{
    Poly p = one(n);
    const int m = 4 * k - 2;
    for (int t = 1; t < n; ++t) {
        if (t % 2)
            mul_bin(p, 1, t);
        else
            div_geom(p, t);
    }
    for (int base : {2 * k - 2 * i + 1, 2 * k + 2 * i - 3, m})
        for (int e = base; e < n; e += m)
            mul_bin(p, -1, e);
    return p;
}

// number of partitions of 0..n-1
inline Poly partition_numbers(int n)
{
    Poly p = one(n);
    for (int e = 1; e < n; ++e)
        div_geom(p, e);
    return p;
}

inline qshelf::Series random_series(std::mt19937& rng, int prec, int spread = 9)
{
    std::uniform_int_distribution<int> d(-spread, spread);
    qshelf::Series s = qshelf::Series::zero(prec);
    for (int e = 0; e < prec; ++e)
        s.set_coeff(e, d(rng));
    return s;
}

} // namespace naive

#endif
