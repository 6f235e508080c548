#include "qshelf/matrices.hpp"

#include <stdexcept>

#include "qshelf/errors.hpp"

namespace qshelf {

namespace {

void check_dims(int k, int j)
{
    if (k < 2)
        throw std::invalid_argument("k must be at least 2");
    if (j < 1)
        throw std::invalid_argument("matrix index j must be at least 1");
}

LaurentPoly mono(int e, int c = 1)
{
    return LaurentPoly::monomial(Integer(c), e);
}

} // namespace

PolyMatrix::PolyMatrix(int k) : k_(k), e_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k))
{
}

PolyMatrix PolyMatrix::identity(int k)
{
    PolyMatrix m(k);
    for (int r = 1; r <= k; ++r)
        m.at(r, r) = LaurentPoly(1);
    return m;
}

LaurentPoly& PolyMatrix::at(int r, int c)
{
    return e_.at(static_cast<std::size_t>((r - 1) * k_ + (c - 1)));
}

const LaurentPoly& PolyMatrix::at(int r, int c) const
{
    return e_.at(static_cast<std::size_t>((r - 1) * k_ + (c - 1)));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.k_ != b.k_)
        throw std::invalid_argument("matrix dimensions differ");
    PolyMatrix m(a.k_);
    for (int r = 1; r <= a.k_; ++r)
        for (int t = 1; t <= a.k_; ++t) {
            const LaurentPoly& x = a.at(r, t);
            if (x.is_zero())
                continue;
            for (int c = 1; c <= a.k_; ++c)
                if (!b.at(t, c).is_zero())
                    m.at(r, c) += x * b.at(t, c);
        }
    return m;
}

bool PolyMatrix::nonnegative_exponents() const
{
    for (const auto& p : e_)
        if (!p.is_zero() && p.valuation() < 0)
            return false;
    return true;
}

bool PolyMatrix::nonnegative_coefficients() const
{
    for (const auto& p : e_)
        if (!p.nonnegative_coefficients())
            return false;
    return true;
}

std::string PolyMatrix::to_string() const
{
    std::string s;
    for (int r = 1; r <= k_; ++r) {
        s += "[";
        for (int c = 1; c <= k_; ++c) {
            if (c > 1)
                s += ", ";
            s += at(r, c).to_string();
        }
        s += "]\n";
    }
    return s;
}

std::optional<EntryMismatch> first_difference(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.k() != b.k())
        throw std::invalid_argument("matrix dimensions differ");
    for (int r = 1; r <= a.k(); ++r)
        for (int c = 1; c <= a.k(); ++c) {
            const LaurentPoly& x = a.at(r, c);
            const LaurentPoly& y = b.at(r, c);
            if (x == y)
                continue;
            LaurentPoly d = x - y;
            int e = d.valuation();
            std::string where = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
            return EntryMismatch{r, c, Mismatch{e, x.coeff(e), y.coeff(e), where}};
        }
    return std::nullopt;
}

std::vector<Series> mat_vec(const PolyMatrix& m, const std::vector<Series>& v)
{
    if (static_cast<int>(v.size()) != m.k())
        throw std::invalid_argument("vector length differs from matrix size");
    std::vector<Series> out;
    for (int r = 1; r <= m.k(); ++r) {
        std::optional<Series> acc;
        for (int c = 1; c <= m.k(); ++c) {
            if (m.at(r, c).is_zero())
                continue;
            Series t = m.at(r, c) * v[static_cast<std::size_t>(c - 1)];
            if (acc)
                *acc += t;
            else
                acc = std::move(t);
        }
        if (!acc) {
            int prec = INT32_MAX;
            for (const auto& s : v)
                prec = std::min(prec, s.prec());
            acc = Series::zero(prec);
        }
        out.push_back(std::move(*acc));
    }
    return out;
}

PolyMatrix build_B(int k, int j)
{
    check_dims(k, j);
    PolyMatrix b(k);
    b.at(1, k) = LaurentPoly(1);
    b.at(2, k - 1) = LaurentPoly(1);
    for (int r = 3; r <= k; ++r) {
        int e = -2 * j * (r - 2);
        b.at(r, k - r + 1) = mono(e);
        b.at(r, k - r + 3) = mono(e, -1);
    }
    return b;
}

PolyMatrix build_C(int k, int j)
{
    check_dims(k, j);
    PolyMatrix c(k);
    LaurentPoly diag = LaurentPoly(1) + mono(2 * j);
    c.at(1, 1) = LaurentPoly(1);
    c.at(2, 1) = mono(2 * j - 1);
    for (int r = 2; r <= k; ++r)
        c.at(r, r) = diag;
    for (int r = 3; r <= k; ++r)
        c.at(r, r - 1) = diag.shifted(-1);
    return c;
}

PolyMatrix build_A(int k, int j)
{
    check_dims(k, j);
    PolyMatrix a(k);
    // row r carries columns c <= k - r + 1 with c = r + k + 1 mod 2; the
    // weight is 1 in the first two columns and q^(2j(c-2)) after that
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= k - r + 1; ++c)
            if ((c - r - k - 1) % 2 == 0)
                a.at(r, c) = c <= 2 ? LaurentPoly(1) : mono(2 * j * (c - 2));
    if (auto d = first_difference(a * build_B(k, j), PolyMatrix::identity(k)))
        throw PatternMismatch("A B != I for k=" + std::to_string(k) + " j=" + std::to_string(j) + " at "
                              + d->at.where);
    return a;
}

PolyMatrix build_Aprime(int k, int j)
{
    PolyMatrix m = build_A(k, j) * build_C(k, j);
    if (!m.nonnegative_exponents())
        throw PatternMismatch("A' has a negative exponent for k=" + std::to_string(k) + " j=" + std::to_string(j));
    return m;
}

PolyMatrix h_by_product(int k, int J, int j)
{
    if (J < 0 || j < J)
        throw std::invalid_argument("need j >= J >= 0");
    PolyMatrix h = PolyMatrix::identity(k);
    for (int t = J + 1; t <= j; ++t)
        h = h * build_Aprime(k, t);
    return h;
}

PolyMatrix h_step(const PolyMatrix& prev, int j)
{
    const int k = prev.k();
    PolyMatrix h(k);
    for (int i = 1; i <= k; ++i)
        for (int l = 1; l <= k; ++l) {
            LaurentPoly same, diff;
            for (int m = 1; m <= k - l; ++m)
                if ((m - l - k) % 2 == 0)
                    same += prev.at(i, m);
            for (int m = 1; m <= k - l + 1; ++m)
                if ((m - l - k) % 2 != 0)
                    diff += prev.at(i, m);
            LaurentPoly inner = same.shifted(2 * j - 1) + diff;
            LaurentPoly e = inner.shifted(2 * j * (l - 1));
            if (l > 1)
                e += inner.shifted(2 * j * (l - 2));
            h.at(i, l) = std::move(e);
        }
    return h;
}

PolyMatrix h_by_recursion(int k, int J, int j)
{
    if (J < 0 || j < J)
        throw std::invalid_argument("need j >= J >= 0");
    PolyMatrix h = PolyMatrix::identity(k);
    for (int t = J + 1; t <= j; ++t)
        h = h_step(h, t);
    return h;
}

PolyMatrix h_one_up(int k, int J)
{
    PolyMatrix h(k);
    int w = 2 * J + 2;
    for (int i = 1; i <= k; ++i)
        for (int l = 1; l <= k; ++l) {
            if (l > k - i + 1)
                continue;
            LaurentPoly base = mono((l - 1) * w);
            if (l > 1)
                base += mono((l - 2) * w);
            bool matches = ((l + k - 1 - i) % 2 + 2) % 2 == 0;
            if (matches)
                h.at(i, l) = base;
            else if (l <= k - i)
                h.at(i, l) = base.shifted(2 * J + 1);
        }
    return h;
}

Stabilized h12_stabilized(int k, int i, int J, int prec, int budget)
{
    if (i < 1 || i > k)
        throw std::invalid_argument("position outside [1, k]");
    if (budget < 0)
        budget = J + prec + 8;
    // terms at or above prec never feed back into lower degrees, so the
    // iteration can run on truncated polynomials
    auto cut = [&](PolyMatrix m) {
        for (int r = 1; r <= k; ++r)
            for (int c = 1; c <= k; ++c)
                m.at(r, c) = m.at(r, c).truncated_above(prec - 1);
        return m;
    };
    PolyMatrix h = PolyMatrix::identity(k);
    std::optional<LaurentPoly> last;
    for (int j = J + 1; j <= budget; ++j) {
        h = cut(h_step(h, j));
        LaurentPoly sum = h.at(i, 1) + h.at(i, 2);
        bool tail_gone = true;
        for (int l = 3; l <= k; ++l)
            tail_gone = tail_gone && h.at(i, l).is_zero();
        if (last && *last == sum && tail_gone)
            return {Series::from_poly(sum, prec), j};
        last = std::move(sum);
    }
    throw NoStabilization(budget);
}

} // namespace qshelf
