#ifndef QSHELF_MATRICES_HPP
#define QSHELF_MATRICES_HPP

#include <optional>
#include <string>
#include <vector>

#include "qshelf/laurent_poly.hpp"
#include "qshelf/series.hpp"

namespace qshelf {

// k x k matrix of Laurent polynomials, 1-indexed accessors
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(int k);
    static PolyMatrix identity(int k);

    int k() const noexcept { return k_; }
    LaurentPoly& at(int r, int c);
    const LaurentPoly& at(int r, int c) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

    bool nonnegative_exponents() const;
    bool nonnegative_coefficients() const;
    std::string to_string() const;

private:
    int k_ = 0;
    std::vector<LaurentPoly> e_;
};

struct EntryMismatch {
    int row, col;
    Mismatch at;
};

// first differing entry, scanning rows then columns
std::optional<EntryMismatch> first_difference(const PolyMatrix& a, const PolyMatrix& b);

// matrix times a column of series
std::vector<Series> mat_vec(const PolyMatrix& m, const std::vector<Series>& v);

PolyMatrix build_B(int k, int j);
PolyMatrix build_C(int k, int j);
// the staircase pattern for either parity of k; PatternMismatch unless A B = I
PolyMatrix build_A(int k, int j);
// A C; PatternMismatch if a negative exponent survives
PolyMatrix build_Aprime(int k, int j);

// A'_(J+1) ... A'_(j); the identity when j == J
PolyMatrix h_by_product(int k, int J, int j);
// entrywise recursion from the Kronecker-delta start
PolyMatrix h_by_recursion(int k, int J, int j);
// one recursion step: the matrix at shelf j from the one at j - 1
PolyMatrix h_step(const PolyMatrix& prev, int j);
// the case analysis for j = J + 1
PolyMatrix h_one_up(int k, int J);

struct Stabilized {
    Series sum;    // h_i1 + h_i2 on [0, prec)
    int j_stop;    // first j at which the prefix repeated and the tail vanished
};
// iterate j until h_i1 + h_i2 stops changing below prec and every h_il with
// l >= 3 vanishes below prec
Stabilized h12_stabilized(int k, int i, int J, int prec, int budget = -1);

} // namespace qshelf

#endif
