#ifndef QSHELF_SHELVES_HPP
#define QSHELF_SHELVES_HPP

#include <optional>
#include <vector>

#include "qshelf/series.hpp"

namespace qshelf {

struct ShelfLabel {
    int k = 2;
    int j = 0;
    int i = 1;
    int ell() const noexcept { return (k - 1) * j + i; }
    // (j, k) and (j + 1, 1) name the same series; prefer the latter
    ShelfLabel canonical() const noexcept { return i == k ? ShelfLabel{k, j + 1, 1} : *this; }
};

// All series below are truncated at prec N: coefficients of q^0 .. q^(N-1).

Series product_side(int k, int i, int N);
Series shelf0_sum_form(int k, int i, int N);
Series ghost0_closed(int k, int i, int N);
Series closed_form_G(int k, int j, int i, int N);
Series closed_form_ghost(int k, int j, int i, int N);

// Ghost at position 1 of shelf j; only reachable through the trivariate
// dictionary, so this forwards to the axq engine.
Series ghost_position_one(int k, int j, int N);

struct ShelfPair {
    int k = 2;
    int j = 0;
    std::vector<Series> officials; // positions 1..k
    std::vector<Series> ghosts;    // positions 2..k
    int effective_prec = 0;

    const Series& G(int i) const { return officials.at(static_cast<std::size_t>(i - 1)); }
    const Series& ghost(int i) const { return ghosts.at(static_cast<std::size_t>(i - 2)); }
    void refresh_prec();
};

ShelfPair shelf_from_closed_forms(int k, int j, int N);

// Ghosts of one shelf from its officials by the explicit interpolation.
std::vector<Series> ghosts_from_officials(int k, int j, const std::vector<Series>& officials);

struct DivisionStep {
    int position;  // position on the new shelf
    int exponent;  // divisor q^exponent
    bool alternate; // the second of the two numerators for positions >= 3
    int numerator_valuation; // -1 when the numerator vanished on its window
};

struct ShelfStepTrace {
    std::vector<DivisionStep> divisions;
    std::vector<Comparison> alternate_agreement; // positions 3..k
    Comparison position2_is_ghost;
};

// One application of the shelf recursions. Every q-power division is
// strict; positions >= 3 are computed from both numerators and compared.
ShelfPair next_shelf(const ShelfPair& pair, ShelfStepTrace* trace = nullptr);

// prec lost by one recursion step from shelf j to j + 1
int shelf_step_loss(int k, int j);
// starting prec needed so that shelf j_target is known below `window`
int required_degree(int k, int j_target, int window);

struct ValuationReport {
    int k = 0, j = 0, i = 0;
    bool ghost = false;
    std::optional<int> valuation; // of series - 1; empty if zero on window
    int window = 0;               // prec of the series inspected
    int required = 0;
    bool pass = false;
};

ValuationReport valuation_report(const Series& s, int k, int j, int i, bool ghost);
ValuationReport empirical_hypothesis_check(int k, int j, int i, int N, bool ghost);

} // namespace qshelf

#endif
