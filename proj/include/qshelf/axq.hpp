#ifndef QSHELF_AXQ_HPP
#define QSHELF_AXQ_HPP

#include "qshelf/tri_series.hpp"

namespace qshelf {

// (x q^s)^r * H_{k,i}(a; x q^s; q). With s == 0 the series needs an x bound;
// with s >= 1 it is q-truncated and x_prec is ignored.
TriSeries H_tilde_scaled(int k, int i, int s, int r, int q_prec, int x_prec);
TriSeries H_tilde(int k, int i, int q_prec, int x_prec);

// (x q^s)^r * HH_{k,i}(a; x q^s; q) where HH_{k,i} = (H_{k,i+1} + x H_{k,i-1}) / (1 + x)
TriSeries H_ghost_scaled(int k, int i, int s, int r, int q_prec, int x_prec);

// J_{k,i}(a; x; q), q-truncated
TriSeries J_tilde_combination(int k, int i, int q_prec);
TriSeries J_tilde_single_sum(int k, int i, int q_prec);
// both routes; RouteMismatch if they differ
TriSeries J_tilde(int k, int i, int q_prec);

// ghost JJ_{k,i}(a; x; q), 1 <= i <= k, q-truncated
TriSeries J_ghost_combination(int k, int i, int q_prec);
TriSeries J_ghost_interpolation(int k, int i, int q_prec);
TriSeries J_ghost_single_sum(int k, int i, int q_prec);
// all three routes; RouteMismatch if any pair differs
TriSeries J_tilde_ghost(int k, int i, int q_prec);

// throws NegativeExponent if a q-truncated result breaks q >= x, q >= a
void assert_support(const TriSeries& t, const char* what);

} // namespace qshelf

#endif
