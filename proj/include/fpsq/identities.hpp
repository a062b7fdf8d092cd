#pragma once

#include "fpsq/mpoly.hpp"
#include "fpsq/report.hpp"
#include "fpsq/series.hpp"

#include <vector>

namespace fpsq {

// One term of the inner sum: (-1)^{k+1}/k * binom(mk,k) * binom(n+(m-1)k, n-k),
// for 1 <= k <= n.
Rational s_main_term(int m, int n, int k);

// S_m(n) = (1/m) * sum_{k=1..n} s_main_term(m,n,k), with S_m(0) = 0.
Rational s_main(int m, int n);

// One report per n comparing S_m(n) against H_n, exact. n_max = 0 reports the
// trivial n = 0 instance.
std::vector<IdentityReport> verify_main(int m, int n_max);

// A_m(x) = sum_{n>=0} S_m(n) x^n, coefficients evaluated one by one.
Series a_series_direct(int m, int trunc_degree);

// sum_{n>=1} H_n x^n, built as the Cauchy product (-log(1-x)) * 1/(1-x).
Series h_log_series(int trunc_degree);

// Checks the summation-order/substitution reduction: A_m(x) rebuilt as
// 1/(m(1-x)) * sum_k (-1)^{k+1}/k binom(mk,k) u(x)^k with u(x) = x/(1-x)^m,
// against the directly summed A_m(x).
IdentityReport reduction_check(int m, int trunc_degree);

// Checks that v(x/(1-x)^m) is the identity series x, where v = u*(1-v)^m.
IdentityReport substitution_check(int m, int trunc_degree);

// The inner sum expanded symbolically in m: P(m) = sum_{k=1..n} (-1)^{k+1}/k
// * B1(m,k) * B2(m,n,k) with both binomials as exact polynomials in m.
MPoly main_sum_poly(int n);

// Checks that P(m) has zero constant term and P(m)/m is the constant
// polynomial H_n (every positive-degree coefficient exactly zero).
IdentityReport poly_in_m_check(int n);

} // namespace fpsq
