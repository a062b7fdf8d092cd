#pragma once

#include "fpsq/report.hpp"
#include "fpsq/series.hpp"

#include <string>

namespace fpsq {

// Truncated solution of the implicit equation w = u*(1 + sign*w)^m.
// Invariants: w has zero constant term and w - u*(1+sign*w)^m vanishes
// identically mod u^{N+1}.
struct ImplicitSolution {
    Series w;
    int m;
    int sign;  // +1 or -1
    int trunc_degree;

    std::string phi_description() const;  // e.g. "(1+w)^3" or "(1-w)^-2"
};

// Solves w = u*(1 + sign*w)^m in u*Q[[u]] by x-adic fixed-point iteration
// from w = 0. Each iterate gains at least one exact coefficient, so the
// iteration stabilizes within N steps; exceeding the cap is an internal error.
ImplicitSolution solve_fixed_point(int m, int sign, int trunc_degree);

// sum_{k>=1} binom(mk,k)/k u^k, coefficients evaluated directly.
Series t_series_direct(int m, int trunc_degree);

// m*log(1+w) with w the fixed-point solution; equals t_series_direct.
Series t_series_closed(int m, int trunc_degree);

// sum_{k>=1} (-1)^{k+1} binom(mk,k)/k u^k, evaluated directly.
Series alternating_t_direct(int m, int trunc_degree);

// sum_{k>=0} binom(mk,k) u^k, evaluated directly.
Series binomial_gf_direct(int m, int trunc_degree);

// Direct sum vs m*log(1+w).
IdentityReport lagrange_i_check(int m, int trunc_degree);

// Alternating direct sum vs -m*log(1-v) with v = u*(1-v)^m.
IdentityReport alternating_t_check(int m, int trunc_degree);

// Direct sum of binom(mk,k) u^k vs the closed form (1+w)/(1+(1-m)w).
IdentityReport lb_extraction_check(int m, int trunc_degree);

} // namespace fpsq
