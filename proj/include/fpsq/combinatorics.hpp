#pragma once

#include "fpsq/rational.hpp"

namespace fpsq {

mpz_class factorial(int n);

// Generalized binomial coefficient a(a-1)...(a-b+1)/b! for integer a, b >= 0.
// Always integer-valued; in particular binom_int(-k, j) = (-1)^j binom_int(k+j-1, j).
Rational binom_int(long long a, int b);

// Same falling-factorial form with rational top argument.
Rational binom_rat(const Rational& a, int b);

// Exact n-th harmonic number 1 + 1/2 + ... + 1/n, with harmonic(0) = 0.
Rational harmonic(int n);

} // namespace fpsq
