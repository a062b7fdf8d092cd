#include "fpsq/combinatorics.hpp"

#include <stdexcept>

namespace fpsq {

mpz_class factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative integer");
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

Rational binom_int(long long a, int b)
{
    if (b < 0)
        throw std::invalid_argument("binomial lower index must be nonnegative");
    mpz_class num = 1;
    for (int i = 0; i < b; ++i)
        num *= mpz_class(static_cast<long>(a - i));
    return Rational(num, factorial(b));
}

Rational binom_rat(const Rational& a, int b)
{
    if (b < 0)
        throw std::invalid_argument("binomial lower index must be nonnegative");
    Rational p = 1;
    for (int i = 0; i < b; ++i)
        p *= a - Rational(i);
    return p / Rational(factorial(b));
}

Rational harmonic(int n)
{
    if (n < 0)
        throw std::invalid_argument("harmonic index must be nonnegative");
    Rational h = 0;
    for (long i = 1; i <= n; ++i)
        h += Rational(1L, i);
    return h;
}

} // namespace fpsq
