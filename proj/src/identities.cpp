#include "fpsq/identities.hpp"

#include "fpsq/combinatorics.hpp"
#include "fpsq/lagrange.hpp"

#include <stdexcept>

namespace fpsq {

namespace {

void require_nonzero_m(int m)
{
    if (m == 0)
        throw std::invalid_argument("m must be a nonzero integer");
}

// x/(1-x)^m as a series in x, truncated.
Series u_of_x(int m, int trunc_degree)
{
    const Series one_minus_x = Series::one(trunc_degree) - Series::x(trunc_degree);
    return Series::x(trunc_degree) * pow(one_minus_x, -static_cast<long>(m));
}

} // namespace

Rational s_main_term(int m, int n, int k)
{
    require_nonzero_m(m);
    if (k < 1 || k > n)
        throw std::invalid_argument("term index k must satisfy 1 <= k <= n");
    const long long mk = static_cast<long long>(m) * k;
    const long long top = static_cast<long long>(n) + (static_cast<long long>(m) - 1) * k;
    Rational term = binom_int(mk, k) * binom_int(top, n - k) / Rational(k);
    return (k % 2 == 1) ? term : -term;
}

Rational s_main(int m, int n)
{
    require_nonzero_m(m);
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    Rational sum = 0;
    for (int k = 1; k <= n; ++k)
        sum += s_main_term(m, n, k);
    return sum / Rational(m);
}

std::vector<IdentityReport> verify_main(int m, int n_max)
{
    require_nonzero_m(m);
    if (n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    std::vector<IdentityReport> reports;
    const int lo = (n_max == 0) ? 0 : 1;
    for (int n = lo; n <= n_max; ++n)
        reports.push_back(make_report(IdentityId::Main, m, n, std::nullopt,
                                      s_main(m, n).str(), harmonic(n).str()));
    return reports;
}

Series a_series_direct(int m, int trunc_degree)
{
    require_nonzero_m(m);
    Series a(trunc_degree);
    for (int n = 0; n <= trunc_degree; ++n)
        a[n] = s_main(m, n);
    return a;
}

Series h_log_series(int trunc_degree)
{
    if (trunc_degree < 1)
        throw std::invalid_argument("truncation degree must be at least 1");
    const Series one_minus_x = Series::one(trunc_degree) - Series::x(trunc_degree);
    return (-log(one_minus_x)) * inverse(one_minus_x);
}

IdentityReport reduction_check(int m, int trunc_degree)
{
    require_nonzero_m(m);
    const int n = trunc_degree;
    // u(x) has valuation 1, so the inner sum truncated at k <= N already
    // determines every coefficient through x^N exactly.
    const Series inner = compose(alternating_t_direct(m, n), u_of_x(m, n));
    const Series one_minus_x = Series::one(n) - Series::x(n);
    const Series reduced = (Rational(1, m) * inner) * inverse(one_minus_x);
    const Series direct = a_series_direct(m, n);
    return make_report(IdentityId::GfEqualsHlog, m, std::nullopt, n,
                       json_string_array(coeff_strings(direct)),
                       json_string_array(coeff_strings(reduced)));
}

IdentityReport substitution_check(int m, int trunc_degree)
{
    require_nonzero_m(m);
    const int n = trunc_degree;
    const Series v = solve_fixed_point(m, -1, n).w;
    const Series composed = compose(v, u_of_x(m, n));
    return make_report(IdentityId::SubstitutionVEqX, m, std::nullopt, n,
                       json_string_array(coeff_strings(composed)),
                       json_string_array(coeff_strings(Series::x(n))));
}

MPoly main_sum_poly(int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    MPoly p;
    for (int k = 1; k <= n; ++k) {
        // binom(mk, k) = prod_{i<k} (k*m - i) / k!
        MPoly b1 = MPoly::constant(1);
        for (int i = 0; i < k; ++i)
            b1 = b1 * MPoly::linear(Rational(k), Rational(-i));
        b1 = Rational(mpz_class(1), factorial(k)) * b1;

        // binom(n+(m-1)k, n-k) = prod_{i<n-k} (k*m + (n-k-i)) / (n-k)!
        MPoly b2 = MPoly::constant(1);
        for (int i = 0; i < n - k; ++i)
            b2 = b2 * MPoly::linear(Rational(k), Rational(n - k - i));
        b2 = Rational(mpz_class(1), factorial(n - k)) * b2;

        const Rational c = (k % 2 == 1) ? Rational(1, k) : Rational(-1, k);
        p = p + c * (b1 * b2);
    }
    return p;
}

IdentityReport poly_in_m_check(int n)
{
    const MPoly p = main_sum_poly(n);
    const MPoly expected = MPoly::constant(harmonic(n));
    if (!p.coeff(0).is_zero()) {
        // Not divisible by m; report the undivided polynomial.
        return make_report(IdentityId::PolyInM, std::nullopt, n, std::nullopt,
                           json_string_array(coeff_strings(p)),
                           json_string_array(coeff_strings(expected)));
    }
    return make_report(IdentityId::PolyInM, std::nullopt, n, std::nullopt,
                       json_string_array(coeff_strings(p.divided_by_m())),
                       json_string_array(coeff_strings(expected)));
}

} // namespace fpsq
