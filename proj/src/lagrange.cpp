#include "fpsq/lagrange.hpp"

#include "fpsq/combinatorics.hpp"

#include <stdexcept>

namespace fpsq {

namespace {

void require_nonzero_m(int m)
{
    if (m == 0)
        throw std::invalid_argument("m must be a nonzero integer");
}

void require_positive_degree(int n)
{
    if (n < 1)
        throw std::invalid_argument("truncation degree must be at least 1");
}

} // namespace

std::string ImplicitSolution::phi_description() const
{
    return std::string("(1") + (sign > 0 ? "+" : "-") + "w)^" + std::to_string(m);
}

ImplicitSolution solve_fixed_point(int m, int sign, int trunc_degree)
{
    require_nonzero_m(m);
    require_positive_degree(trunc_degree);
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign must be +1 or -1");

    const Series u = Series::x(trunc_degree);
    const Series one = Series::one(trunc_degree);
    const Rational s(sign);

    Series w(trunc_degree);
    // The contraction gains one exact coefficient per step; two equal
    // successive iterates mean the residual is exactly zero.
    for (int iter = 0; iter <= trunc_degree + 1; ++iter) {
        Series next = u * pow(one + s * w, m);
        if (next == w)
            return ImplicitSolution{next, m, sign, trunc_degree};
        w = next;
    }
    throw std::logic_error("fixed-point iteration failed to stabilize within the cap");
}

Series t_series_direct(int m, int trunc_degree)
{
    require_nonzero_m(m);
    require_positive_degree(trunc_degree);
    Series t(trunc_degree);
    for (int k = 1; k <= trunc_degree; ++k)
        t[k] = binom_int(static_cast<long long>(m) * k, k) / Rational(k);
    return t;
}

Series t_series_closed(int m, int trunc_degree)
{
    const Series w = solve_fixed_point(m, +1, trunc_degree).w;
    return Rational(m) * log(Series::one(trunc_degree) + w);
}

Series alternating_t_direct(int m, int trunc_degree)
{
    require_nonzero_m(m);
    require_positive_degree(trunc_degree);
    Series t(trunc_degree);
    for (int k = 1; k <= trunc_degree; ++k) {
        const Rational c = binom_int(static_cast<long long>(m) * k, k) / Rational(k);
        t[k] = (k % 2 == 1) ? c : -c;
    }
    return t;
}

Series binomial_gf_direct(int m, int trunc_degree)
{
    require_nonzero_m(m);
    Series t(trunc_degree);
    for (int k = 0; k <= trunc_degree; ++k)
        t[k] = binom_int(static_cast<long long>(m) * k, k);
    return t;
}

IdentityReport lagrange_i_check(int m, int trunc_degree)
{
    const Series lhs = t_series_direct(m, trunc_degree);
    const Series rhs = t_series_closed(m, trunc_degree);
    return make_report(IdentityId::LagrangeI, m, std::nullopt, trunc_degree,
                       json_string_array(coeff_strings(lhs)), json_string_array(coeff_strings(rhs)));
}

IdentityReport alternating_t_check(int m, int trunc_degree)
{
    const Series lhs = alternating_t_direct(m, trunc_degree);
    const Series v = solve_fixed_point(m, -1, trunc_degree).w;
    const Series rhs = Rational(-m) * log(Series::one(trunc_degree) - v);
    return make_report(IdentityId::LagrangeII, m, std::nullopt, trunc_degree,
                       json_string_array(coeff_strings(lhs)), json_string_array(coeff_strings(rhs)));
}

IdentityReport lb_extraction_check(int m, int trunc_degree)
{
    require_positive_degree(trunc_degree);
    const Series lhs = binomial_gf_direct(m, trunc_degree);
    const Series w = solve_fixed_point(m, +1, trunc_degree).w;
    const Series one = Series::one(trunc_degree);
    const Series rhs = (one + w) * inverse(one + Rational(1 - m) * w);
    return make_report(IdentityId::ClosedFormGf, m, std::nullopt, trunc_degree,
                       json_string_array(coeff_strings(lhs)), json_string_array(coeff_strings(rhs)));
}

} // namespace fpsq
