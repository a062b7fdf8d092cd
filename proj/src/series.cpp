#include "fpsq/series.hpp"

#include "fpsq/combinatorics.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace fpsq {

namespace {

void require_same_degree(const Series& f, const Series& g, const char* op)
{
    if (f.trunc_degree() != g.trunc_degree())
        throw std::invalid_argument(std::string(op) + ": truncation degree mismatch, " +
                                    std::to_string(f.trunc_degree()) + " vs " +
                                    std::to_string(g.trunc_degree()));
}

// Antiderivative with zero constant term, restated at degree N+1.
Series integral(const Series& f)
{
    const int n = f.trunc_degree();
    Series r(n + 1);
    for (int i = 0; i <= n; ++i)
        r[i + 1] = f[i] / Rational(i + 1);
    return r;
}

} // namespace

Series::Series(int trunc_degree)
{
    if (trunc_degree < 0)
        throw std::invalid_argument("truncation degree must be nonnegative");
    coeffs_.assign(static_cast<size_t>(trunc_degree) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("series needs at least the constant coefficient");
}

Series Series::constant(const Rational& c, int trunc_degree)
{
    Series r(trunc_degree);
    r[0] = c;
    return r;
}

Series Series::monomial(const Rational& c, int k, int trunc_degree)
{
    if (k < 0)
        throw std::invalid_argument("monomial exponent must be nonnegative");
    Series r(trunc_degree);
    if (k <= trunc_degree)
        r[k] = c;
    return r;
}

bool Series::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

Series operator+(const Series& f, const Series& g)
{
    require_same_degree(f, g, "series add");
    Series r = f;
    for (int i = 0; i <= r.trunc_degree(); ++i)
        r[i] += g[i];
    return r;
}

Series operator-(const Series& f, const Series& g)
{
    require_same_degree(f, g, "series subtract");
    Series r = f;
    for (int i = 0; i <= r.trunc_degree(); ++i)
        r[i] -= g[i];
    return r;
}

Series operator-(const Series& f)
{
    Series r = f;
    for (int i = 0; i <= r.trunc_degree(); ++i)
        r[i] = -r[i];
    return r;
}

Series operator*(const Series& f, const Series& g)
{
    require_same_degree(f, g, "series multiply");
    const int n = f.trunc_degree();
    Series r(n);
    for (int i = 0; i <= n; ++i) {
        if (f[i].is_zero())
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (g[j].is_zero())
                continue;
            r[i + j] += f[i] * g[j];
        }
    }
    return r;
}

Series operator*(const Rational& c, const Series& f)
{
    Series r = f;
    for (int i = 0; i <= r.trunc_degree(); ++i)
        r[i] *= c;
    return r;
}

Series operator*(const Series& f, const Rational& c) { return c * f; }

bool operator==(const Series& f, const Series& g)
{
    require_same_degree(f, g, "series compare");
    return f.coeffs() == g.coeffs();
}

Series inverse(const Series& f)
{
    if (f.constant_term().is_zero())
        throw std::invalid_argument("series inverse requires a nonzero constant term");
    const int n = f.trunc_degree();
    const Rational c0 = Rational(1) / f.constant_term();
    Series g(n);
    g[0] = c0;
    for (int i = 1; i <= n; ++i) {
        Rational acc = 0;
        for (int j = 1; j <= i; ++j)
            acc += f[j] * g[i - j];
        g[i] = -(c0 * acc);
    }
    return g;
}

Series log(const Series& f)
{
    if (f.constant_term() != Rational(1))
        throw std::invalid_argument("series log requires constant term 1");
    const int n = f.trunc_degree();
    if (n == 0)
        return Series(0);
    return integral(derivative(f) * inverse(truncated(f, n - 1)));
}

Series pow(const Series& f, long e)
{
    const int n = f.trunc_degree();
    if (e == 0)
        return Series::one(n);
    if (e < 0) {
        if (f.constant_term().is_zero())
            throw std::invalid_argument("series pow with negative exponent requires a nonzero constant term");
        return inverse(pow(f, -e));
    }
    Series acc = Series::one(n);
    Series base = f;
    unsigned long k = static_cast<unsigned long>(e);
    while (true) {
        if (k & 1UL)
            acc = acc * base;
        k >>= 1;
        if (k == 0)
            break;
        base = base * base;
    }
    return acc;
}

Series compose(const Series& f, const Series& g)
{
    require_same_degree(f, g, "series compose");
    if (!g.constant_term().is_zero())
        throw std::invalid_argument("series compose requires zero constant term in the inner series");
    const int n = f.trunc_degree();
    Series r = Series::constant(f[n], n);
    for (int i = n - 1; i >= 0; --i) {
        r = r * g;
        r[0] += f[i];
    }
    return r;
}

Series derivative(const Series& f)
{
    const int n = f.trunc_degree();
    if (n == 0)
        throw std::invalid_argument("series derivative undefined at truncation degree 0");
    Series r(n - 1);
    for (int i = 1; i <= n; ++i)
        r[i - 1] = Rational(i) * f[i];
    return r;
}

Series binomial_series(const Rational& a, int trunc_degree)
{
    Series r(trunc_degree);
    for (int j = 0; j <= trunc_degree; ++j)
        r[j] = binom_rat(a, j);
    return r;
}

Series truncated(const Series& f, int new_degree)
{
    if (new_degree < 0 || new_degree > f.trunc_degree())
        throw std::invalid_argument("truncated: new degree must be within 0.." +
                                    std::to_string(f.trunc_degree()));
    return Series(std::vector<Rational>(f.coeffs().begin(), f.coeffs().begin() + new_degree + 1));
}

std::vector<std::string> coeff_strings(const Series& f)
{
    std::vector<std::string> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs())
        out.push_back(c.str());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Series& f)
{
    os << "[";
    for (int i = 0; i <= f.trunc_degree(); ++i) {
        if (i)
            os << ", ";
        os << f[i];
    }
    return os << "]";
}

} // namespace fpsq
