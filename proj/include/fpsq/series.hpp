#pragma once

#include "fpsq/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fpsq {

// Truncated formal power series over Q: dense coefficients of x^0..x^N for a
// stated truncation degree N. Every binary operation requires both operands to
// carry the same truncation degree and throws otherwise, so degree bookkeeping
// bugs surface immediately instead of silently mixing precisions.
class Series {
  public:
    explicit Series(int trunc_degree);              // the zero series
    explicit Series(std::vector<Rational> coeffs);  // trunc degree = size - 1

    static Series constant(const Rational& c, int trunc_degree);
    static Series one(int trunc_degree) { return constant(1, trunc_degree); }
    static Series x(int trunc_degree) { return monomial(1, 1, trunc_degree); }
    // c*x^k truncated at trunc_degree (vanishes when k > trunc_degree).
    static Series monomial(const Rational& c, int k, int trunc_degree);

    int trunc_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    Rational& operator[](int i) { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& constant_term() const { return coeffs_[0]; }
    bool is_zero() const;

  private:
    std::vector<Rational> coeffs_;
};

Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator-(const Series& f);
Series operator*(const Series& f, const Series& g);  // Cauchy product mod x^{N+1}
Series operator*(const Rational& c, const Series& f);
Series operator*(const Series& f, const Rational& c);

// Coefficientwise equality; comparing different truncation degrees throws.
bool operator==(const Series& f, const Series& g);

// Multiplicative inverse mod x^{N+1}; requires a nonzero constant term.
Series inverse(const Series& f);

// Formal logarithm of a series with constant term 1, by termwise integration
// of f'/f. The result has zero constant term.
Series log(const Series& f);

// f^e at the same truncation degree. Negative e is the inverse of the positive
// power and requires a nonzero constant term; e = 0 gives the constant 1.
Series pow(const Series& f, long e);

// f(g(x)) by Horner evaluation; g must have zero constant term.
Series compose(const Series& f, const Series& g);

// Termwise derivative, reported at truncation degree N-1.
Series derivative(const Series& f);

// (1+x)^a = sum_j binom(a,j) x^j for rational a.
Series binomial_series(const Rational& a, int trunc_degree);

// Copy of f restated at a lower truncation degree.
Series truncated(const Series& f, int new_degree);

std::vector<std::string> coeff_strings(const Series& f);
std::ostream& operator<<(std::ostream& os, const Series& f);

} // namespace fpsq
