#pragma once

#include "fpsq/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fpsq {

// Exact univariate polynomial over Q in the indeterminate m. Coefficients are
// stored densely by power of m with trailing zeros trimmed, so equality is
// plain coefficientwise comparison.
class MPoly {
  public:
    MPoly() = default;  // the zero polynomial
    explicit MPoly(std::vector<Rational> coeffs);

    static MPoly constant(const Rational& c);
    static MPoly linear(const Rational& c1, const Rational& c0);  // c1*m + c0

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rational coeff(int i) const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& at) const;

    // Exact division by m as a coefficient shift; the constant term must be 0.
    MPoly divided_by_m() const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.coeffs_ == b.coeffs_; }

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(const Rational& c, const MPoly& a);

// Coefficient strings, index 0 first; the zero polynomial serializes as ["0"].
std::vector<std::string> coeff_strings(const MPoly& p);
std::ostream& operator<<(std::ostream& os, const MPoly& p);

} // namespace fpsq
