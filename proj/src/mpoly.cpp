#include "fpsq/mpoly.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace fpsq {

MPoly::MPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void MPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

MPoly MPoly::constant(const Rational& c) { return MPoly({c}); }

MPoly MPoly::linear(const Rational& c1, const Rational& c0) { return MPoly({c0, c1}); }

Rational MPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<size_t>(i)];
}

Rational MPoly::eval(const Rational& at) const
{
    Rational r = 0;
    for (int i = degree(); i >= 0; --i)
        r = r * at + coeffs_[static_cast<size_t>(i)];
    return r;
}

MPoly MPoly::divided_by_m() const
{
    if (is_zero())
        return MPoly();
    if (!coeffs_[0].is_zero())
        throw std::invalid_argument("divided_by_m: constant term is nonzero");
    return MPoly(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

MPoly operator+(const MPoly& a, const MPoly& b)
{
    std::vector<Rational> c(static_cast<size_t>(std::max(a.degree(), b.degree()) + 1), Rational(0));
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
        c[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
    return MPoly(std::move(c));
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return MPoly();
    std::vector<Rational> c(static_cast<size_t>(a.degree() + b.degree() + 1), Rational(0));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j)
            c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return MPoly(std::move(c));
}

MPoly operator*(const Rational& c, const MPoly& a)
{
    std::vector<Rational> r = a.coeffs();
    for (auto& x : r)
        x *= c;
    return MPoly(std::move(r));
}

std::vector<std::string> coeff_strings(const MPoly& p)
{
    if (p.is_zero())
        return {"0"};
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.push_back(c.str());
    return out;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p)
{
    os << "[";
    const auto cs = coeff_strings(p);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i)
            os << ", ";
        os << cs[i];
    }
    return os << "]";
}

} // namespace fpsq
