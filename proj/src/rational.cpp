#include "fpsq/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace fpsq {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den)
{
    if (sgn(den) == 0)
        throw std::invalid_argument("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(std::string_view s)
{
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            q_ = mpq_class(mpz_class(std::string(s)));
        } else {
            mpz_class num(std::string(s.substr(0, slash)));
            mpz_class den(std::string(s.substr(slash + 1)));
            if (sgn(den) == 0)
                throw std::invalid_argument("zero denominator");
            q_ = mpq_class(num, den);
            q_.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: \"" + std::string(s) + "\"");
    }
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.q_ = -q_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace fpsq
