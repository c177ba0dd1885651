#include "atc/rational.hpp"

#include <ostream>

namespace atc {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(text);
      return Rational(mpq_class(n));
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string Rational::str() const {
  return is_integer() ? num_string() : num_string() + "/" + den_string();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace atc
