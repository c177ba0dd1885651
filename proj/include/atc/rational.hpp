#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace atc {

/// Exact rational scalar. Kept canonical at all times: gcd(|num|, den) = 1
/// and den >= 1, so operator== is representation equality.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose, 3 * q etc.
  Rational(long num, long den);

  /// Accepts "a" or "a/b" with optional sign on a.
  static Rational from_string(const std::string& text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_negative() const { return sgn(q_) < 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string num_string() const { return q_.get_num().get_str(); }
  std::string den_string() const { return q_.get_den().get_str(); }
  /// "a" when integral, "a/b" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

}  // namespace atc
