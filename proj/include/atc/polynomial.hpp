#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "atc/rational.hpp"

namespace atc {

/// Exponent tuple with one slot per ring variable.
struct Monomial {
  std::vector<unsigned> exps;

  static Monomial one(std::size_t nvars) { return Monomial{std::vector<unsigned>(nvars, 0)}; }
  static Monomial var(std::size_t nvars, std::size_t v, unsigned e = 1);

  unsigned degree() const;
  bool is_one() const;
  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;  // pre: o.divides(*this)
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

/// Graded reverse lexicographic comparison over the declared variable order.
/// Returns <0, 0, >0 as a <, ==, > b.
int degrevlex_cmp(const Monomial& a, const Monomial& b);

class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> variables);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable(std::size_t v) const { return vars_[v]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<std::string> vars_;
  std::map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> variables);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct RingMismatch : std::logic_error {
  RingMismatch() : std::logic_error("operands live in different polynomial rings") {}
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Exact multivariate polynomial over Q. Terms are stored in strictly
/// descending degrevlex order with no zero coefficients, so equal
/// polynomials have identical representations and the zero polynomial is
/// the unique empty term list.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, Rational c);
  static Polynomial variable(RingPtr ring, std::size_t v);
  static Polynomial monomial_term(RingPtr ring, Monomial m, Rational c);
  /// Sorts, merges and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  bool is_one() const;
  unsigned total_degree() const;  // zero polynomial reports 0

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(std::size_t v) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical text form: degrevlex-descending terms, signs absorbed into
  /// coefficients, "^1" omitted, no whitespace. Round-trips through parse_poly.
  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
  std::size_t position;
};

/// Grammar: rational literals `a` or `a/b`, declared variable names,
/// operators + - * ^ with `*` mandatory between factors, parentheses,
/// insignificant whitespace. A leading sign on a (sub)expression is allowed.
Polynomial parse_poly(const std::string& text, const RingPtr& ring);

Polynomial derivative(const Polynomial& p, const std::string& var);  // unknown name throws

}  // namespace atc
