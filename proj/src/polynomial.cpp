#include "atc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace atc {

Monomial Monomial::var(std::size_t nvars, std::size_t v, unsigned e) {
  Monomial m = one(nvars);
  m.exps[v] = e;
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (unsigned e : exps) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](unsigned e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > o.exps[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
  return r;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the one whose last differing exponent is smaller is larger.
  for (std::size_t i = a.exps.size(); i-- > 0;) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
  }
  return 0;
}

PolyRing::PolyRing(std::vector<std::string> variables) : vars_(std::move(variables)) {
  if (vars_.empty()) throw std::invalid_argument("a polynomial ring needs at least one variable");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw std::invalid_argument("empty variable name");
    if (!index_.emplace(vars_[i], i).second)
      throw std::invalid_argument("duplicate variable name: " + vars_[i]);
  }
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<const PolyRing>(std::move(variables));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch();
}

// strictly descending degrevlex
bool term_before(const Term& a, const Term& b) { return degrevlex_cmp(a.mono, b.mono) > 0; }

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial::one(ring->nvars()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t v) {
  Polynomial p(ring);
  p.terms_.push_back(Term{Monomial::var(ring->nvars(), v), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial_term(RingPtr ring, Monomial m, Rational c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.front().mono.is_one() && terms_.front().coeff.is_one();
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, -t.coeff});
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = degrevlex_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rational sum = terms_[i].coeff + o.terms_[j].coeff;
      if (!sum.is_zero()) merged.push_back(Term{terms_[i].mono, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ring());
  auto desc = [](const Monomial& x, const Monomial& y) { return degrevlex_cmp(x, y) > 0; };
  std::map<Monomial, Rational, decltype(desc)> acc(desc);
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      Monomial m = ta.mono.times(tb.mono);
      auto [it, fresh] = acc.emplace(std::move(m), ta.coeff * tb.coeff);
      if (!fresh) it->second += ta.coeff * tb.coeff;
    }
  }
  Polynomial r(a.ring());
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back(Term{m, c});
  return Polynomial::from_terms(a.ring(), std::move(terms));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial::zero(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = Polynomial::constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t v) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exps[v];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.exps[v] = e - 1;
    out.push_back(Term{std::move(m), t.coeff * Rational(static_cast<long>(e))});
  }
  return Polynomial::from_terms(ring_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  }
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.is_negative()) os << '-';
    } else {
      os << (c.is_negative() ? '-' : '+');
    }
    if (c.is_negative()) c = -c;
    first = false;
    const bool bare = t.mono.is_one();
    if (!c.is_one() || bare) {
      os << c.str();
      if (!bare) os << '*';
    }
    bool started = false;
    for (std::size_t v = 0; v < t.mono.exps.size(); ++v) {
      const unsigned e = t.mono.exps[v];
      if (e == 0) continue;
      if (started) os << '*';
      started = true;
      os << ring_->variable(v);
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

namespace {

// Recursive-descent parser for the polynomial expression grammar.
class Parser {
 public:
  Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial run() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expression() {
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      const unsigned e = exponent();
      return base.pow(e);
    }
    return base;
  }

  unsigned exponent() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a non-negative integer exponent");
    unsigned long e = 0;
    try {
      e = std::stoul(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("exponent out of range");
    }
    return static_cast<unsigned>(e);
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable_name();
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string num = text_.substr(start, pos_ - start);
    std::string den;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("expected denominator digits after '/'");
      den = text_.substr(dstart, pos_ - dstart);
      if (Rational::from_string(den).is_zero()) fail("zero denominator");
    }
    Rational value = den.empty() ? Rational::from_string(num) : Rational::from_string(num + "/" + den);
    return Polynomial::constant(ring_, std::move(value));
  }

  Polynomial variable_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    const auto idx = ring_->index_of(name);
    if (!idx) throw ParseError(start, "unknown variable '" + name + "'");
    return Polynomial::variable(ring_, *idx);
  }

  const std::string& text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

Polynomial derivative(const Polynomial& p, const std::string& var) {
  const auto idx = p.ring()->index_of(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + var + "'");
  return p.derivative(*idx);
}

}  // namespace atc
