#include "atc/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace atc {

std::size_t leading_index(const Polynomial& p, const MonomialOrder& ord) {
  const auto& ts = p.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (ord.less(ts[best].mono, ts[i].mono)) best = i;
  return best;
}

const Term& leading_term(const Polynomial& p, const MonomialOrder& ord) {
  return p.terms()[leading_index(p, ord)];
}

namespace {

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const Term& lf = leading_term(f, ord);
  const Term& lg = leading_term(g, ord);
  const Monomial l = Monomial::lcm(lf.mono, lg.mono);
  Polynomial a = Polynomial::monomial_term(f.ring(), l.divided_by(lf.mono), Rational(1) / lf.coeff);
  Polynomial b = Polynomial::monomial_term(g.ring(), l.divided_by(lg.mono), Rational(1) / lg.coeff);
  return a * f - b * g;
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  const Rational& lc = leading_term(p, ord).coeff;
  return lc.is_one() ? p : p.scaled(Rational(1) / lc);
}

Polynomial reduce(const Polynomial& input, const std::vector<Polynomial>& basis,
                  const MonomialOrder& ord, std::vector<Polynomial>* quotients) {
  const RingPtr& ring = input.ring();
  Polynomial p = input;
  Polynomial remainder(ring);
  while (!p.is_zero()) {
    const Term lead = leading_term(p, ord);
    bool reduced_step = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Polynomial& b = basis[i];
      if (b.is_zero()) continue;
      const Term& lb = leading_term(b, ord);
      if (!lb.mono.divides(lead.mono)) continue;
      Polynomial q =
          Polynomial::monomial_term(ring, lead.mono.divided_by(lb.mono), lead.coeff / lb.coeff);
      p -= q * b;
      if (quotients) (*quotients)[i] += q;
      reduced_step = true;
      break;
    }
    if (!reduced_step) {
      Polynomial t = Polynomial::monomial_term(ring, lead.mono, lead.coeff);
      remainder += t;
      p -= t;
    }
  }
  return remainder;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord) {
  std::vector<Polynomial> basis;
  RingPtr ring;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!ring)
      ring = g.ring();
    else if (!same_ring(ring, g.ring()))
      throw RingMismatch();
    basis.push_back(make_monic(g, ord));
  }

  std::vector<Pair> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].is_zero()) continue;
      pairs.push_back(
          Pair{i, j, Monomial::lcm(leading_term(basis[i], ord).mono, leading_term(basis[j], ord).mono)});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first; index order breaks ties.
    std::size_t pick = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const int c = ord.cmp(pairs[k].lcm, pairs[pick].lcm);
      if (c < 0 || (c == 0 && (pairs[k].i < pairs[pick].i ||
                               (pairs[k].i == pairs[pick].i && pairs[k].j < pairs[pick].j))))
        pick = k;
    }
    const Pair pair = pairs[pick];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(pick));

    const Monomial& li = leading_term(basis[pair.i], ord).mono;
    const Monomial& lj = leading_term(basis[pair.j], ord).mono;
    if (pair.lcm == li.times(lj)) continue;  // coprime leading monomials

    Polynomial r = reduce(spoly(basis[pair.i], basis[pair.j], ord), basis, ord, nullptr);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r, ord));
    push_pairs(basis.size() - 1);
  }

  // Minimalize: drop generators whose leading monomial another one divides.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& li = leading_term(basis[i], ord).mono;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = leading_term(basis[j], ord).mono;
      if (!lj.divides(li)) continue;
      // Equal leading monomials: keep the earlier one.
      redundant = !(lj == li) || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Tail-reduce each generator against the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = make_monic(reduce(minimal[i], others, ord, nullptr), ord);
  }
  std::erase_if(minimal, [](const Polynomial& p) { return p.is_zero(); });
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(leading_term(a, ord).mono, leading_term(b, ord).mono);
  });
  return GroebnerBasis{std::move(minimal), ord, true};
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return reduce(p, gb.gens, gb.order, nullptr);
}

DivisionTranscript normal_form_with_transcript(const Polynomial& p, const GroebnerBasis& gb) {
  DivisionTranscript t{std::vector<Polynomial>(gb.gens.size(), Polynomial::zero(p.ring())),
                       Polynomial::zero(p.ring())};
  t.remainder = reduce(p, gb.gens, gb.order, &t.quotients);
  return t;
}

bool in_ideal(const Polynomial& p, const GroebnerBasis& gb) { return normal_form(p, gb).is_zero(); }

std::vector<Polynomial> eliminate(const GroebnerBasis& gb, const std::vector<std::size_t>& block) {
  if (gb.order.kind() != OrderKind::elim || gb.order.block_vars() != block)
    throw std::invalid_argument("basis was not computed under the requested elimination order");
  std::vector<bool> eliminated(gb.order.nvars(), false);
  for (std::size_t v : block) eliminated[v] = true;
  std::vector<Polynomial> out;
  for (const auto& g : gb.gens) {
    bool touches = false;
    for (const auto& t : g.terms())
      for (std::size_t v = 0; v < t.mono.exps.size() && !touches; ++v)
        touches = eliminated[v] && t.mono.exps[v] > 0;
    if (!touches) out.push_back(g);
  }
  return out;
}

RingPtr extend_ring(const RingPtr& ring, const std::string& stem) {
  std::string name = stem;
  while (ring->index_of(name)) name += "_";
  std::vector<std::string> vars = ring->variables();
  vars.push_back(name);
  return make_ring(std::move(vars));
}

Polynomial lift_to_extension(const RingPtr& ext, const Polynomial& p) {
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    m.exps.push_back(0);
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial::from_terms(ext, std::move(terms));
}

bool uses_last_var(const Polynomial& p) {
  for (const auto& t : p.terms())
    if (t.mono.exps.back() > 0) return true;
  return false;
}

Polynomial drop_last_var(const RingPtr& ring, const Polynomial& p) {
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    m.exps.pop_back();
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> saturate(const std::vector<Polynomial>& ideal_gens, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot saturate by zero");
  const RingPtr ring = f.ring();
  const RingPtr ext = extend_ring(ring, "t_sat");
  const std::size_t t_index = ext->nvars() - 1;

  std::vector<Polynomial> gens;
  gens.reserve(ideal_gens.size() + 1);
  for (const auto& g : ideal_gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    gens.push_back(lift_to_extension(ext, g));
  }
  Polynomial one = Polynomial::constant(ext, Rational(1));
  Polynomial tf = Polynomial::variable(ext, t_index) * lift_to_extension(ext, f);
  gens.push_back(one - tf);

  GroebnerBasis gb = buchberger(std::move(gens), MonomialOrder::elim(ext->nvars(), {t_index}));
  std::vector<Polynomial> out;
  for (const auto& g : eliminate(gb, {t_index})) out.push_back(drop_last_var(ring, g));
  return out;
}

}  // namespace atc
