#include "atc/module_groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace atc {

bool ModuleVector::is_zero() const {
  return std::all_of(comps.begin(), comps.end(), [](const Polynomial& p) { return p.is_zero(); });
}

ModuleVector ModuleVector::zero(const RingPtr& ring, std::size_t rank) {
  return ModuleVector{std::vector<Polynomial>(rank, Polynomial::zero(ring))};
}

ModuleVector ModuleVector::basis(const RingPtr& ring, std::size_t rank, std::size_t pos) {
  ModuleVector v = zero(ring, rank);
  v.comps[pos] = Polynomial::constant(ring, Rational(1));
  return v;
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector r = *this;
  for (auto& c : r.comps) c = -c;
  return r;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  if (rank() != o.rank()) throw std::invalid_argument("module vector rank mismatch");
  for (std::size_t i = 0; i < comps.size(); ++i) comps[i] += o.comps[i];
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) { return *this += -o; }

ModuleVector operator*(const Polynomial& p, const ModuleVector& v) {
  ModuleVector r = v;
  for (auto& c : r.comps) c = p * c;
  return r;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.comps == b.comps; }

int ModuleOrder::cmp(std::size_t pa, const Monomial& ma, std::size_t pb, const Monomial& mb) const {
  if (priority == ModulePriority::position_over_term) {
    if (pa != pb) return pa < pb ? 1 : -1;  // earlier position is larger
    return mono_order.cmp(ma, mb);
  }
  const int c = mono_order.cmp(ma, mb);
  if (c != 0) return c;
  if (pa != pb) return pa < pb ? 1 : -1;
  return 0;
}

ModuleTermRef module_leading_term(const ModuleVector& v, const ModuleOrder& ord) {
  bool found = false;
  ModuleTermRef best{0, Monomial{}, Rational(0)};
  for (std::size_t pos = 0; pos < v.comps.size(); ++pos) {
    for (const auto& t : v.comps[pos].terms()) {
      if (!found || ord.cmp(best.pos, best.mono, pos, t.mono) < 0) {
        best = ModuleTermRef{pos, t.mono, t.coeff};
        found = true;
      }
    }
  }
  if (!found) throw std::invalid_argument("leading term of the zero vector");
  return best;
}

namespace {

ModuleVector make_monic(const ModuleVector& v, const ModuleOrder& ord) {
  if (v.is_zero()) return v;
  const Rational lc = module_leading_term(v, ord).coeff;
  if (lc.is_one()) return v;
  ModuleVector r = v;
  const Rational inv = Rational(1) / lc;
  for (auto& c : r.comps) c = c.scaled(inv);
  return r;
}

ModuleVector reduce(const ModuleVector& input, const std::vector<ModuleVector>& basis,
                    const ModuleOrder& ord) {
  ModuleVector p = input;
  if (p.is_zero()) return p;
  const RingPtr ring = p.comps.front().ring();
  ModuleVector remainder = ModuleVector::zero(ring, p.rank());
  while (!p.is_zero()) {
    const ModuleTermRef lead = module_leading_term(p, ord);
    bool step = false;
    for (const auto& b : basis) {
      if (b.is_zero()) continue;
      const ModuleTermRef lb = module_leading_term(b, ord);
      if (lb.pos != lead.pos || !lb.mono.divides(lead.mono)) continue;
      Polynomial q =
          Polynomial::monomial_term(ring, lead.mono.divided_by(lb.mono), lead.coeff / lb.coeff);
      p -= q * b;
      step = true;
      break;
    }
    if (!step) {
      Polynomial t = Polynomial::monomial_term(ring, lead.mono, lead.coeff);
      remainder.comps[lead.pos] += t;
      p.comps[lead.pos] -= t;
    }
  }
  return remainder;
}

ModuleVector module_spoly(const ModuleVector& f, const ModuleVector& g, const ModuleOrder& ord) {
  const RingPtr ring = f.comps.front().ring();
  const ModuleTermRef lf = module_leading_term(f, ord);
  const ModuleTermRef lg = module_leading_term(g, ord);
  const Monomial l = Monomial::lcm(lf.mono, lg.mono);
  Polynomial a = Polynomial::monomial_term(ring, l.divided_by(lf.mono), Rational(1) / lf.coeff);
  Polynomial b = Polynomial::monomial_term(ring, l.divided_by(lg.mono), Rational(1) / lg.coeff);
  ModuleVector r = a * f;
  r -= b * g;
  return r;
}

}  // namespace

ModuleGroebnerBasis module_buchberger(std::vector<ModuleVector> gens, const ModuleOrder& ord) {
  std::vector<ModuleVector> basis;
  std::size_t rank = 0;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (basis.empty())
      rank = g.rank();
    else if (g.rank() != rank)
      throw std::invalid_argument("module vector rank mismatch");
    basis.push_back(make_monic(g, ord));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](std::size_t j) {
    const ModuleTermRef lj = module_leading_term(basis[j], ord);
    for (std::size_t i = 0; i < j; ++i) {
      const ModuleTermRef li = module_leading_term(basis[i], ord);
      if (li.pos != lj.pos) continue;  // S-vectors only within one position
      pairs.push_back(Pair{i, j, Monomial::lcm(li.mono, lj.mono)});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    std::size_t pick = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const int c = ord.mono_order.cmp(pairs[k].lcm, pairs[pick].lcm);
      if (c < 0 || (c == 0 && (pairs[k].i < pairs[pick].i ||
                               (pairs[k].i == pairs[pick].i && pairs[k].j < pairs[pick].j))))
        pick = k;
    }
    const Pair pair = pairs[pick];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(pick));

    ModuleVector r = reduce(module_spoly(basis[pair.i], basis[pair.j], ord), basis, ord);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r, ord));
    push_pairs(basis.size() - 1);
  }

  // Minimalize on leading terms, then tail-reduce.
  std::vector<ModuleVector> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ModuleTermRef li = module_leading_term(basis[i], ord);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const ModuleTermRef lj = module_leading_term(basis[j], ord);
      if (lj.pos != li.pos || !lj.mono.divides(li.mono)) continue;
      redundant = !(lj.mono == li.mono) || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModuleVector> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = make_monic(reduce(minimal[i], others, ord), ord);
  }
  std::erase_if(minimal, [](const ModuleVector& v) { return v.is_zero(); });
  std::sort(minimal.begin(), minimal.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    const ModuleTermRef la = module_leading_term(a, ord);
    const ModuleTermRef lb = module_leading_term(b, ord);
    return ord.cmp(la.pos, la.mono, lb.pos, lb.mono) < 0;
  });
  return ModuleGroebnerBasis{std::move(minimal), ord, true};
}

ModuleVector module_normal_form(const ModuleVector& v, const ModuleGroebnerBasis& mgb) {
  if (!mgb.gens.empty() && v.rank() != mgb.gens.front().rank())
    throw std::invalid_argument("module vector rank mismatch");
  return reduce(v, mgb.gens, mgb.order);
}

bool module_member(const ModuleVector& v, const ModuleGroebnerBasis& mgb) {
  return module_normal_form(v, mgb).is_zero();
}

std::vector<ModuleVector> saturate_module(const std::vector<ModuleVector>& gens,
                                          const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot saturate by zero");
  if (gens.empty()) return {};
  const std::size_t rank = gens.front().rank();
  const RingPtr ring = f.ring();
  const RingPtr ext = extend_ring(ring, "t_sat");
  const std::size_t t_index = ext->nvars() - 1;

  std::vector<ModuleVector> lifted;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw std::invalid_argument("module vector rank mismatch");
    ModuleVector v = ModuleVector::zero(ext, rank);
    for (std::size_t i = 0; i < rank; ++i) v.comps[i] = lift_to_extension(ext, g.comps[i]);
    lifted.push_back(std::move(v));
  }
  Polynomial one_minus_tf = Polynomial::constant(ext, Rational(1)) -
                            Polynomial::variable(ext, t_index) * lift_to_extension(ext, f);
  for (std::size_t r = 0; r < rank; ++r) lifted.push_back(one_minus_tf * ModuleVector::basis(ext, rank, r));

  ModuleOrder ord{MonomialOrder::elim(ext->nvars(), {t_index}), ModulePriority::term_over_position};
  ModuleGroebnerBasis mgb = module_buchberger(std::move(lifted), ord);

  std::vector<ModuleVector> out;
  for (const auto& g : mgb.gens) {
    bool touches_t = false;
    for (const auto& c : g.comps) touches_t = touches_t || uses_last_var(c);
    if (touches_t) continue;
    ModuleVector v = ModuleVector::zero(ring, rank);
    for (std::size_t i = 0; i < rank; ++i) v.comps[i] = drop_last_var(ring, g.comps[i]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace atc
