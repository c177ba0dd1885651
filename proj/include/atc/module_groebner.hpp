#pragma once

#include <cstddef>
#include <vector>

#include "atc/groebner.hpp"

namespace atc {

/// Element of a free module over the polynomial ring; the rank is the
/// component count, fixed across one computation.
struct ModuleVector {
  std::vector<Polynomial> comps;

  std::size_t rank() const { return comps.size(); }
  bool is_zero() const;
  static ModuleVector zero(const RingPtr& ring, std::size_t rank);
  static ModuleVector basis(const RingPtr& ring, std::size_t rank, std::size_t pos);

  ModuleVector operator-() const;
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator*(const Polynomial& p, const ModuleVector& v);
  friend bool operator==(const ModuleVector& a, const ModuleVector& b);
};

/// Whether positions or monomials are compared first. Position-over-term is
/// the default for plain membership; saturation needs term-over-position with
/// an elimination order so that every monomial containing the fresh variable
/// dominates every monomial without it, in any position.
enum class ModulePriority { position_over_term, term_over_position };

struct ModuleOrder {
  MonomialOrder mono_order;
  ModulePriority priority = ModulePriority::position_over_term;

  /// <0, 0, >0 as module term (pa, ma) <, ==, > (pb, mb).
  int cmp(std::size_t pa, const Monomial& ma, std::size_t pb, const Monomial& mb) const;
};

struct ModuleGroebnerBasis {
  std::vector<ModuleVector> gens;
  ModuleOrder order;
  bool reduced = false;
};

struct ModuleTermRef {
  std::size_t pos;
  Monomial mono;
  Rational coeff;
};

/// Leading module term of v under ord. Pre: v nonzero.
ModuleTermRef module_leading_term(const ModuleVector& v, const ModuleOrder& ord);

ModuleGroebnerBasis module_buchberger(std::vector<ModuleVector> gens, const ModuleOrder& ord);
ModuleVector module_normal_form(const ModuleVector& v, const ModuleGroebnerBasis& mgb);
bool module_member(const ModuleVector& v, const ModuleGroebnerBasis& mgb);

/// Generators of M : f^inf inside the ambient free module, via a fresh
/// variable t and the vectors (1 - t*f)*e_r. Pre: f nonzero, uniform rank.
std::vector<ModuleVector> saturate_module(const std::vector<ModuleVector>& gens,
                                          const Polynomial& f);

}  // namespace atc
