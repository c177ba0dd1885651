#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "atc/module_groebner.hpp"
#include "atc/polynomial.hpp"

namespace atc {

/// Distinguished affine open D(f) of the ambient space.
struct Chart {
  std::string name;
  Polynomial f;
};

/// Strictly ordered chart list. The opens must cover the subscheme, which is
/// checked by the scheme constructor: (J, f_1, ..., f_r) is the unit ideal.
class Cover {
 public:
  explicit Cover(std::vector<Chart> charts);
  std::size_t size() const { return charts_.size(); }
  const Chart& chart(std::size_t i) const { return charts_.at(i); }
  const std::vector<Chart>& charts() const { return charts_; }

 private:
  std::vector<Chart> charts_;
};

/// Nonempty strictly increasing index set Λ with the product f_Λ of its
/// charts' localizing elements.
struct ChartSet {
  std::vector<std::size_t> indices;
  Polynomial f;

  Polynomial f_power(unsigned k) const { return f.pow(k); }
  bool contains(std::size_t i) const;
  bool subset_of(const ChartSet& o) const;
};

bool same_chart_set(const ChartSet& a, const ChartSet& b);

struct ChartMismatch : std::logic_error {
  ChartMismatch() : std::logic_error("operands live on different chart sets") {}
};

/// num / f_Λ^pow. Representations are never reduced; equality is semantic
/// through the equal_* family below.
struct LocalFraction {
  Polynomial num;
  unsigned pow;
  ChartSet cs;

  bool syntactically_zero() const { return num.is_zero(); }
};

LocalFraction frac_zero(const ChartSet& cs, const RingPtr& ring);
LocalFraction frac_of(const ChartSet& cs, Polynomial num, unsigned pow = 0);

LocalFraction operator-(const LocalFraction& a);
LocalFraction operator+(const LocalFraction& a, const LocalFraction& b);
LocalFraction operator-(const LocalFraction& a, const LocalFraction& b);
LocalFraction operator*(const LocalFraction& a, const LocalFraction& b);
LocalFraction scale(const LocalFraction& a, const Rational& c);

/// Element of Omega_U restricted to X on a chart set: sum coeffs[v] * dx_v,
/// the coefficients read as residues mod J.
struct AmbientForm {
  std::vector<LocalFraction> coeffs;

  const ChartSet& cs() const { return coeffs.front().cs; }
};

AmbientForm form_zero(const ChartSet& cs, const RingPtr& ring);
AmbientForm operator-(const AmbientForm& a);
AmbientForm operator+(const AmbientForm& a, const AmbientForm& b);
AmbientForm operator-(const AmbientForm& a, const AmbientForm& b);
AmbientForm scale(const AmbientForm& a, const Rational& c);
AmbientForm left_mul(const LocalFraction& r, const AmbientForm& a);

/// Universal derivation by the quotient rule:
/// d(num/f^p) = sum_v (f * d_v num - p * num * d_v f) / f^(p+1) dx_v.
AmbientForm derive_fraction(const LocalFraction& a);

/// Typed views of a fraction. A Residue is read mod J_Λ; a Conormal lives in
/// J_Λ/J_Λ^2 (its numerator must lie in J : f_Λ^inf); an IntrinsicForm is an
/// ambient form read mod the saturated Jacobian submodule.
struct Residue {
  LocalFraction value;
};
struct Conormal {
  LocalFraction value;
};
struct IntrinsicForm {
  AmbientForm rep;
};

enum class EqKind { ring, mod_ideal, mod_ideal_sq, jacobian };

/// The scheme-theoretic data: ambient affine-space ring, ideal J, ordered
/// cover, and the per-chart-set saturation data every equality test needs.
/// The cache is a compute-once memo table safe for concurrent readers.
class ChartedScheme {
 public:
  ChartedScheme(RingPtr ring, std::vector<Polynomial> ideal_gens, Cover cover);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  const Cover& cover() const { return cover_; }

  ChartSet chart_set(std::vector<std::size_t> indices) const;
  ChartSet single(std::size_t i) const { return chart_set({i}); }
  ChartSet pair(std::size_t i, std::size_t j) const;
  /// All strictly increasing index tuples of the given length with X_Λ != ∅.
  std::vector<ChartSet> nonempty_chart_sets(std::size_t length) const;

  bool chart_empty(const ChartSet& cs) const;
  /// num ∈ J : f_Λ^inf
  bool num_in_ideal(const Polynomial& num, const ChartSet& cs) const;
  /// num ∈ J^2 : f_Λ^inf (J^2 spanned by pairwise products of the generators)
  bool num_in_ideal_sq(const Polynomial& num, const ChartSet& cs) const;
  /// cleared coefficient vector ∈ saturated Jacobian submodule
  bool vector_in_jacobian(const std::vector<Polynomial>& coeffs, const ChartSet& cs) const;

  const GroebnerBasis& saturated_ideal_basis(const ChartSet& cs) const;

  /// Forces the cache entries for every nonempty chart set; called by the
  /// verifiers before fanning out parallel units.
  void warm_cache() const;

 private:
  struct SatData {
    GroebnerBasis ideal_gb;
    GroebnerBasis ideal_sq_gb;
    ModuleGroebnerBasis jacobian_gb;
    bool empty = false;
  };

  std::shared_ptr<const SatData> compute_sat(const ChartSet& cs) const;
  const SatData& sat(const ChartSet& cs) const;

  RingPtr ring_;
  std::vector<Polynomial> ideal_;
  Cover cover_;

  using CacheKey = std::vector<std::size_t>;
  mutable std::mutex cache_mutex_;
  mutable std::map<CacheKey, std::shared_future<std::shared_ptr<const SatData>>> cache_;
};

using SchemePtr = std::shared_ptr<const ChartedScheme>;

/// a.chart_set ⊆ target; image of the fraction under localization.
LocalFraction restrict_fraction(const ChartedScheme& X, const LocalFraction& a,
                                const ChartSet& target);
AmbientForm restrict_form(const ChartedScheme& X, const AmbientForm& a, const ChartSet& target);

bool equal_ring(const LocalFraction& a, const LocalFraction& b);
bool equal_mod_ideal(const ChartedScheme& X, const LocalFraction& a, const LocalFraction& b);
bool equal_mod_ideal_sq(const ChartedScheme& X, const LocalFraction& a, const LocalFraction& b);
bool equal_mod_ideal(const ChartedScheme& X, const AmbientForm& a, const AmbientForm& b);
bool equal_mod_jacobian(const ChartedScheme& X, const AmbientForm& a, const AmbientForm& b);

/// Kind dispatcher over fraction-backed values (ring / mod J / mod J^2).
bool equal_mod(const ChartedScheme& X, EqKind kind, const LocalFraction& a,
               const LocalFraction& b);

/// Typed views decide equality in their own module.
bool equal_mod(const ChartedScheme& X, const Residue& a, const Residue& b);
bool equal_mod(const ChartedScheme& X, const Conormal& a, const Conormal& b);
bool equal_mod(const ChartedScheme& X, const IntrinsicForm& a, const IntrinsicForm& b);

bool holds_conormal_invariant(const ChartedScheme& X, const Conormal& c);
/// Image of a conormal class under the differential of the two-term complex.
/// Throws if the invariant fails.
AmbientForm conormal_to_form(const ChartedScheme& X, const Conormal& c);

}  // namespace atc
