#include "atc/geometry.hpp"

#include <algorithm>

namespace atc {

Cover::Cover(std::vector<Chart> charts) : charts_(std::move(charts)) {
  if (charts_.empty()) throw std::invalid_argument("a cover needs at least one chart");
  for (const auto& c : charts_)
    if (c.f.is_zero()) throw std::invalid_argument("chart '" + c.name + "' localizes at zero");
}

bool ChartSet::contains(std::size_t i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

bool ChartSet::subset_of(const ChartSet& o) const {
  return std::includes(o.indices.begin(), o.indices.end(), indices.begin(), indices.end());
}

bool same_chart_set(const ChartSet& a, const ChartSet& b) { return a.indices == b.indices; }

namespace {

void require_same_cs(const LocalFraction& a, const LocalFraction& b) {
  if (!same_chart_set(a.cs, b.cs)) throw ChartMismatch();
}

}  // namespace

LocalFraction frac_zero(const ChartSet& cs, const RingPtr& ring) {
  return LocalFraction{Polynomial::zero(ring), 0, cs};
}

LocalFraction frac_of(const ChartSet& cs, Polynomial num, unsigned pow) {
  return LocalFraction{std::move(num), pow, cs};
}

LocalFraction operator-(const LocalFraction& a) { return LocalFraction{-a.num, a.pow, a.cs}; }

LocalFraction operator+(const LocalFraction& a, const LocalFraction& b) {
  require_same_cs(a, b);
  const unsigned p = std::max(a.pow, b.pow);
  Polynomial num = a.num * a.cs.f_power(p - a.pow) + b.num * b.cs.f_power(p - b.pow);
  return LocalFraction{std::move(num), p, a.cs};
}

LocalFraction operator-(const LocalFraction& a, const LocalFraction& b) { return a + (-b); }

LocalFraction operator*(const LocalFraction& a, const LocalFraction& b) {
  require_same_cs(a, b);
  return LocalFraction{a.num * b.num, a.pow + b.pow, a.cs};
}

LocalFraction scale(const LocalFraction& a, const Rational& c) {
  return LocalFraction{a.num.scaled(c), a.pow, a.cs};
}

AmbientForm form_zero(const ChartSet& cs, const RingPtr& ring) {
  return AmbientForm{std::vector<LocalFraction>(ring->nvars(), frac_zero(cs, ring))};
}

AmbientForm operator-(const AmbientForm& a) {
  AmbientForm r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

AmbientForm operator+(const AmbientForm& a, const AmbientForm& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("form arity mismatch");
  AmbientForm r = a;
  for (std::size_t v = 0; v < r.coeffs.size(); ++v) r.coeffs[v] = r.coeffs[v] + b.coeffs[v];
  return r;
}

AmbientForm operator-(const AmbientForm& a, const AmbientForm& b) { return a + (-b); }

AmbientForm scale(const AmbientForm& a, const Rational& c) {
  AmbientForm r = a;
  for (auto& x : r.coeffs) x = scale(x, c);
  return r;
}

AmbientForm left_mul(const LocalFraction& r, const AmbientForm& a) {
  AmbientForm out = a;
  for (auto& c : out.coeffs) c = r * c;
  return out;
}

AmbientForm derive_fraction(const LocalFraction& a) {
  const RingPtr& ring = a.num.ring();
  AmbientForm out = form_zero(a.cs, ring);
  if (a.pow == 0) {
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      out.coeffs[v] = frac_of(a.cs, a.num.derivative(v), 0);
    return out;
  }
  const Rational p(static_cast<long>(a.pow));
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    Polynomial num = a.cs.f * a.num.derivative(v) - (a.num * a.cs.f.derivative(v)).scaled(p);
    out.coeffs[v] = frac_of(a.cs, std::move(num), a.pow + 1);
  }
  return out;
}

ChartedScheme::ChartedScheme(RingPtr ring, std::vector<Polynomial> ideal_gens, Cover cover)
    : ring_(std::move(ring)), ideal_(std::move(ideal_gens)), cover_(std::move(cover)) {
  for (const auto& g : ideal_)
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
  for (const auto& c : cover_.charts())
    if (!same_ring(c.f.ring(), ring_)) throw RingMismatch();
  std::erase_if(ideal_, [](const Polynomial& g) { return g.is_zero(); });

  // The charts must cover X: (J, f_1, ..., f_r) is the unit ideal.
  std::vector<Polynomial> gens = ideal_;
  for (const auto& c : cover_.charts()) gens.push_back(c.f);
  auto gb = buchberger(std::move(gens), MonomialOrder::degrevlex(ring_->nvars()));
  if (!in_ideal(Polynomial::constant(ring_, Rational(1)), gb))
    throw std::invalid_argument("the given charts do not cover the subscheme");
}

ChartSet ChartedScheme::chart_set(std::vector<std::size_t> indices) const {
  if (indices.empty()) throw std::invalid_argument("empty chart set");
  if (!std::is_sorted(indices.begin(), indices.end()) ||
      std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw std::invalid_argument("chart set indices must be strictly increasing");
  Polynomial f = Polynomial::constant(ring_, Rational(1));
  for (std::size_t i : indices) f = f * cover_.chart(i).f;
  return ChartSet{std::move(indices), std::move(f)};
}

ChartSet ChartedScheme::pair(std::size_t i, std::size_t j) const {
  return chart_set({std::min(i, j), std::max(i, j)});
}

std::vector<ChartSet> ChartedScheme::nonempty_chart_sets(std::size_t length) const {
  std::vector<ChartSet> out;
  if (length == 0 || length > cover_.size()) return out;
  std::vector<std::size_t> pick(length);
  // Iterative enumeration of strictly increasing index tuples.
  for (std::size_t k = 0; k < length; ++k) pick[k] = k;
  for (;;) {
    ChartSet cs = chart_set(pick);
    if (!chart_empty(cs)) out.push_back(std::move(cs));
    std::size_t k = length;
    while (k-- > 0) {
      if (pick[k] + (length - k) < cover_.size()) {
        ++pick[k];
        for (std::size_t m = k + 1; m < length; ++m) pick[m] = pick[m - 1] + 1;
        break;
      }
      if (k == 0) return out;
    }
  }
}

std::shared_ptr<const ChartedScheme::SatData> ChartedScheme::compute_sat(
    const ChartSet& cs) const {
  const auto ord = MonomialOrder::degrevlex(ring_->nvars());
  const Polynomial one = Polynomial::constant(ring_, Rational(1));

  GroebnerBasis ideal_gb = buchberger(saturate(ideal_, cs.f), ord);
  const bool empty = in_ideal(one, ideal_gb);

  std::vector<Polynomial> sq;
  for (std::size_t i = 0; i < ideal_.size(); ++i)
    for (std::size_t j = i; j < ideal_.size(); ++j) sq.push_back(ideal_[i] * ideal_[j]);
  GroebnerBasis ideal_sq_gb = buchberger(saturate(sq, cs.f), ord);

  const std::size_t n = ring_->nvars();
  std::vector<ModuleVector> jac;
  for (const auto& g : ideal_) {
    ModuleVector grad = ModuleVector::zero(ring_, n);
    for (std::size_t v = 0; v < n; ++v) grad.comps[v] = g.derivative(v);
    jac.push_back(std::move(grad));
    for (std::size_t v = 0; v < n; ++v) jac.push_back(g * ModuleVector::basis(ring_, n, v));
  }
  ModuleOrder mord{ord, ModulePriority::position_over_term};
  ModuleGroebnerBasis jacobian_gb = module_buchberger(saturate_module(jac, cs.f), mord);

  return std::make_shared<SatData>(
      SatData{std::move(ideal_gb), std::move(ideal_sq_gb), std::move(jacobian_gb), empty});
}

const ChartedScheme::SatData& ChartedScheme::sat(const ChartSet& cs) const {
  std::shared_future<std::shared_ptr<const SatData>> fut;
  std::promise<std::shared_ptr<const SatData>> prom;
  bool compute_here = false;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(cs.indices);
    if (it == cache_.end()) {
      fut = prom.get_future().share();
      cache_.emplace(cs.indices, fut);
      compute_here = true;
    } else {
      fut = it->second;
    }
  }
  if (compute_here) {
    try {
      prom.set_value(compute_sat(cs));
    } catch (...) {
      prom.set_exception(std::current_exception());
    }
  }
  return *fut.get();
}

void ChartedScheme::warm_cache() const {
  for (std::size_t len = 1; len <= cover_.size(); ++len)
    for (const auto& cs : nonempty_chart_sets(len)) sat(cs);
}

bool ChartedScheme::chart_empty(const ChartSet& cs) const { return sat(cs).empty; }

bool ChartedScheme::num_in_ideal(const Polynomial& num, const ChartSet& cs) const {
  return in_ideal(num, sat(cs).ideal_gb);
}

bool ChartedScheme::num_in_ideal_sq(const Polynomial& num, const ChartSet& cs) const {
  return in_ideal(num, sat(cs).ideal_sq_gb);
}

bool ChartedScheme::vector_in_jacobian(const std::vector<Polynomial>& coeffs,
                                       const ChartSet& cs) const {
  const auto& mgb = sat(cs).jacobian_gb;
  ModuleVector v{coeffs};
  if (mgb.gens.empty()) return v.is_zero();
  return module_member(v, mgb);
}

const GroebnerBasis& ChartedScheme::saturated_ideal_basis(const ChartSet& cs) const {
  return sat(cs).ideal_gb;
}

LocalFraction restrict_fraction(const ChartedScheme& X, const LocalFraction& a,
                                const ChartSet& target) {
  if (!a.cs.subset_of(target)) throw ChartMismatch();
  if (a.cs.indices == target.indices) return a;
  Polynomial extra = Polynomial::constant(X.ring(), Rational(1));
  for (std::size_t i : target.indices)
    if (!a.cs.contains(i)) extra = extra * X.cover().chart(i).f;
  return LocalFraction{a.num * extra.pow(a.pow), a.pow, target};
}

AmbientForm restrict_form(const ChartedScheme& X, const AmbientForm& a, const ChartSet& target) {
  AmbientForm r = a;
  for (auto& c : r.coeffs) c = restrict_fraction(X, c, target);
  return r;
}

bool equal_ring(const LocalFraction& a, const LocalFraction& b) {
  require_same_cs(a, b);
  return a.num * b.cs.f_power(b.pow) == b.num * a.cs.f_power(a.pow);
}

bool equal_mod_ideal(const ChartedScheme& X, const LocalFraction& a, const LocalFraction& b) {
  const LocalFraction d = a - b;
  return X.num_in_ideal(d.num, d.cs);
}

bool equal_mod_ideal_sq(const ChartedScheme& X, const LocalFraction& a, const LocalFraction& b) {
  const LocalFraction d = a - b;
  return X.num_in_ideal_sq(d.num, d.cs);
}

bool equal_mod_ideal(const ChartedScheme& X, const AmbientForm& a, const AmbientForm& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("form arity mismatch");
  for (std::size_t v = 0; v < a.coeffs.size(); ++v)
    if (!equal_mod_ideal(X, a.coeffs[v], b.coeffs[v])) return false;
  return true;
}

bool equal_mod_jacobian(const ChartedScheme& X, const AmbientForm& a, const AmbientForm& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("form arity mismatch");
  unsigned pmax = 0;
  for (std::size_t v = 0; v < a.coeffs.size(); ++v) {
    const LocalFraction d = a.coeffs[v] - b.coeffs[v];
    pmax = std::max(pmax, d.pow);
  }
  const ChartSet& cs = a.cs();
  std::vector<Polynomial> cleared;
  cleared.reserve(a.coeffs.size());
  for (std::size_t v = 0; v < a.coeffs.size(); ++v) {
    const LocalFraction d = a.coeffs[v] - b.coeffs[v];
    cleared.push_back(d.num * cs.f_power(pmax - d.pow));
  }
  return X.vector_in_jacobian(cleared, cs);
}

bool equal_mod(const ChartedScheme& X, EqKind kind, const LocalFraction& a,
               const LocalFraction& b) {
  switch (kind) {
    case EqKind::ring:
      return equal_ring(a, b);
    case EqKind::mod_ideal:
      return equal_mod_ideal(X, a, b);
    case EqKind::mod_ideal_sq:
      return equal_mod_ideal_sq(X, a, b);
    case EqKind::jacobian:
      throw std::invalid_argument("jacobian comparison takes ambient forms");
  }
  return false;
}

bool equal_mod(const ChartedScheme& X, const Residue& a, const Residue& b) {
  return equal_mod_ideal(X, a.value, b.value);
}

bool equal_mod(const ChartedScheme& X, const Conormal& a, const Conormal& b) {
  return equal_mod_ideal_sq(X, a.value, b.value);
}

bool equal_mod(const ChartedScheme& X, const IntrinsicForm& a, const IntrinsicForm& b) {
  return equal_mod_jacobian(X, a.rep, b.rep);
}

bool holds_conormal_invariant(const ChartedScheme& X, const Conormal& c) {
  return X.num_in_ideal(c.value.num, c.value.cs);
}

AmbientForm conormal_to_form(const ChartedScheme& X, const Conormal& c) {
  if (!holds_conormal_invariant(X, c))
    throw std::invalid_argument("conormal invariant violated: numerator not in J : f^inf");
  return derive_fraction(c.value);
}

}  // namespace atc
