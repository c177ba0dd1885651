#pragma once

#include <map>

#include "atc/complexes.hpp"

namespace atc {

/// Cech r-cochain of matrices: one entry per strictly increasing Λ of length
/// r+1 with X_Λ nonempty, each an m^t x m^s matrix over Λ expressed in the
/// trivializations of min(Λ). MatT is FractionMatrix (conormal values) or
/// FormMatrix (ambient one-form values).
template <class MatT>
struct Cochain {
  int cech_degree;
  int src_deg;
  int tgt_deg;
  std::map<std::vector<std::size_t>, MatT> entries;
};

using ConormalCochain = Cochain<FractionMatrix>;
using FormCochain = Cochain<FormMatrix>;

/// Moves one matrix entry from Λ to Λ' ⊇ Λ: restriction, plus conjugation by
/// the transition residues M^t_{i,m} · c · M^s_{m,i} when the minimal index
/// changes from m = min(Λ) to i = min(Λ').
template <class MatT>
MatT retrivialize(const ChartedScheme& X, const BundleComplex& E, const MatT& entry,
                  const ChartSet& from, const ChartSet& to, int src_deg, int tgt_deg) {
  if (!from.subset_of(to)) throw ChartMismatch();
  MatT moved = restrict_matrix(X, entry, to);
  const std::size_t m = from.indices.front();
  const std::size_t i = to.indices.front();
  if (m == i) return moved;
  const FractionMatrix left = restrict_matrix(X, E.transition(i, m, tgt_deg), to);
  const FractionMatrix right = restrict_matrix(X, E.transition(m, i, src_deg), to);
  return left * moved * right;
}

namespace detail {

template <class MatT>
MatT zero_like(const BundleComplex& E, const ChartSet& cs, std::size_t rows, std::size_t cols);

template <>
inline FractionMatrix zero_like<FractionMatrix>(const BundleComplex& E, const ChartSet& cs,
                                                std::size_t rows, std::size_t cols) {
  return FractionMatrix(rows, cols, cs, E.ring());
}

template <>
inline FormMatrix zero_like<FormMatrix>(const BundleComplex& E, const ChartSet& cs,
                                        std::size_t rows, std::size_t cols) {
  return FormMatrix(rows, cols, cs, E.ring());
}

}  // namespace detail

template <class MatT>
Cochain<MatT> zero_cochain(const BundleComplex& E, int r, int src_deg, int tgt_deg) {
  Cochain<MatT> c{r, src_deg, tgt_deg, {}};
  for (const auto& cs : E.scheme()->nonempty_chart_sets(static_cast<std::size_t>(r) + 1)) {
    const std::size_t min = cs.indices.front();
    c.entries.emplace(cs.indices, detail::zero_like<MatT>(E, cs, E.rank(min, tgt_deg),
                                                          E.rank(min, src_deg)));
  }
  return c;
}

/// Alternating sum of retrivialized restrictions; entries over empty chart
/// sets do not occur (subsets of nonempty sets are nonempty).
template <class MatT>
Cochain<MatT> cech_differential(const ChartedScheme& X, const BundleComplex& E,
                                const Cochain<MatT>& c) {
  Cochain<MatT> out =
      zero_cochain<MatT>(E, c.cech_degree + 1, c.src_deg, c.tgt_deg);
  for (auto& [indices, target] : out.entries) {
    const ChartSet to = X.chart_set(indices);
    for (std::size_t omit = 0; omit < indices.size(); ++omit) {
      std::vector<std::size_t> sub = indices;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(omit));
      const auto it = c.entries.find(sub);
      if (it == c.entries.end()) continue;  // face over an empty chart set
      MatT moved = retrivialize(X, E, it->second, X.chart_set(sub), to, c.src_deg, c.tgt_deg);
      target = (omit % 2 == 0) ? target + moved : target - moved;
    }
  }
  return out;
}

/// Post-composition with d_E: left-multiply by the residue of D~^t at min(Λ).
template <class MatT>
Cochain<MatT> de_left(const ChartedScheme& X, const BundleComplex& E, const Cochain<MatT>& c) {
  Cochain<MatT> out = zero_cochain<MatT>(E, c.cech_degree, c.src_deg, c.tgt_deg + 1);
  for (auto& [indices, target] : out.entries) {
    const ChartSet cs = X.chart_set(indices);
    const auto it = c.entries.find(indices);
    if (it == c.entries.end()) continue;
    const FractionMatrix d = restrict_matrix(X, E.differential(indices.front(), c.tgt_deg), cs);
    target = d * it->second;
  }
  return out;
}

/// Pre-composition with d_E: right-multiply by the residue of D~^(s-1) at min(Λ).
template <class MatT>
Cochain<MatT> de_right(const ChartedScheme& X, const BundleComplex& E, const Cochain<MatT>& c) {
  Cochain<MatT> out = zero_cochain<MatT>(E, c.cech_degree, c.src_deg - 1, c.tgt_deg);
  for (auto& [indices, target] : out.entries) {
    const ChartSet cs = X.chart_set(indices);
    const auto it = c.entries.find(indices);
    if (it == c.entries.end()) continue;
    const FractionMatrix d =
        restrict_matrix(X, E.differential(indices.front(), c.src_deg - 1), cs);
    target = it->second * d;
  }
  return out;
}

/// Entrywise universal derivation of a conormal-valued cochain.
FormCochain conormal_d(const ConormalCochain& c);

template <class MatT>
Cochain<MatT> scale_cochain(Cochain<MatT> c, const Rational& k) {
  for (auto& [indices, m] : c.entries) m = m.scaled(k);
  return c;
}

template <class MatT>
Cochain<MatT> add_cochains(const Cochain<MatT>& a, const Cochain<MatT>& b) {
  Cochain<MatT> out = a;
  for (auto& [indices, m] : out.entries) {
    const auto it = b.entries.find(indices);
    if (it != b.entries.end()) m = m + it->second;
  }
  return out;
}

}  // namespace atc
