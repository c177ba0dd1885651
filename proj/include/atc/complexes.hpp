#pragma once

#include <map>
#include <optional>
#include <string>

#include "atc/fraction_matrix.hpp"
#include "atc/parallel.hpp"

namespace atc {

/// Bounded complex of trivialized bundles over a charted scheme: per-chart
/// ranks m_i^s, lifted transition matrices for every ordered chart pair and
/// degree, and lifted differentials per chart. All matrix data is expressed
/// in the chosen (implicit) trivializations; both orientations (i,j) and
/// (j,i) are required input, inverses are never computed.
class BundleComplex {
 public:
  BundleComplex(SchemePtr scheme, int s_min, int s_max,
                std::vector<std::vector<std::size_t>> ranks_per_chart);

  const SchemePtr& scheme() const { return scheme_; }
  const RingPtr& ring() const { return scheme_->ring(); }
  int s_min() const { return s_min_; }
  int s_max() const { return s_max_; }
  std::size_t charts() const { return scheme_->cover().size(); }

  std::size_t rank(std::size_t chart, int s) const;

  void set_transition(std::size_t i, std::size_t j, int s, FractionMatrix m);
  void set_differential(std::size_t i, int s, FractionMatrix m);

  bool has_transition(std::size_t i, std::size_t j, int s) const;
  /// Lifted transition M~_ij^s on the pair chart set; rank-0 shapes come back
  /// as empty matrices, anything else missing is a hard error.
  FractionMatrix transition(std::size_t i, std::size_t j, int s) const;
  /// Lifted differential D~_i^s (zero when unset).
  FractionMatrix differential(std::size_t i, int s) const;
  bool differential_is_zero(std::size_t i, int s) const;

  /// True when every ordered pair and degree with nonzero ranks has its lift.
  bool transitions_complete() const;

 private:
  SchemePtr scheme_;
  int s_min_, s_max_;
  std::vector<std::vector<std::size_t>> ranks_;  // [chart][s - s_min]
  std::map<std::tuple<std::size_t, std::size_t, int>, FractionMatrix> transitions_;
  std::map<std::pair<std::size_t, int>, FractionMatrix> differentials_;
};

struct ValidationFailure {
  char condition;  // 'a' pair inverses, 'b' triple cocycle, 'c' d^2, 'd' compatibility
  int s;
  std::vector<std::size_t> indices;  // ordered as checked
  std::size_t row, col;
  std::string value;  // canonical form of the defect entry
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  std::size_t units = 0;
  bool ok() const { return failures.empty(); }
};

/// Checks the four lift relations entrywise mod J on the appropriate chart
/// sets: (a) M~_ij M~_ji = 1, (b) M~_kj M~_ji = M~_ki, (c) D~ D~ = 0,
/// (d) M~_ji D~_i = D~_j M~_ji. Dimension inconsistencies throw.
ValidationReport validate_complex(const BundleComplex& E, Exec exec = default_exec());

/// Per-chart alternating rank sum over nonempty charts; the common value when
/// constant, nullopt otherwise.
std::optional<long> constant_rank(const BundleComplex& E);
std::map<std::size_t, long> rank_table(const BundleComplex& E);

BundleComplex dual_complex(const BundleComplex& E);
BundleComplex direct_sum(const BundleComplex& E, const BundleComplex& F);
BundleComplex tensor_complex(const BundleComplex& E, const BundleComplex& F);
BundleComplex hom_complex(const BundleComplex& E, const BundleComplex& F);

/// Rank-1 complex concentrated in degree 0 with zero differential.
class LineBundle {
 public:
  explicit LineBundle(BundleComplex bc);
  const BundleComplex& complex() const { return bc_; }
  LocalFraction lift(std::size_t i, std::size_t j) const;  // scalar M~_ij

 private:
  BundleComplex bc_;
};

LineBundle trivial_line_bundle(const SchemePtr& scheme);
LineBundle make_line_bundle(const SchemePtr& scheme,
                            const std::map<std::pair<std::size_t, std::size_t>, LocalFraction>& lifts);
/// Alternating product of degree determinants: even degrees contribute
/// det(M~_ij), odd degrees det(M~_ji) (the opposite-orientation lift, which
/// lifts det(M_ij)^-1); no ring inversion is performed.
LineBundle det_complex(const BundleComplex& E);
LineBundle tensor_line(const LineBundle& a, const LineBundle& b);
LineBundle line_power(const LineBundle& a, long n);

/// E^s viewed as a bundle in degree 0 (transitions of degree s, no differential).
BundleComplex degree_slice(const BundleComplex& E, int s);

}  // namespace atc
