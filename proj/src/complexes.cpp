#include "atc/complexes.hpp"

#include <algorithm>
#include <sstream>

namespace atc {

namespace {

std::string frac_str(const LocalFraction& a) {
  if (a.pow == 0) return a.num.str();
  std::ostringstream os;
  os << '(' << a.num.str() << ")/f^" << a.pow;
  return os.str();
}

void paste(FractionMatrix& into, std::size_t r0, std::size_t c0, const FractionMatrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) into.at(r0 + r, c0 + c) = block.at(r, c);
}

}  // namespace

BundleComplex::BundleComplex(SchemePtr scheme, int s_min, int s_max,
                             std::vector<std::vector<std::size_t>> ranks_per_chart)
    : scheme_(std::move(scheme)), s_min_(s_min), s_max_(s_max), ranks_(std::move(ranks_per_chart)) {
  if (s_min_ > s_max_) throw std::invalid_argument("empty degree range");
  if (ranks_.size() != scheme_->cover().size())
    throw std::invalid_argument("rank table must list every chart");
  const std::size_t span = static_cast<std::size_t>(s_max_ - s_min_ + 1);
  for (const auto& row : ranks_)
    if (row.size() != span) throw std::invalid_argument("rank table degree span mismatch");
}

std::size_t BundleComplex::rank(std::size_t chart, int s) const {
  if (s < s_min_ || s > s_max_) return 0;
  return ranks_.at(chart)[static_cast<std::size_t>(s - s_min_)];
}

void BundleComplex::set_transition(std::size_t i, std::size_t j, int s, FractionMatrix m) {
  if (i == j) throw std::invalid_argument("transitions need two distinct charts");
  if (m.rows() != rank(i, s) || m.cols() != rank(j, s))
    throw std::invalid_argument("transition shape does not match ranks");
  if (!same_chart_set(m.cs(), scheme_->pair(i, j))) throw ChartMismatch();
  transitions_.insert_or_assign(std::make_tuple(i, j, s), std::move(m));
}

void BundleComplex::set_differential(std::size_t i, int s, FractionMatrix m) {
  if (m.rows() != rank(i, s + 1) || m.cols() != rank(i, s))
    throw std::invalid_argument("differential shape does not match ranks");
  if (!same_chart_set(m.cs(), scheme_->single(i))) throw ChartMismatch();
  differentials_.insert_or_assign(std::make_pair(i, s), std::move(m));
}

bool BundleComplex::has_transition(std::size_t i, std::size_t j, int s) const {
  return transitions_.count(std::make_tuple(i, j, s)) > 0;
}

FractionMatrix BundleComplex::transition(std::size_t i, std::size_t j, int s) const {
  auto it = transitions_.find(std::make_tuple(i, j, s));
  if (it != transitions_.end()) return it->second;
  if (rank(i, s) == 0 || rank(j, s) == 0)
    return FractionMatrix(rank(i, s), rank(j, s), scheme_->pair(i, j), ring());
  throw std::out_of_range("missing transition lift for an ordered chart pair");
}

FractionMatrix BundleComplex::differential(std::size_t i, int s) const {
  auto it = differentials_.find(std::make_pair(i, s));
  if (it != differentials_.end()) return it->second;
  return FractionMatrix(rank(i, s + 1), rank(i, s), scheme_->single(i), ring());
}

bool BundleComplex::differential_is_zero(std::size_t i, int s) const {
  auto it = differentials_.find(std::make_pair(i, s));
  if (it == differentials_.end()) return true;
  for (std::size_t r = 0; r < it->second.rows(); ++r)
    for (std::size_t c = 0; c < it->second.cols(); ++c)
      if (!it->second.at(r, c).syntactically_zero()) return false;
  return true;
}

bool BundleComplex::transitions_complete() const {
  for (std::size_t i = 0; i < charts(); ++i)
    for (std::size_t j = 0; j < charts(); ++j) {
      if (i == j) continue;
      for (int s = s_min_; s <= s_max_; ++s)
        if (rank(i, s) > 0 && rank(j, s) > 0 && !has_transition(i, j, s)) return false;
    }
  return true;
}

ValidationReport validate_complex(const BundleComplex& E, Exec exec) {
  const auto& X = *E.scheme();
  const std::size_t n = E.charts();
  X.warm_cache();

  struct Unit {
    char condition;
    int s;
    std::vector<std::size_t> idx;
  };
  std::vector<Unit> units;
  for (int s = E.s_min(); s <= E.s_max(); ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        units.push_back(Unit{'a', s, {i, j}});
        units.push_back(Unit{'d', s, {i, j}});
        for (std::size_t k = 0; k < n; ++k)
          if (k != i && k != j) units.push_back(Unit{'b', s, {i, j, k}});
      }
      units.push_back(Unit{'c', s, {i}});
    }
  }

  std::vector<std::vector<ValidationFailure>> results(units.size());
  for_each_index(units.size(), exec, [&](std::size_t u) {
    const Unit& unit = units[u];
    const int s = unit.s;
    auto record = [&](const FractionMatrix& defect, const FractionMatrix& expect) {
      for (std::size_t r = 0; r < defect.rows(); ++r)
        for (std::size_t c = 0; c < defect.cols(); ++c)
          if (!equal_mod_ideal(X, defect.at(r, c), expect.at(r, c)))
            results[u].push_back(ValidationFailure{unit.condition, s, unit.idx, r, c,
                                                   frac_str(defect.at(r, c) - expect.at(r, c))});
    };
    switch (unit.condition) {
      case 'a': {
        const std::size_t i = unit.idx[0], j = unit.idx[1];
        if (E.rank(i, s) == 0 || E.rank(j, s) == 0) break;
        const FractionMatrix prod = E.transition(i, j, s) * E.transition(j, i, s);
        record(prod, FractionMatrix::identity(prod.rows(), prod.cs(), E.ring()));
        break;
      }
      case 'b': {
        const std::size_t i = unit.idx[0], j = unit.idx[1], k = unit.idx[2];
        if (E.rank(i, s) == 0 || E.rank(j, s) == 0 || E.rank(k, s) == 0) break;
        std::vector<std::size_t> tri = {i, j, k};
        std::sort(tri.begin(), tri.end());
        const ChartSet cs = X.chart_set(tri);
        const FractionMatrix lhs = restrict_matrix(X, E.transition(k, j, s), cs) *
                                   restrict_matrix(X, E.transition(j, i, s), cs);
        record(lhs, restrict_matrix(X, E.transition(k, i, s), cs));
        break;
      }
      case 'c': {
        const std::size_t i = unit.idx[0];
        const FractionMatrix prod = E.differential(i, s + 1) * E.differential(i, s);
        record(prod, FractionMatrix(prod.rows(), prod.cols(), prod.cs(), E.ring()));
        break;
      }
      case 'd': {
        const std::size_t i = unit.idx[0], j = unit.idx[1];
        const ChartSet cs = X.pair(i, j);
        const FractionMatrix lhs =
            E.transition(j, i, s + 1) * restrict_matrix(X, E.differential(i, s), cs);
        const FractionMatrix rhs =
            restrict_matrix(X, E.differential(j, s), cs) * E.transition(j, i, s);
        record(lhs, rhs);
        break;
      }
      default:
        break;
    }
  });

  ValidationReport report;
  report.units = units.size();
  for (auto& r : results)
    for (auto& f : r) report.failures.push_back(std::move(f));
  return report;
}

std::map<std::size_t, long> rank_table(const BundleComplex& E) {
  std::map<std::size_t, long> table;
  for (std::size_t i = 0; i < E.charts(); ++i) {
    if (E.scheme()->chart_empty(E.scheme()->single(i))) continue;
    long sum = 0;
    for (int s = E.s_min(); s <= E.s_max(); ++s)
      sum += (s % 2 == 0 ? 1 : -1) * static_cast<long>(E.rank(i, s));
    table.emplace(i, sum);
  }
  return table;
}

std::optional<long> constant_rank(const BundleComplex& E) {
  const auto table = rank_table(E);
  std::optional<long> value;
  for (const auto& [chart, r] : table) {
    if (!value)
      value = r;
    else if (*value != r)
      return std::nullopt;
  }
  return value;
}

BundleComplex dual_complex(const BundleComplex& E) {
  const int u_min = -E.s_max(), u_max = -E.s_min();
  std::vector<std::vector<std::size_t>> ranks(E.charts());
  for (std::size_t i = 0; i < E.charts(); ++i)
    for (int u = u_min; u <= u_max; ++u) ranks[i].push_back(E.rank(i, -u));
  BundleComplex D(E.scheme(), u_min, u_max, std::move(ranks));
  for (std::size_t i = 0; i < E.charts(); ++i) {
    for (int u = u_min; u <= u_max; ++u) {
      for (std::size_t j = 0; j < E.charts(); ++j) {
        if (i == j || D.rank(i, u) == 0 || D.rank(j, u) == 0) continue;
        D.set_transition(i, j, u, E.transition(j, i, -u).transpose());
      }
      // Hom(-, O) with a one-term target only precomposes, so no sign.
      if (u < u_max && !(E.rank(i, -u) == 0 || E.rank(i, -u - 1) == 0))
        D.set_differential(i, u, E.differential(i, -u - 1).transpose());
    }
  }
  return D;
}

BundleComplex direct_sum(const BundleComplex& E, const BundleComplex& F) {
  if (E.scheme() != F.scheme()) throw std::invalid_argument("direct sum needs a shared cover");
  const int s_min = std::min(E.s_min(), F.s_min());
  const int s_max = std::max(E.s_max(), F.s_max());
  std::vector<std::vector<std::size_t>> ranks(E.charts());
  for (std::size_t i = 0; i < E.charts(); ++i)
    for (int s = s_min; s <= s_max; ++s) ranks[i].push_back(E.rank(i, s) + F.rank(i, s));
  BundleComplex S(E.scheme(), s_min, s_max, std::move(ranks));
  const auto& X = *E.scheme();
  for (std::size_t i = 0; i < E.charts(); ++i) {
    for (std::size_t j = 0; j < E.charts(); ++j) {
      if (i == j) continue;
      for (int s = s_min; s <= s_max; ++s) {
        if (S.rank(i, s) == 0 || S.rank(j, s) == 0) continue;
        FractionMatrix m(S.rank(i, s), S.rank(j, s), X.pair(i, j), E.ring());
        paste(m, 0, 0, E.transition(i, j, s));
        paste(m, E.rank(i, s), E.rank(j, s), F.transition(i, j, s));
        S.set_transition(i, j, s, std::move(m));
      }
    }
    for (int s = s_min; s < s_max; ++s) {
      if (S.rank(i, s) == 0 || S.rank(i, s + 1) == 0) continue;
      FractionMatrix m(S.rank(i, s + 1), S.rank(i, s), X.single(i), E.ring());
      paste(m, 0, 0, E.differential(i, s));
      paste(m, E.rank(i, s + 1), E.rank(i, s), F.differential(i, s));
      S.set_differential(i, s, std::move(m));
    }
  }
  return S;
}

namespace {

// Summands (s, t) of (E ⊗ F)^u in the fixed order of increasing s, with the
// running row/column offset per chart.
struct TensorLayout {
  std::vector<std::pair<int, int>> summands;
  // offset[chart][summand index]
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::size_t> total;
};

TensorLayout tensor_layout(const BundleComplex& E, const BundleComplex& F, int u) {
  TensorLayout layout;
  layout.offsets.resize(E.charts());
  layout.total.assign(E.charts(), 0);
  for (int s = E.s_min(); s <= E.s_max(); ++s) {
    const int t = u - s;
    if (t < F.s_min() || t > F.s_max()) continue;
    layout.summands.emplace_back(s, t);
    for (std::size_t i = 0; i < E.charts(); ++i) {
      layout.offsets[i].push_back(layout.total[i]);
      layout.total[i] += E.rank(i, s) * F.rank(i, t);
    }
  }
  return layout;
}

}  // namespace

BundleComplex tensor_complex(const BundleComplex& E, const BundleComplex& F) {
  if (E.scheme() != F.scheme()) throw std::invalid_argument("tensor needs a shared cover");
  const auto& X = *E.scheme();
  const int u_min = E.s_min() + F.s_min();
  const int u_max = E.s_max() + F.s_max();
  std::vector<std::vector<std::size_t>> ranks(E.charts());
  for (std::size_t i = 0; i < E.charts(); ++i)
    for (int u = u_min; u <= u_max; ++u) ranks[i].push_back(tensor_layout(E, F, u).total[i]);
  BundleComplex T(E.scheme(), u_min, u_max, std::move(ranks));

  for (int u = u_min; u <= u_max; ++u) {
    const TensorLayout layout = tensor_layout(E, F, u);
    const TensorLayout next = tensor_layout(E, F, u + 1);
    auto summand_index_next = [&](int s, int t) -> std::ptrdiff_t {
      for (std::size_t k = 0; k < next.summands.size(); ++k)
        if (next.summands[k] == std::make_pair(s, t)) return static_cast<std::ptrdiff_t>(k);
      return -1;
    };
    for (std::size_t i = 0; i < E.charts(); ++i) {
      for (std::size_t j = 0; j < E.charts(); ++j) {
        if (i == j || T.rank(i, u) == 0 || T.rank(j, u) == 0) continue;
        FractionMatrix m(T.rank(i, u), T.rank(j, u), X.pair(i, j), E.ring());
        for (std::size_t k = 0; k < layout.summands.size(); ++k) {
          const auto [s, t] = layout.summands[k];
          if (E.rank(i, s) * F.rank(i, t) == 0 || E.rank(j, s) * F.rank(j, t) == 0) continue;
          paste(m, layout.offsets[i][k], layout.offsets[j][k],
                FractionMatrix::kronecker(E.transition(i, j, s), F.transition(i, j, t)));
        }
        T.set_transition(i, j, u, std::move(m));
      }
      if (u < u_max && T.rank(i, u) > 0 && T.rank(i, u + 1) > 0) {
        FractionMatrix m(T.rank(i, u + 1), T.rank(i, u), X.single(i), E.ring());
        for (std::size_t k = 0; k < layout.summands.size(); ++k) {
          const auto [s, t] = layout.summands[k];
          if (E.rank(i, s) * F.rank(i, t) == 0) continue;
          const ChartSet cs = X.single(i);
          // d_E ⊗ id into (s+1, t)
          const auto k1 = summand_index_next(s + 1, t);
          if (k1 >= 0 && E.rank(i, s + 1) > 0) {
            FractionMatrix idF = FractionMatrix::identity(F.rank(i, t), cs, E.ring());
            paste(m, next.offsets[i][static_cast<std::size_t>(k1)], layout.offsets[i][k],
                  FractionMatrix::kronecker(E.differential(i, s), idF));
          }
          // (-1)^s id ⊗ d_F into (s, t+1)
          const auto k2 = summand_index_next(s, t + 1);
          if (k2 >= 0 && F.rank(i, t + 1) > 0) {
            FractionMatrix idE = FractionMatrix::identity(E.rank(i, s), cs, E.ring());
            FractionMatrix block = FractionMatrix::kronecker(idE, F.differential(i, t));
            if (s % 2 != 0) block = -block;
            paste(m, next.offsets[i][static_cast<std::size_t>(k2)], layout.offsets[i][k],
                  std::move(block));
          }
        }
        T.set_differential(i, u, std::move(m));
      }
    }
  }
  return T;
}

BundleComplex hom_complex(const BundleComplex& E, const BundleComplex& F) {
  return tensor_complex(dual_complex(E), F);
}

LineBundle::LineBundle(BundleComplex bc) : bc_(std::move(bc)) {
  if (bc_.s_min() != 0 || bc_.s_max() != 0)
    throw std::invalid_argument("a line bundle is concentrated in degree 0");
  for (std::size_t i = 0; i < bc_.charts(); ++i)
    if (bc_.rank(i, 0) != 1) throw std::invalid_argument("a line bundle has rank 1 everywhere");
}

LocalFraction LineBundle::lift(std::size_t i, std::size_t j) const {
  return bc_.transition(i, j, 0).at(0, 0);
}

LineBundle trivial_line_bundle(const SchemePtr& scheme) {
  std::map<std::pair<std::size_t, std::size_t>, LocalFraction> lifts;
  const std::size_t n = scheme->cover().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        lifts.emplace(std::make_pair(i, j),
                      frac_of(scheme->pair(i, j),
                              Polynomial::constant(scheme->ring(), Rational(1))));
  return make_line_bundle(scheme, lifts);
}

LineBundle make_line_bundle(
    const SchemePtr& scheme,
    const std::map<std::pair<std::size_t, std::size_t>, LocalFraction>& lifts) {
  const std::size_t n = scheme->cover().size();
  BundleComplex bc(scheme, 0, 0, std::vector<std::vector<std::size_t>>(n, {1}));
  for (const auto& [key, fr] : lifts) {
    FractionMatrix m(1, 1, scheme->pair(key.first, key.second), scheme->ring());
    m.at(0, 0) = fr;
    bc.set_transition(key.first, key.second, 0, std::move(m));
  }
  return LineBundle(std::move(bc));
}

LineBundle det_complex(const BundleComplex& E) {
  const auto& X = *E.scheme();
  std::map<std::pair<std::size_t, std::size_t>, LocalFraction> lifts;
  for (std::size_t i = 0; i < E.charts(); ++i) {
    for (std::size_t j = 0; j < E.charts(); ++j) {
      if (i == j) continue;
      const ChartSet cs = X.pair(i, j);
      LocalFraction acc = frac_of(cs, Polynomial::constant(E.ring(), Rational(1)));
      for (int s = E.s_min(); s <= E.s_max(); ++s) {
        const bool even = ((s % 2) == 0);
        const FractionMatrix m = even ? E.transition(i, j, s) : E.transition(j, i, s);
        acc = acc * m.det();
      }
      lifts.emplace(std::make_pair(i, j), std::move(acc));
    }
  }
  return make_line_bundle(E.scheme(), lifts);
}

LineBundle tensor_line(const LineBundle& a, const LineBundle& b) {
  return LineBundle(tensor_complex(a.complex(), b.complex()));
}

LineBundle line_power(const LineBundle& a, long n) {
  if (n < 0) return line_power(LineBundle(dual_complex(a.complex())), -n);
  LineBundle acc = trivial_line_bundle(a.complex().scheme());
  for (long k = 0; k < n; ++k) acc = tensor_line(acc, a);
  return acc;
}

BundleComplex degree_slice(const BundleComplex& E, int s) {
  std::vector<std::vector<std::size_t>> ranks(E.charts());
  for (std::size_t i = 0; i < E.charts(); ++i) ranks[i] = {E.rank(i, s)};
  BundleComplex S(E.scheme(), 0, 0, std::move(ranks));
  for (std::size_t i = 0; i < E.charts(); ++i)
    for (std::size_t j = 0; j < E.charts(); ++j)
      if (i != j && S.rank(i, 0) > 0 && S.rank(j, 0) > 0)
        S.set_transition(i, j, 0, E.transition(i, j, s));
  return S;
}

}  // namespace atc
