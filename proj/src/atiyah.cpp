#include "atc/atiyah.hpp"

namespace atc {

namespace {

Rational xi_of(int s) { return (s % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

ConormalCochain build_t1(const BundleComplex& E, int s) {
  const auto& X = *E.scheme();
  ConormalCochain out = zero_cochain<FractionMatrix>(E, 2, s, s);
  for (auto& [indices, entry] : out.entries) {
    const std::size_t i = indices[0], j = indices[1], k = indices[2];
    const ChartSet cs = X.chart_set(indices);
    const FractionMatrix m_ik = restrict_matrix(X, E.transition(i, k, s), cs);
    const FractionMatrix m_kj = restrict_matrix(X, E.transition(k, j, s), cs);
    const FractionMatrix m_ji = restrict_matrix(X, E.transition(j, i, s), cs);
    const FractionMatrix m_ki = restrict_matrix(X, E.transition(k, i, s), cs);
    entry = m_ik * (m_kj * m_ji - m_ki);
  }
  return out;
}

FormCochain build_t2(const BundleComplex& E, int s) {
  const auto& X = *E.scheme();
  FormCochain out = zero_cochain<FormMatrix>(E, 1, s, s);
  for (auto& [indices, entry] : out.entries) {
    const std::size_t i = indices[0], j = indices[1];
    (void)X;
    entry = E.transition(i, j, s) * FormMatrix::d_of(E.transition(j, i, s));
  }
  return out;
}

ConormalCochain build_t3(const BundleComplex& E, int s) {
  const auto& X = *E.scheme();
  ConormalCochain out = zero_cochain<FractionMatrix>(E, 1, s, s + 1);
  for (auto& [indices, entry] : out.entries) {
    const std::size_t i = indices[0], j = indices[1];
    const ChartSet cs = X.chart_set(indices);
    const FractionMatrix d_i = restrict_matrix(X, E.differential(i, s), cs);
    const FractionMatrix d_j = restrict_matrix(X, E.differential(j, s), cs);
    const FractionMatrix inner = E.transition(j, i, s + 1) * d_i - d_j * E.transition(j, i, s);
    entry = (E.transition(i, j, s + 1) * inner).scaled(-xi_of(s));
  }
  return out;
}

FormCochain build_t4(const BundleComplex& E, int s) {
  FormCochain out = zero_cochain<FormMatrix>(E, 0, s, s + 1);
  for (auto& [indices, entry] : out.entries)
    entry = FormMatrix::d_of(E.differential(indices[0], s)).scaled(-xi_of(s));
  return out;
}

ConormalCochain build_t5(const BundleComplex& E, int s) {
  ConormalCochain out = zero_cochain<FractionMatrix>(E, 0, s, s + 2);
  for (auto& [indices, entry] : out.entries)
    entry = -(E.differential(indices[0], s + 1) * E.differential(indices[0], s));
  return out;
}

TruncatedAtiyahRep build_truncated_atiyah(const BundleComplex& E) {
  TruncatedAtiyahRep rep{E.s_min(), E.s_max(), {}, {}, {}, {}, {}};
  for (int s = E.s_min(); s <= E.s_max(); ++s) {
    rep.t1.emplace(s, build_t1(E, s));
    rep.t2.emplace(s, build_t2(E, s));
    rep.t3.emplace(s, build_t3(E, s));
    rep.t4.emplace(s, build_t4(E, s));
    rep.t5.emplace(s, build_t5(E, s));
  }
  return rep;
}

ClassicalAtiyahRep build_classical_atiyah(const BundleComplex& E) {
  ClassicalAtiyahRep rep{E.s_min(), E.s_max(), {}, {}};
  for (int s = E.s_min(); s <= E.s_max(); ++s) {
    rep.p1.emplace(s, build_t2(E, s));
    rep.p2.emplace(s, build_t4(E, s));
  }
  return rep;
}

namespace {

template <class MatT>
Cochain<MatT> family_or_zero(const std::map<int, Cochain<MatT>>& fam, const BundleComplex& E,
                             int s, int r, int tgt_offset) {
  const auto it = fam.find(s);
  if (it != fam.end()) return it->second;
  return zero_cochain<MatT>(E, r, s, s + tgt_offset);
}

void check_shape(const BundleComplex& E, int r, int src, int tgt,
                 const std::map<std::vector<std::size_t>, FractionMatrix>& entries) {
  for (const auto& [indices, m] : entries) {
    if (indices.size() != static_cast<std::size_t>(r) + 1)
      throw std::invalid_argument("cochain entry index length mismatch");
    const std::size_t min = indices.front();
    if (m.rows() != E.rank(min, tgt) || m.cols() != E.rank(min, src))
      throw std::invalid_argument("cochain entry shape mismatch");
  }
}

void check_shape(const BundleComplex& E, int r, int src, int tgt,
                 const std::map<std::vector<std::size_t>, FormMatrix>& entries) {
  for (const auto& [indices, m] : entries) {
    if (indices.size() != static_cast<std::size_t>(r) + 1)
      throw std::invalid_argument("cochain entry index length mismatch");
    const std::size_t min = indices.front();
    if (m.rows() != E.rank(min, tgt) || m.cols() != E.rank(min, src))
      throw std::invalid_argument("cochain entry shape mismatch");
  }
}

void record_failures(const ChartedScheme& X, const ConormalCochain& lhs,
                     const ConormalCochain& rhs, int summand, int s,
                     std::vector<ChainMapFailure>& out) {
  for (const auto& [indices, a] : lhs.entries) {
    const auto it = rhs.entries.find(indices);
    if (it == rhs.entries.end()) throw std::logic_error("cochain key mismatch");
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!equal_mod_ideal_sq(X, a.at(r, c), it->second.at(r, c)))
          out.push_back(ChainMapFailure{summand, s, indices, r, c});
  }
}

void record_failures(const ChartedScheme& X, const FormCochain& lhs, const FormCochain& rhs,
                     int summand, int s, std::vector<ChainMapFailure>& out) {
  for (const auto& [indices, a] : lhs.entries) {
    const auto it = rhs.entries.find(indices);
    if (it == rhs.entries.end()) throw std::logic_error("cochain key mismatch");
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t v = 0; v < a.nvars(); ++v)
          if (!equal_mod_ideal(X, a.slice(v).at(r, c), it->second.slice(v).at(r, c))) {
            out.push_back(ChainMapFailure{summand, s, indices, r, c});
            v = a.nvars();  // one failure per entry
          }
  }
}

void record_failures_jacobian(const ChartedScheme& X, const FormCochain& lhs,
                              const FormCochain& rhs, int summand, int s,
                              std::vector<ChainMapFailure>& out) {
  for (const auto& [indices, a] : lhs.entries) {
    const auto it = rhs.entries.find(indices);
    if (it == rhs.entries.end()) throw std::logic_error("cochain key mismatch");
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        AmbientForm fa{std::vector<LocalFraction>()};
        AmbientForm fb{std::vector<LocalFraction>()};
        for (std::size_t v = 0; v < a.nvars(); ++v) {
          fa.coeffs.push_back(a.slice(v).at(r, c));
          fb.coeffs.push_back(it->second.slice(v).at(r, c));
        }
        if (!equal_mod_jacobian(X, fa, fb))
          out.push_back(ChainMapFailure{summand, s, indices, r, c});
      }
  }
}

}  // namespace

ChainMapReport verify_truncated_atiyah(const BundleComplex& E, const TruncatedAtiyahRep& rep,
                                       Exec exec) {
  const auto& X = *E.scheme();
  X.warm_cache();
  for (int s = rep.s_min; s <= rep.s_max; ++s) {
    if (rep.t1.count(s)) check_shape(E, 2, s, s, rep.t1.at(s).entries);
    if (rep.t2.count(s)) check_shape(E, 1, s, s, rep.t2.at(s).entries);
    if (rep.t3.count(s)) check_shape(E, 1, s, s + 1, rep.t3.at(s).entries);
    if (rep.t4.count(s)) check_shape(E, 0, s, s + 1, rep.t4.at(s).entries);
    if (rep.t5.count(s)) check_shape(E, 0, s, s + 2, rep.t5.at(s).entries);
  }

  struct Unit {
    int summand;
    int s;
  };
  std::vector<Unit> units;
  for (int s = rep.s_min; s <= rep.s_max; ++s)
    for (int summand = 1; summand <= 7; ++summand) units.push_back(Unit{summand, s});

  std::vector<std::vector<ChainMapFailure>> results(units.size());
  for_each_index(units.size(), exec, [&](std::size_t u) {
    const int s = units[u].s;
    const Rational xi = xi_of(s);
    auto t1 = [&](int deg) { return family_or_zero(rep.t1, E, deg, 2, 0); };
    auto t2 = [&](int deg) { return family_or_zero(rep.t2, E, deg, 1, 0); };
    auto t3 = [&](int deg) { return family_or_zero(rep.t3, E, deg, 1, 1); };
    auto t4 = [&](int deg) { return family_or_zero(rep.t4, E, deg, 0, 1); };
    auto t5 = [&](int deg) { return family_or_zero(rep.t5, E, deg, 0, 2); };
    auto& fail = results[u];
    switch (units[u].summand) {
      case 1: {
        const auto lhs = scale_cochain(cech_differential(X, E, t1(s)), xi);
        record_failures(X, lhs, zero_cochain<FractionMatrix>(E, 3, s, s), 1, s, fail);
        break;
      }
      case 2: {
        const auto lhs = add_cochains(scale_cochain(conormal_d(t1(s)), -xi),
                                      scale_cochain(cech_differential(X, E, t2(s)), xi));
        record_failures(X, lhs, zero_cochain<FormMatrix>(E, 2, s, s), 2, s, fail);
        break;
      }
      case 3: {
        const auto lhs = add_cochains(de_left(X, E, t1(s)),
                                      scale_cochain(cech_differential(X, E, t3(s)), -xi));
        record_failures(X, lhs, de_right(X, E, t1(s + 1)), 3, s, fail);
        break;
      }
      case 4: {
        const auto lhs =
            add_cochains(de_left(X, E, t2(s)),
                         add_cochains(scale_cochain(conormal_d(t3(s)), -xi),
                                      scale_cochain(cech_differential(X, E, t4(s)), -xi)));
        record_failures(X, lhs, de_right(X, E, t2(s + 1)), 4, s, fail);
        break;
      }
      case 5: {
        const auto lhs = add_cochains(de_left(X, E, t3(s)),
                                      scale_cochain(cech_differential(X, E, t5(s)), xi));
        record_failures(X, lhs, de_right(X, E, t3(s + 1)), 5, s, fail);
        break;
      }
      case 6: {
        const auto lhs =
            add_cochains(de_left(X, E, t4(s)), scale_cochain(conormal_d(t5(s)), -xi));
        record_failures(X, lhs, de_right(X, E, t4(s + 1)), 6, s, fail);
        break;
      }
      case 7: {
        record_failures(X, de_left(X, E, t5(s)), de_right(X, E, t5(s + 1)), 7, s, fail);
        break;
      }
      default:
        break;
    }
  });

  ChainMapReport report;
  report.units = units.size();
  for (auto& r : results)
    for (auto& f : r) report.failures.push_back(std::move(f));
  return report;
}

ChainMapReport verify_classical_atiyah(const BundleComplex& E, const ClassicalAtiyahRep& rep,
                                       Exec exec) {
  const auto& X = *E.scheme();
  X.warm_cache();
  for (int s = rep.s_min; s <= rep.s_max; ++s) {
    if (rep.p1.count(s)) check_shape(E, 1, s, s, rep.p1.at(s).entries);
    if (rep.p2.count(s)) check_shape(E, 0, s, s + 1, rep.p2.at(s).entries);
  }

  struct Unit {
    int summand;
    int s;
  };
  std::vector<Unit> units;
  for (int s = rep.s_min; s <= rep.s_max; ++s)
    for (int summand = 1; summand <= 3; ++summand) units.push_back(Unit{summand, s});

  std::vector<std::vector<ChainMapFailure>> results(units.size());
  for_each_index(units.size(), exec, [&](std::size_t u) {
    const int s = units[u].s;
    const Rational xi = xi_of(s);
    auto p1 = [&](int deg) { return family_or_zero(rep.p1, E, deg, 1, 0); };
    auto p2 = [&](int deg) { return family_or_zero(rep.p2, E, deg, 0, 1); };
    auto& fail = results[u];
    switch (units[u].summand) {
      case 1: {
        record_failures_jacobian(X, cech_differential(X, E, p1(s)),
                                 zero_cochain<FormMatrix>(E, 2, s, s), 1, s, fail);
        break;
      }
      case 2: {
        const auto lhs = add_cochains(de_left(X, E, p1(s)),
                                      scale_cochain(cech_differential(X, E, p2(s)), -xi));
        record_failures_jacobian(X, lhs, de_right(X, E, p1(s + 1)), 2, s, fail);
        break;
      }
      case 3: {
        record_failures_jacobian(X, de_left(X, E, p2(s)), de_right(X, E, p2(s + 1)), 3, s, fail);
        break;
      }
      default:
        break;
    }
  });

  ChainMapReport report;
  report.units = units.size();
  for (auto& r : results)
    for (auto& f : r) report.failures.push_back(std::move(f));
  return report;
}

namespace {

bool cochain_eq_sq(const ChartedScheme& X, const ConormalCochain& a, const ConormalCochain& b) {
  std::vector<ChainMapFailure> fails;
  record_failures(X, a, b, 0, 0, fails);
  return fails.empty();
}

bool cochain_eq_mod(const ChartedScheme& X, const FormCochain& a, const FormCochain& b) {
  std::vector<ChainMapFailure> fails;
  record_failures(X, a, b, 0, 0, fails);
  return fails.empty();
}

bool cochain_eq_jac(const ChartedScheme& X, const FormCochain& a, const FormCochain& b) {
  std::vector<ChainMapFailure> fails;
  record_failures_jacobian(X, a, b, 0, 0, fails);
  return fails.empty();
}

}  // namespace

bool rep_eq(const BundleComplex& E, const TruncatedAtiyahRep& a, const TruncatedAtiyahRep& b) {
  const auto& X = *E.scheme();
  const int lo = std::min(a.s_min, b.s_min);
  const int hi = std::max(a.s_max, b.s_max);
  for (int s = lo; s <= hi; ++s) {
    if (!cochain_eq_sq(X, family_or_zero(a.t1, E, s, 2, 0), family_or_zero(b.t1, E, s, 2, 0)))
      return false;
    if (!cochain_eq_mod(X, family_or_zero(a.t2, E, s, 1, 0), family_or_zero(b.t2, E, s, 1, 0)))
      return false;
    if (!cochain_eq_sq(X, family_or_zero(a.t3, E, s, 1, 1), family_or_zero(b.t3, E, s, 1, 1)))
      return false;
    if (!cochain_eq_mod(X, family_or_zero(a.t4, E, s, 0, 1), family_or_zero(b.t4, E, s, 0, 1)))
      return false;
    if (!cochain_eq_sq(X, family_or_zero(a.t5, E, s, 0, 2), family_or_zero(b.t5, E, s, 0, 2)))
      return false;
  }
  return true;
}

TruncatedAtiyahRep rep_add(const BundleComplex& E, const TruncatedAtiyahRep& a,
                           const TruncatedAtiyahRep& b) {
  const int lo = std::min(a.s_min, b.s_min);
  const int hi = std::max(a.s_max, b.s_max);
  TruncatedAtiyahRep out{lo, hi, {}, {}, {}, {}, {}};
  for (int s = lo; s <= hi; ++s) {
    out.t1.emplace(s, add_cochains(family_or_zero(a.t1, E, s, 2, 0),
                                   family_or_zero(b.t1, E, s, 2, 0)));
    out.t2.emplace(s, add_cochains(family_or_zero(a.t2, E, s, 1, 0),
                                   family_or_zero(b.t2, E, s, 1, 0)));
    out.t3.emplace(s, add_cochains(family_or_zero(a.t3, E, s, 1, 1),
                                   family_or_zero(b.t3, E, s, 1, 1)));
    out.t4.emplace(s, add_cochains(family_or_zero(a.t4, E, s, 0, 1),
                                   family_or_zero(b.t4, E, s, 0, 1)));
    out.t5.emplace(s, add_cochains(family_or_zero(a.t5, E, s, 0, 2),
                                   family_or_zero(b.t5, E, s, 0, 2)));
  }
  return out;
}

TruncatedAtiyahRep rep_scale(const TruncatedAtiyahRep& a, long k) {
  TruncatedAtiyahRep out = a;
  const Rational c(k);
  for (auto& [s, f] : out.t1) f = scale_cochain(f, c);
  for (auto& [s, f] : out.t2) f = scale_cochain(f, c);
  for (auto& [s, f] : out.t3) f = scale_cochain(f, c);
  for (auto& [s, f] : out.t4) f = scale_cochain(f, c);
  for (auto& [s, f] : out.t5) f = scale_cochain(f, c);
  return out;
}

TruncatedAtiyahRep rep_negate(const TruncatedAtiyahRep& a) { return rep_scale(a, -1); }

TruncatedAtiyahRep zero_atiyah_rep(const BundleComplex& E) {
  TruncatedAtiyahRep rep{E.s_min(), E.s_max(), {}, {}, {}, {}, {}};
  for (int s = E.s_min(); s <= E.s_max(); ++s) {
    rep.t1.emplace(s, zero_cochain<FractionMatrix>(E, 2, s, s));
    rep.t2.emplace(s, zero_cochain<FormMatrix>(E, 1, s, s));
    rep.t3.emplace(s, zero_cochain<FractionMatrix>(E, 1, s, s + 1));
    rep.t4.emplace(s, zero_cochain<FormMatrix>(E, 0, s, s + 1));
    rep.t5.emplace(s, zero_cochain<FractionMatrix>(E, 0, s, s + 2));
  }
  return rep;
}

bool rep_eq(const BundleComplex& E, const ClassicalAtiyahRep& a, const ClassicalAtiyahRep& b) {
  const auto& X = *E.scheme();
  const int lo = std::min(a.s_min, b.s_min);
  const int hi = std::max(a.s_max, b.s_max);
  for (int s = lo; s <= hi; ++s) {
    if (!cochain_eq_jac(X, family_or_zero(a.p1, E, s, 1, 0), family_or_zero(b.p1, E, s, 1, 0)))
      return false;
    if (!cochain_eq_jac(X, family_or_zero(a.p2, E, s, 0, 1), family_or_zero(b.p2, E, s, 0, 1)))
      return false;
  }
  return true;
}

}  // namespace atc
