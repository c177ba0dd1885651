#include "atc/chern.hpp"

namespace atc {

namespace {

Rational sign_of(int s) { return (s % 2 == 0) ? Rational(1) : Rational(-1); }

ConormalCochain scalar_conormal(const SchemePtr& X, int r) {
  ConormalCochain c{r, 0, 0, {}};
  for (const auto& cs : X->nonempty_chart_sets(static_cast<std::size_t>(r) + 1))
    c.entries.emplace(cs.indices, FractionMatrix(1, 1, cs, X->ring()));
  return c;
}

FormCochain scalar_form(const SchemePtr& X, int r) {
  FormCochain c{r, 0, 0, {}};
  for (const auto& cs : X->nonempty_chart_sets(static_cast<std::size_t>(r) + 1))
    c.entries.emplace(cs.indices, FormMatrix(1, 1, cs, X->ring()));
  return c;
}

}  // namespace

TruncChernRep build_trunc_chern1(const BundleComplex& E) {
  const SchemePtr& X = E.scheme();
  TruncChernRep rep{scalar_conormal(X, 2), scalar_form(X, 1)};
  for (int s = E.s_min(); s <= E.s_max(); ++s) {
    const Rational sgn = sign_of(s);
    const ConormalCochain t1 = build_t1(E, s);
    for (auto& [indices, m] : rep.c2.entries) {
      const auto it = t1.entries.find(indices);
      if (it == t1.entries.end() || it->second.rows() == 0) continue;
      m.at(0, 0) = m.at(0, 0) + scale(it->second.trace(), sgn);
    }
    const FormCochain t2 = build_t2(E, s);
    for (auto& [indices, m] : rep.c1w.entries) {
      const auto it = t2.entries.find(indices);
      if (it == t2.entries.end() || it->second.rows() == 0) continue;
      const FormMatrix tr = it->second.trace();
      for (std::size_t v = 0; v < m.nvars(); ++v)
        m.slice(v).at(0, 0) = m.slice(v).at(0, 0) + scale(tr.slice(v).at(0, 0), sgn);
    }
  }
  return rep;
}

ClassChernRep build_class_chern1(const BundleComplex& E) {
  return ClassChernRep{build_trunc_chern1(E).c1w};
}

TruncChernRep chern_zero(const SchemePtr& X) {
  return TruncChernRep{scalar_conormal(X, 2), scalar_form(X, 1)};
}

TruncChernRep chern_add(const ChartedScheme& X, const TruncChernRep& a, const TruncChernRep& b) {
  (void)X;
  return TruncChernRep{add_cochains(a.c2, b.c2), add_cochains(a.c1w, b.c1w)};
}

TruncChernRep chern_negate(const TruncChernRep& a) {
  return TruncChernRep{scale_cochain(a.c2, Rational(-1)), scale_cochain(a.c1w, Rational(-1))};
}

TruncChernRep chern_scale(const TruncChernRep& a, long k) {
  return TruncChernRep{scale_cochain(a.c2, Rational(k)), scale_cochain(a.c1w, Rational(k))};
}

bool rep_eq(const ChartedScheme& X, const TruncChernRep& a, const TruncChernRep& b) {
  for (const auto& [indices, m] : a.c2.entries) {
    const auto it = b.c2.entries.find(indices);
    if (it == b.c2.entries.end()) throw std::invalid_argument("representative shape mismatch");
    if (!equal_mod_ideal_sq(X, m.at(0, 0), it->second.at(0, 0))) return false;
  }
  for (const auto& [indices, m] : a.c1w.entries) {
    const auto it = b.c1w.entries.find(indices);
    if (it == b.c1w.entries.end()) throw std::invalid_argument("representative shape mismatch");
    for (std::size_t v = 0; v < m.nvars(); ++v)
      if (!equal_mod_ideal(X, m.slice(v).at(0, 0), it->second.slice(v).at(0, 0))) return false;
  }
  return true;
}

bool rep_eq(const ChartedScheme& X, const ClassChernRep& a, const ClassChernRep& b) {
  for (const auto& [indices, m] : a.c1w.entries) {
    const auto it = b.c1w.entries.find(indices);
    if (it == b.c1w.entries.end()) throw std::invalid_argument("representative shape mismatch");
    AmbientForm fa{std::vector<LocalFraction>()};
    AmbientForm fb{std::vector<LocalFraction>()};
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      fa.coeffs.push_back(m.slice(v).at(0, 0));
      fb.coeffs.push_back(it->second.slice(v).at(0, 0));
    }
    if (!equal_mod_jacobian(X, fa, fb)) return false;
  }
  return true;
}

bool check_thm44(const LineBundle& L, const LineBundle& M) {
  if (L.complex().scheme() != M.complex().scheme())
    throw std::invalid_argument("line bundles live on different covers");
  const auto& X = *L.complex().scheme();
  const TruncChernRep lhs = build_trunc_chern1(tensor_complex(L.complex(), M.complex()));
  const TruncChernRep rhs =
      chern_add(X, build_trunc_chern1(L.complex()), build_trunc_chern1(M.complex()));
  return rep_eq(X, lhs, rhs);
}

bool check_thm45(const BundleComplex& E) {
  const auto& X = *E.scheme();
  return rep_eq(X, build_trunc_chern1(E), build_trunc_chern1(det_complex(E).complex()));
}

Thm46Report check_thm46(const BundleComplex& E, const BundleComplex& F) {
  if (E.scheme() != F.scheme()) throw std::invalid_argument("complexes live on different covers");
  const auto& X = *E.scheme();
  Thm46Report report;

  const TruncChernRep cE = build_trunc_chern1(E);
  const TruncChernRep cF = build_trunc_chern1(F);

  report.dual_negation = rep_eq(X, build_trunc_chern1(dual_complex(E)), chern_negate(cE));
  report.sum_additivity =
      rep_eq(X, build_trunc_chern1(direct_sum(E, F)), chern_add(X, cE, cF));

  const auto rkE = constant_rank(E);
  const auto rkF = constant_rank(F);
  if (!rkE || !rkF) throw std::invalid_argument("tensor and Hom rules need constant ranks");

  report.tensor_rank_rule = rep_eq(X, build_trunc_chern1(tensor_complex(E, F)),
                                   chern_add(X, chern_scale(cE, *rkF), chern_scale(cF, *rkE)));
  report.hom_rank_rule = rep_eq(X, build_trunc_chern1(hom_complex(E, F)),
                                chern_add(X, chern_scale(cE, -*rkF), chern_scale(cF, *rkE)));

  // det(E ⊗ F) against det(E)^{rk F} ⊗ det(F)^{rk E}, at transition residues.
  const LineBundle lhs = det_complex(tensor_complex(E, F));
  const LineBundle rhs =
      tensor_line(line_power(det_complex(E), *rkF), line_power(det_complex(F), *rkE));
  report.det_of_tensor = true;
  for (std::size_t i = 0; i < E.charts() && report.det_of_tensor; ++i)
    for (std::size_t j = 0; j < E.charts() && report.det_of_tensor; ++j) {
      if (i == j) continue;
      report.det_of_tensor = equal_mod_ideal(X, lhs.lift(i, j), rhs.lift(i, j));
    }
  return report;
}

bool check_det_trace(const SchemePtr& X, const ChartSet& cs, std::size_t m, std::size_t samples,
                     Rng& rng, Exec exec) {
  if (m == 0) throw std::invalid_argument("matrix size must be positive");
  const RingPtr& ring = X->ring();
  const auto& gens = X->ideal();

  auto random_poly = [&](unsigned max_deg) {
    std::vector<Term> terms;
    const int nterms = 1 + static_cast<int>(rng.below(2));
    for (int t = 0; t < nterms; ++t) {
      Monomial mono = Monomial::one(ring->nvars());
      unsigned budget = max_deg;
      for (std::size_t v = 0; v < ring->nvars(); ++v) {
        const unsigned e = static_cast<unsigned>(rng.below(budget + 1));
        mono.exps[v] = e;
        budget -= e;
      }
      terms.push_back(Term{std::move(mono), Rational(rng.int_in(-2, 2), 1)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  };

  std::vector<FractionMatrix> mats;
  mats.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    FractionMatrix mat = FractionMatrix::identity(m, cs, ring);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        Polynomial j = Polynomial::zero(ring);
        for (const auto& g : gens)
          if (rng.chance(2, 3)) j += g * random_poly(2);
        mat.at(r, c) = mat.at(r, c) + frac_of(cs, std::move(j), static_cast<unsigned>(rng.below(2)));
      }
    mats.push_back(std::move(mat));
  }

  std::vector<char> ok(samples, 0);
  for_each_index(samples, exec, [&](std::size_t k) {
    const LocalFraction lhs = mats[k].det();
    const LocalFraction rhs =
        mats[k].trace() - frac_of(cs, Polynomial::constant(ring, Rational(static_cast<long>(m) - 1)));
    ok[k] = equal_mod_ideal_sq(*X, lhs, rhs) ? 1 : 0;
  });
  for (char v : ok)
    if (!v) return false;
  return true;
}

namespace {

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  std::map<std::uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> Polynomial {
    if (mask == 0) return Polynomial::constant(ring, Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
    Polynomial acc = Polynomial::zero(ring);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      if (!m[row][c].is_zero()) {
        const Polynomial term = m[row][c] * self(self, mask & ~(1u << c));
        acc += (sign > 0) ? term : -term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (1u << n) - 1u);
}

}  // namespace

bool check_cofactor_identity(std::size_t m) {
  if (m < 1 || m > 4) throw std::invalid_argument("cofactor identity size out of range");
  std::vector<std::string> vars;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      vars.push_back("z" + std::to_string(u) + "_" + std::to_string(v));
  const RingPtr ring = make_ring(vars);

  std::vector<std::vector<Polynomial>> M(m, std::vector<Polynomial>(m, Polynomial::zero(ring)));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) M[u][v] = Polynomial::variable(ring, u * m + v);

  const Polynomial det = poly_det(M, ring);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      // M^{ab}: entry (a,b) replaced by 1, the rest of row a and column b by 0.
      std::vector<std::vector<Polynomial>> mod = M;
      for (std::size_t c = 0; c < m; ++c) mod[a][c] = Polynomial::zero(ring);
      for (std::size_t r = 0; r < m; ++r) mod[r][b] = Polynomial::zero(ring);
      mod[a][b] = Polynomial::constant(ring, Rational(1));
      if (!(poly_det(mod, ring) == det.derivative(a * m + b))) return false;
    }
  return true;
}

}  // namespace atc
