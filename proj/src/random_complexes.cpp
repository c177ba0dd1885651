#include "atc/random_complexes.hpp"

namespace atc {

namespace {

Polynomial random_poly(const RingPtr& ring, Rng& rng, unsigned max_deg, int max_terms) {
  std::vector<Term> terms;
  const int nterms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  for (int t = 0; t < nterms; ++t) {
    Monomial m = Monomial::one(ring->nvars());
    unsigned budget = max_deg;
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      const unsigned e = static_cast<unsigned>(rng.below(budget + 1));
      m.exps[v] = e;
      budget -= e;
    }
    terms.push_back(Term{std::move(m), Rational(rng.int_in(-2, 2), 1)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

// Invertible frame on one chart, tracked together with its exact inverse.
struct Frame {
  FractionMatrix g;
  FractionMatrix ginv;
};

Frame random_frame(const SchemePtr& X, std::size_t chart, std::size_t rank, Rng& rng) {
  const RingPtr& ring = X->ring();
  const ChartSet cs = X->single(chart);
  Frame f{FractionMatrix::identity(rank, cs, ring), FractionMatrix::identity(rank, cs, ring)};
  const int ops = 1 + static_cast<int>(rng.below(3));
  for (int k = 0; k < ops; ++k) {
    if (rank >= 2 && rng.chance(1, 2)) {
      // Elementary row operation E_{uv}(c); inverse is E_{uv}(-c).
      std::size_t u = rng.below(rank);
      std::size_t v = rng.below(rank);
      while (v == u) v = rng.below(rank);
      const LocalFraction c = frac_of(cs, random_poly(ring, rng, 1, 2));
      FractionMatrix e = FractionMatrix::identity(rank, cs, ring);
      e.at(u, v) = c;
      FractionMatrix einv = FractionMatrix::identity(rank, cs, ring);
      einv.at(u, v) = -c;
      f.g = e * f.g;
      f.ginv = f.ginv * einv;
    } else {
      // Unit scaling q * f^(+-1) of one row; exactly invertible.
      const std::size_t u = rng.below(rank);
      const long q = rng.chance(1, 2) ? 1 : 2;
      const bool up = rng.chance(1, 2);
      LocalFraction unit = up ? frac_of(cs, cs.f.scaled(Rational(q)), 0)
                              : frac_of(cs, Polynomial::constant(ring, Rational(q)), 1);
      LocalFraction inv = up ? frac_of(cs, Polynomial::constant(ring, Rational(1, q)), 1)
                             : frac_of(cs, cs.f.scaled(Rational(1, q)), 0);
      FractionMatrix d = FractionMatrix::identity(rank, cs, ring);
      d.at(u, u) = unit;
      FractionMatrix dinv = FractionMatrix::identity(rank, cs, ring);
      dinv.at(u, u) = inv;
      f.g = d * f.g;
      f.ginv = f.ginv * dinv;
    }
  }
  return f;
}

FractionMatrix j_perturbation(const SchemePtr& X, const ChartSet& cs, std::size_t rows,
                              std::size_t cols, Rng& rng, bool square) {
  FractionMatrix p(rows, cols, cs, X->ring());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.chance(1, 2))
        p.at(r, c) = frac_of(cs, random_ideal_element(X, rng, square),
                             static_cast<unsigned>(rng.below(2)));
  return p;
}

}  // namespace

Polynomial random_ideal_element(const SchemePtr& X, Rng& rng, bool square) {
  const RingPtr& ring = X->ring();
  const auto& gens = X->ideal();
  Polynomial out = Polynomial::zero(ring);
  if (gens.empty()) return out;
  const Polynomial& a = gens[rng.below(gens.size())];
  const Polynomial& b = gens[rng.below(gens.size())];
  const Polynomial base = square ? a * b : a;
  return base * random_poly(ring, rng, 1, 2);
}

BundleComplex random_valid_complex(const SchemePtr& X, Rng& rng, const GenOptions& opt) {
  const RingPtr& ring = X->ring();
  const std::size_t ncharts = X->cover().size();
  const int ndeg =
      opt.min_degrees + static_cast<int>(rng.below(
                            static_cast<std::uint64_t>(opt.max_degrees - opt.min_degrees + 1)));
  const int s_min = static_cast<int>(rng.int_in(-1, 0));
  const int s_max = s_min + ndeg - 1;

  std::vector<std::size_t> rank_of_deg(static_cast<std::size_t>(ndeg));
  for (auto& r : rank_of_deg) r = 1 + rng.below(opt.max_rank);

  BundleComplex E(X, s_min, s_max,
                  std::vector<std::vector<std::size_t>>(ncharts, rank_of_deg));

  // Constant block-nilpotent differential shape: top-right block only, so
  // consecutive differentials compose to zero exactly.
  std::vector<std::size_t> split(static_cast<std::size_t>(ndeg));
  for (int s = 0; s < ndeg; ++s) split[static_cast<std::size_t>(s)] = rank_of_deg[static_cast<std::size_t>(s)] / 2;
  std::vector<std::vector<std::vector<Rational>>> dconst;  // [deg][row][col]
  for (int d = 0; d + 1 < ndeg; ++d) {
    const std::size_t rows = rank_of_deg[static_cast<std::size_t>(d) + 1];
    const std::size_t cols = rank_of_deg[static_cast<std::size_t>(d)];
    const std::size_t a_to = split[static_cast<std::size_t>(d) + 1];
    const std::size_t a_from = split[static_cast<std::size_t>(d)];
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t r = 0; r < a_to; ++r)
      for (std::size_t c = a_from; c < cols; ++c) m[r][c] = Rational(rng.int_in(-2, 2));
    dconst.push_back(std::move(m));
  }

  // Per-chart frames, one per degree.
  std::vector<std::vector<Frame>> frames(ncharts);
  for (std::size_t i = 0; i < ncharts; ++i)
    for (int s = 0; s < ndeg; ++s)
      frames[i].push_back(random_frame(X, i, rank_of_deg[static_cast<std::size_t>(s)], rng));

  for (std::size_t i = 0; i < ncharts; ++i) {
    for (std::size_t j = 0; j < ncharts; ++j) {
      if (i == j) continue;
      const ChartSet cs = X->pair(i, j);
      for (int s = s_min; s <= s_max; ++s) {
        const std::size_t d = static_cast<std::size_t>(s - s_min);
        FractionMatrix m = restrict_matrix(*X, frames[i][d].g, cs) *
                           restrict_matrix(*X, frames[j][d].ginv, cs);
        if (opt.perturb_transitions) {
          const bool square = opt.transitions_j2_only || (s % 2 != 0);
          m = m + j_perturbation(X, cs, m.rows(), m.cols(), rng, square);
        }
        E.set_transition(i, j, s, std::move(m));
      }
    }
    for (int s = s_min; s < s_max; ++s) {
      const std::size_t d = static_cast<std::size_t>(s - s_min);
      const ChartSet cs = X->single(i);
      FractionMatrix dmat(rank_of_deg[d + 1], rank_of_deg[d], cs, ring);
      for (std::size_t r = 0; r < dmat.rows(); ++r)
        for (std::size_t c = 0; c < dmat.cols(); ++c)
          dmat.at(r, c) = frac_of(cs, Polynomial::constant(ring, dconst[d][r][c]));
      FractionMatrix lifted = frames[i][d + 1].g * dmat * frames[i][d].ginv;
      if (opt.perturb_differentials)
        lifted = lifted + j_perturbation(X, cs, lifted.rows(), lifted.cols(), rng, false);
      E.set_differential(i, s, std::move(lifted));
    }
  }
  return E;
}

BundleComplex relift(const BundleComplex& E, Rng& rng) {
  const SchemePtr& X = E.scheme();
  BundleComplex out = E;
  for (std::size_t i = 0; i < E.charts(); ++i) {
    for (std::size_t j = 0; j < E.charts(); ++j) {
      if (i == j) continue;
      for (int s = E.s_min(); s <= E.s_max(); ++s) {
        if (E.rank(i, s) == 0 || E.rank(j, s) == 0) continue;
        FractionMatrix m = E.transition(i, j, s);
        out.set_transition(i, j, s,
                           m + j_perturbation(X, m.cs(), m.rows(), m.cols(), rng, false));
      }
    }
    for (int s = E.s_min(); s < E.s_max(); ++s) {
      FractionMatrix d = E.differential(i, s);
      if (d.rows() == 0 || d.cols() == 0) continue;
      out.set_differential(i, s, d + j_perturbation(X, d.cs(), d.rows(), d.cols(), rng, false));
    }
  }
  return out;
}

LineBundle random_line_bundle(const SchemePtr& X, Rng& rng, bool exact_inverses) {
  const std::size_t ncharts = X->cover().size();
  std::vector<Frame> units;
  for (std::size_t i = 0; i < ncharts; ++i) units.push_back(random_frame(X, i, 1, rng));

  std::map<std::pair<std::size_t, std::size_t>, LocalFraction> lifts;
  for (std::size_t i = 0; i < ncharts; ++i)
    for (std::size_t j = 0; j < ncharts; ++j) {
      if (i == j) continue;
      const ChartSet cs = X->pair(i, j);
      LocalFraction v = restrict_fraction(*X, units[i].g.at(0, 0), cs) *
                        restrict_fraction(*X, units[j].ginv.at(0, 0), cs);
      if (!exact_inverses)
        v = v + frac_of(cs, random_ideal_element(X, rng, false),
                        static_cast<unsigned>(rng.below(2)));
      lifts.emplace(std::make_pair(i, j), std::move(v));
    }
  return make_line_bundle(X, lifts);
}

}  // namespace atc
