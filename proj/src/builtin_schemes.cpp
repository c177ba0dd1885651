#include "atc/builtin_schemes.hpp"

namespace atc {

SchemePtr smooth_line_scheme() {
  auto ring = make_ring({"x"});
  std::vector<Chart> charts = {{"U0", parse_poly("x", ring)}, {"U1", parse_poly("x-1", ring)}};
  return std::make_shared<const ChartedScheme>(ring, std::vector<Polynomial>{},
                                               Cover(std::move(charts)));
}

SchemePtr nodal_cubic_scheme() {
  auto ring = make_ring({"x", "y"});
  std::vector<Chart> charts = {{"U0", parse_poly("y+1", ring)},
                               {"U1", parse_poly("y-1", ring)},
                               {"U2", parse_poly("x+2", ring)},
                               {"U3", parse_poly("x-2", ring)}};
  return std::make_shared<const ChartedScheme>(
      ring, std::vector<Polynomial>{parse_poly("y^2-x^3-x^2", ring)}, Cover(std::move(charts)));
}

SchemePtr nonreduced_line_scheme() {
  auto ring = make_ring({"x", "y"});
  std::vector<Chart> charts = {{"U0", parse_poly("y+1", ring)},
                               {"U1", parse_poly("y-1", ring)},
                               {"U2", parse_poly("x+1", ring)}};
  return std::make_shared<const ChartedScheme>(
      ring, std::vector<Polynomial>{parse_poly("x^2", ring)}, Cover(std::move(charts)));
}

BundleComplex smooth_line_bundle(const SchemePtr& X) {
  const auto ring = X->ring();
  std::map<std::pair<std::size_t, std::size_t>, LocalFraction> lifts;
  lifts.emplace(std::make_pair(0, 1), frac_of(X->pair(0, 1), parse_poly("x", ring)));
  // 1/x written over the pair denominator x*(x-1).
  lifts.emplace(std::make_pair(1, 0), frac_of(X->pair(0, 1), parse_poly("x-1", ring), 1));
  return make_line_bundle(X, lifts).complex();
}

BundleComplex smooth_two_term(const SchemePtr& X) {
  const auto ring = X->ring();
  BundleComplex E(X, 0, 1, {{1, 1}, {1, 1}});
  const ChartSet p01 = X->pair(0, 1);
  auto one = [&](const ChartSet& cs) {
    return frac_of(cs, Polynomial::constant(ring, Rational(1)));
  };
  FractionMatrix m(1, 1, p01, ring);
  m.at(0, 0) = one(p01);
  E.set_transition(0, 1, 0, m);
  E.set_transition(1, 0, 0, m);
  FractionMatrix t01(1, 1, p01, ring), t10(1, 1, p01, ring);
  t01.at(0, 0) = frac_of(p01, parse_poly("x", ring));
  t10.at(0, 0) = frac_of(p01, parse_poly("x-1", ring), 1);
  E.set_transition(0, 1, 1, std::move(t01));
  E.set_transition(1, 0, 1, std::move(t10));
  FractionMatrix d0(1, 1, X->single(0), ring), d1(1, 1, X->single(1), ring);
  d0.at(0, 0) = frac_of(X->single(0), parse_poly("x", ring));
  d1.at(0, 0) = one(X->single(1));
  E.set_differential(0, 0, std::move(d0));
  E.set_differential(1, 0, std::move(d1));
  return E;
}

BundleComplex nodal_line_bundle(const SchemePtr& X) {
  const auto ring = X->ring();
  std::map<std::pair<std::size_t, std::size_t>, LocalFraction> lifts;
  const std::size_t n = X->cover().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        lifts.emplace(std::make_pair(i, j),
                      frac_of(X->pair(i, j), Polynomial::constant(ring, Rational(1))));
  lifts.at(std::make_pair(1, 0)) = frac_of(X->pair(0, 1), parse_poly("y^2-x^3-x^2+1", ring));
  return make_line_bundle(X, lifts).complex();
}

BundleComplex nonreduced_tower(const SchemePtr& X) {
  const auto ring = X->ring();
  const std::size_t n = X->cover().size();
  BundleComplex E(X, 0, 2, std::vector<std::vector<std::size_t>>(n, {1, 1, 1}));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      FractionMatrix m(1, 1, X->pair(i, j), ring);
      m.at(0, 0) = frac_of(X->pair(i, j), Polynomial::constant(ring, Rational(1)));
      for (int s = 0; s <= 2; ++s) E.set_transition(i, j, s, m);
    }
    FractionMatrix d(1, 1, X->single(i), ring);
    d.at(0, 0) = frac_of(X->single(i), parse_poly("x", ring));
    E.set_differential(i, 0, d);
    E.set_differential(i, 1, d);
  }
  return E;
}

}  // namespace atc
