#include "doctest.h"

#include <algorithm>

#include "atc/module_groebner.hpp"
#include "atc/rng.hpp"

using namespace atc;

namespace {

Polynomial random_poly(const RingPtr& ring, Rng& rng, unsigned max_deg = 3, int max_terms = 4) {
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
    terms.push_back(Term{std::move(m), Rational(rng.int_in(-3, 3), 1)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

bool same_basis(const GroebnerBasis& a, const GroebnerBasis& b) {
  return a.gens.size() == b.gens.size() &&
         std::equal(a.gens.begin(), a.gens.end(), b.gens.begin());
}

}  // namespace

TEST_CASE("buchberger small ideals") {
  auto ring = make_ring({"x", "y"});
  const auto ord = MonomialOrder::degrevlex(2);

  auto gb1 = buchberger({parse_poly("x", ring)}, ord);
  REQUIRE(gb1.gens.size() == 1);
  CHECK(gb1.gens[0] == parse_poly("x", ring));

  auto gb2 = buchberger({parse_poly("1", ring)}, ord);
  REQUIRE(gb2.gens.size() == 1);
  CHECK(gb2.gens[0].is_one());

  auto gb_empty = buchberger({}, ord);
  CHECK(gb_empty.gens.empty());

  // spoly(x^2+y^2, xy) = y^3 and everything else reduces to zero.
  auto gb3 = buchberger({parse_poly("x^2+y^2", ring), parse_poly("x*y", ring)}, ord);
  REQUIRE(gb3.gens.size() == 3);
  CHECK(in_ideal(parse_poly("y^3", ring), gb3));
  CHECK(in_ideal(parse_poly("x^2+y^2", ring), gb3));
  CHECK(in_ideal(parse_poly("x*y", ring), gb3));
  CHECK(!in_ideal(parse_poly("x", ring), gb3));
  const std::vector<std::string> expected = {"x*y", "x^2+y^2", "y^3"};
  std::vector<std::string> got;
  for (const auto& g : gb3.gens) got.push_back(g.str());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("normal form examples") {
  auto ring = make_ring({"x", "y"});
  const auto ord = MonomialOrder::degrevlex(2);
  auto gb = buchberger({parse_poly("x^2+y^2", ring), parse_poly("x*y", ring)}, ord);
  CHECK(normal_form(parse_poly("y^3 + x", ring), gb) == parse_poly("x", ring));

  auto g = parse_poly("y^2-x^3-x^2", ring);
  auto gbg = buchberger({g}, ord);
  CHECK(normal_form(g, gbg).is_zero());

  auto gbx = buchberger({parse_poly("x", ring)}, ord);
  CHECK(normal_form(parse_poly("1", ring), gbx).is_one());

  // Idempotence.
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    const Polynomial p = random_poly(ring, rng);
    const Polynomial r = normal_form(p, gb);
    CHECK(normal_form(r, gb) == r);
  }
}

TEST_CASE("elimination") {
  auto ring = make_ring({"t", "x"});
  const auto ord = MonomialOrder::elim(2, {0});
  auto gb = buchberger({parse_poly("t - x", ring), parse_poly("t^2", ring)}, ord);
  auto elim = eliminate(gb, {0});
  REQUIRE(elim.size() == 1);
  CHECK(elim[0] == parse_poly("x^2", ring));

  auto unit = buchberger({parse_poly("1", ring)}, ord);
  auto elim_unit = eliminate(unit, {0});
  REQUIRE(elim_unit.size() == 1);
  CHECK(elim_unit[0].is_one());

  auto gb_t = buchberger({parse_poly("t", ring)}, ord);
  CHECK(eliminate(gb_t, {0}).empty());

  auto wrong = buchberger({parse_poly("t", ring)}, MonomialOrder::degrevlex(2));
  CHECK_THROWS(eliminate(wrong, {0}));
}

TEST_CASE("saturation hand answers") {
  auto ring = make_ring({"x", "y"});
  const auto ord = MonomialOrder::degrevlex(2);

  auto s1 = saturate({parse_poly("x^2", ring)}, parse_poly("x", ring));
  auto gb1 = buchberger(s1, ord);
  CHECK(in_ideal(parse_poly("1", ring), gb1));

  auto s2 = saturate({parse_poly("x^2*y", ring)}, parse_poly("x", ring));
  auto gb2 = buchberger(s2, ord);
  REQUIRE(gb2.gens.size() == 1);
  CHECK(gb2.gens[0] == parse_poly("y", ring));

  const Polynomial g = parse_poly("y^2-x^3-x^2", ring);
  auto s3 = saturate({g}, parse_poly("1", ring));
  auto gb3 = buchberger(s3, ord);
  REQUIRE(gb3.gens.size() == 1);
  CHECK(gb3.gens[0] == g.scaled(Rational(-1)));  // reduced bases are monic
  CHECK(same_basis(gb3, buchberger({g}, ord)));

  auto s0 = saturate({}, parse_poly("x", ring));
  CHECK(buchberger(s0, ord).gens.empty());
}

TEST_CASE("saturation properties") {
  auto ring = make_ring({"x", "y"});
  const auto ord = MonomialOrder::degrevlex(2);
  Rng rng(2024);
  for (int i = 0; i < 10; ++i) {
    std::vector<Polynomial> gens = {random_poly(ring, rng), random_poly(ring, rng)};
    Polynomial f = random_poly(ring, rng, 2, 2);
    if (f.is_zero()) f = parse_poly("x", ring);
    auto sat = saturate(gens, f);
    auto sat_gb = buchberger(sat, ord);
    // J is contained in J : f^inf.
    for (const auto& g : gens) CHECK(in_ideal(g, sat_gb));
    // Idempotence, compared as reduced bases.
    auto sat2_gb = buchberger(saturate(sat, f), ord);
    CHECK(same_basis(sat_gb, sat2_gb));
  }
}

TEST_CASE("reduced bases are order-deterministic") {
  auto ring = make_ring({"x", "y", "z"});
  const auto ord = MonomialOrder::degrevlex(3);
  Rng rng(5150);
  for (int i = 0; i < 20; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(ring, rng));
    auto gb = buchberger(gens, ord);
    std::vector<Polynomial> permuted = {gens[2], gens[0], gens[1]};
    auto gb_perm = buchberger(permuted, ord);
    CHECK(same_basis(gb, gb_perm));
  }
}

TEST_CASE("membership agrees with transcript reconstruction") {
  auto ring = make_ring({"x", "y", "z"});
  const auto ord = MonomialOrder::degrevlex(3);
  Rng rng(31337);
  for (int i = 0; i < 50; ++i) {
    std::vector<Polynomial> gens;
    const int ngens = 1 + static_cast<int>(rng.below(3));
    for (int k = 0; k < ngens; ++k) gens.push_back(random_poly(ring, rng));
    auto gb = buchberger(gens, ord);

    // A known combination must reduce to zero and reconstruct exactly.
    Polynomial combo = Polynomial::zero(ring);
    for (const auto& g : gens) combo += random_poly(ring, rng, 2, 2) * g;
    auto t = normal_form_with_transcript(combo, gb);
    CHECK(t.remainder.is_zero());
    Polynomial rebuilt = t.remainder;
    for (std::size_t k = 0; k < gb.gens.size(); ++k) rebuilt += t.quotients[k] * gb.gens[k];
    CHECK(rebuilt == combo);

    // Arbitrary input still reconstructs.
    const Polynomial p = random_poly(ring, rng);
    auto tp = normal_form_with_transcript(p, gb);
    Polynomial back = tp.remainder;
    for (std::size_t k = 0; k < gb.gens.size(); ++k) back += tp.quotients[k] * gb.gens[k];
    CHECK(back == p);
    CHECK(normal_form(p, gb).is_zero() == in_ideal(p, gb));
  }
}

TEST_CASE("module groebner basics") {
  auto ring = make_ring({"x", "y"});
  ModuleOrder ord{MonomialOrder::degrevlex(2), ModulePriority::position_over_term};

  auto x = parse_poly("x", ring);
  auto y = parse_poly("y", ring);
  auto zero = Polynomial::zero(ring);
  auto one = parse_poly("1", ring);

  auto mgb1 = module_buchberger({ModuleVector{{x, zero}}}, ord);
  REQUIRE(mgb1.gens.size() == 1);
  CHECK(mgb1.gens[0] == ModuleVector{{x, zero}});

  auto full = module_buchberger({ModuleVector{{one, zero}}, ModuleVector{{zero, one}}}, ord);
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    ModuleVector v{{random_poly(ring, rng), random_poly(ring, rng)}};
    CHECK(module_member(v, full));
  }

  auto span = module_buchberger({ModuleVector{{x, y}}, ModuleVector{{y, x}}}, ord);
  CHECK(module_member(ModuleVector::zero(ring, 2), span));
  CHECK(module_member(ModuleVector{{parse_poly("x^2-y^2", ring), zero}}, span));
  CHECK(!module_member(ModuleVector{{one, zero}}, span));
  CHECK_THROWS(module_member(ModuleVector{{one}}, span));
}

TEST_CASE("module saturation") {
  auto ring = make_ring({"x", "y"});
  ModuleOrder ord{MonomialOrder::degrevlex(2), ModulePriority::position_over_term};
  auto x = parse_poly("x", ring);
  auto zero = Polynomial::zero(ring);

  auto sat1 = saturate_module({ModuleVector{{x * x}}}, x);
  auto mgb1 = module_buchberger(sat1, ord);
  CHECK(module_member(ModuleVector{{parse_poly("1", ring)}}, mgb1));

  CHECK(saturate_module({}, x).empty());

  auto sat2 = saturate_module(
      {ModuleVector{{x * x, zero}}, ModuleVector{{zero, x}}}, x);
  auto mgb2 = module_buchberger(sat2, ord);
  CHECK(module_member(ModuleVector::basis(ring, 2, 0), mgb2));
  CHECK(module_member(ModuleVector::basis(ring, 2, 1), mgb2));
}

TEST_CASE("rank-1 module membership matches ideal membership") {
  auto ring = make_ring({"x", "y"});
  ModuleOrder mord{MonomialOrder::degrevlex(2), ModulePriority::position_over_term};
  const auto ord = MonomialOrder::degrevlex(2);
  Rng rng(616);
  for (int i = 0; i < 50; ++i) {
    std::vector<Polynomial> gens = {random_poly(ring, rng), random_poly(ring, rng)};
    auto gb = buchberger(gens, ord);
    std::vector<ModuleVector> mgens;
    for (const auto& g : gens) mgens.push_back(ModuleVector{{g}});
    auto mgb = module_buchberger(mgens, mord);
    const Polynomial p = random_poly(ring, rng);
    CHECK(in_ideal(p, gb) == module_member(ModuleVector{{p}}, mgb));
  }
}
