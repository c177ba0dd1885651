#include "doctest.h"

#include <fstream>

#include "atc/builtin_schemes.hpp"
#include "atc/random_complexes.hpp"
#include "atc/report.hpp"

using namespace atc;

#ifndef ATC_DATA_DIR
#define ATC_DATA_DIR "data"
#endif

namespace {

const std::string kData = ATC_DATA_DIR;

Json slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  Json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("bundled fixtures parse and validate") {
  {
    const Problem p = parse_problem(kData + "/smooth_p1cover.json");
    CHECK(p.scheme->cover().size() == 2);
    CHECK(p.scheme->ideal().empty());
    REQUIRE(p.complexes.count("L") == 1);
    CHECK(validate_complex(p.complexes.at("L")).ok());
    CHECK(validate_complex(p.complexes.at("E01")).ok());
  }
  {
    const Problem p = parse_problem(kData + "/nodal_cubic.json");
    CHECK(p.scheme->cover().size() == 4);
    REQUIRE(p.scheme->ideal().size() == 1);
    CHECK(p.scheme->ideal()[0] == parse_poly("y^2-x^3-x^2", p.scheme->ring()));
    for (const auto& [name, E] : p.complexes) CHECK(validate_complex(E).ok());
    // The fixture matches the builtin definition.
    auto X = nodal_cubic_scheme();
    auto L = nodal_line_bundle(X);
    const auto& Lf = p.complexes.at("L");
    CHECK(equal_ring(Lf.transition(1, 0, 0).at(0, 0), L.transition(1, 0, 0).at(0, 0)));
  }
  {
    const Problem p = parse_problem(kData + "/nonreduced_line.json");
    CHECK(p.scheme->cover().size() == 3);
    for (const auto& [name, E] : p.complexes) CHECK(validate_complex(E).ok());
  }
}

TEST_CASE("fixtures stay in sync with their generators") {
  {
    auto X = smooth_line_scheme();
    Problem p{X, {}};
    p.complexes.emplace("L", smooth_line_bundle(X));
    p.complexes.emplace("E01", smooth_two_term(X));
    p.complexes.emplace("O", trivial_line_bundle(X).complex());
    CHECK(problem_to_json(p) == slurp(kData + "/smooth_p1cover.json"));
  }
  {
    auto X = nonreduced_line_scheme();
    Problem p{X, {}};
    p.complexes.emplace("T", nonreduced_tower(X));
    p.complexes.emplace("O", trivial_line_bundle(X).complex());
    CHECK(problem_to_json(p) == slurp(kData + "/nonreduced_line.json"));
  }
}

TEST_CASE("schema errors are located") {
  auto X = smooth_line_scheme();
  Problem p{X, {}};
  p.complexes.emplace("L", smooth_line_bundle(X));
  Json good = problem_to_json(p);

  {
    Json bad = good;
    bad.erase("charts");
    CHECK_THROWS_AS(parse_problem_json(bad), SchemaError);
  }
  {
    Json bad = good;
    bad["ideal"] = Json::array({"x +"});
    CHECK_THROWS_WITH_AS(parse_problem_json(bad), doctest::Contains("$.ideal"), SchemaError);
  }
  {
    Json bad = good;
    bad["complexes"]["L"]["transitions"].erase("U1->U0@0");
    CHECK_THROWS_WITH_AS(parse_problem_json(bad), doctest::Contains("transition"), SchemaError);
  }
  {
    Json bad = good;
    bad["complexes"]["L"]["ranks"]["U0"]["0"] = 2;  // shape mismatch with the matrices
    CHECK_THROWS_AS(parse_problem_json(bad), SchemaError);
  }
  {
    Json bad = good;
    bad["charts"][0]["name"] = "U1";  // duplicate
    CHECK_THROWS_AS(parse_problem_json(bad), SchemaError);
  }
}

TEST_CASE("corrupted lift is reported with a locator, not a schema error") {
  const Problem p = parse_problem(kData + "/nodal_cubic.json");
  Json j = problem_to_json(p);
  // Break M~_{U0->U1} mod J by adding 1 to the numerator.
  auto& cell = j["complexes"]["L"]["transitions"]["U0->U1@0"][0][0];
  cell["num"] = std::string(cell["num"].get<std::string>()) + "+1";
  const Problem corrupted = parse_problem_json(j);
  const auto report = validate_complex(corrupted.complexes.at("L"));
  CHECK(!report.ok());
  bool located = false;
  for (const auto& f : report.failures)
    located = located || (f.condition == 'a' && f.indices == std::vector<std::size_t>{0, 1});
  CHECK(located);
}

TEST_CASE("problem round-trips through JSON") {
  auto X = nodal_cubic_scheme();
  Rng rng(171717);
  Problem p{X, {}};
  p.complexes.emplace("E", random_valid_complex(X, rng));
  const Problem q = parse_problem_json(problem_to_json(p));
  const auto& E = p.complexes.at("E");
  const auto& F = q.complexes.at("E");
  REQUIRE(E.s_min() == F.s_min());
  REQUIRE(E.s_max() == F.s_max());
  for (std::size_t i = 0; i < E.charts(); ++i)
    for (std::size_t k = 0; k < E.charts(); ++k) {
      if (i == k) continue;
      for (int s = E.s_min(); s <= E.s_max(); ++s)
        CHECK(matrix_equal_ring(E.transition(i, k, s), F.transition(i, k, s)));
    }
  for (std::size_t i = 0; i < E.charts(); ++i)
    for (int s = E.s_min(); s < E.s_max(); ++s)
      CHECK(matrix_equal_ring(E.differential(i, s), F.differential(i, s)));
}

TEST_CASE("atiyah representative round-trips through JSON") {
  const Problem p = parse_problem(kData + "/nodal_cubic.json");
  const auto& E = p.complexes.at("E2");
  const auto rep = build_truncated_atiyah(E);
  const Json j = to_json(*p.scheme, rep);
  const auto back = truncated_atiyah_from_json(E, j);
  CHECK(rep_eq(E, rep, back));
  CHECK(verify_truncated_atiyah(E, back).ok());
}

TEST_CASE("chern representative round-trips through JSON") {
  const Problem p = parse_problem(kData + "/nodal_cubic.json");
  const auto& E = p.complexes.at("L");
  const auto rep = build_trunc_chern1(E);
  const auto back = trunc_chern_from_json(p.scheme, to_json(*p.scheme, rep));
  CHECK(rep_eq(*p.scheme, rep, back));
}

TEST_CASE("reports serialize deterministically") {
  const Problem p = parse_problem(kData + "/nodal_cubic.json");
  const auto& E = p.complexes.at("L");
  const auto r1 = validate_complex(E);
  const auto r2 = validate_complex(E);
  CHECK(to_json(r1).dump() == to_json(r2).dump());
  const Json a = to_json(*p.scheme, build_trunc_chern1(E));
  const Json b = to_json(*p.scheme, build_trunc_chern1(E));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("io errors") {
  CHECK_THROWS_AS(parse_problem(kData + "/does_not_exist.json"), IoError);
}
