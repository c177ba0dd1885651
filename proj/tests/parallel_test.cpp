#include "doctest.h"

#include <thread>

#include "atc/builtin_schemes.hpp"
#include "atc/chern.hpp"
#include "atc/random_complexes.hpp"

using namespace atc;

namespace {

bool same_failures(const ChainMapReport& a, const ChainMapReport& b) {
  if (a.units != b.units || a.failures.size() != b.failures.size()) return false;
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    const auto& x = a.failures[i];
    const auto& y = b.failures[i];
    if (x.summand != y.summand || x.s != y.s || x.charts != y.charts || x.row != y.row ||
        x.col != y.col)
      return false;
  }
  return true;
}

bool same_failures(const ValidationReport& a, const ValidationReport& b) {
  if (a.units != b.units || a.failures.size() != b.failures.size()) return false;
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    const auto& x = a.failures[i];
    const auto& y = b.failures[i];
    if (x.condition != y.condition || x.s != y.s || x.indices != y.indices || x.row != y.row ||
        x.col != y.col || x.value != y.value)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("serial and parallel verification agree on a clean complex") {
  auto X = nodal_cubic_scheme();
  Rng rng(240240);
  const BundleComplex E = random_valid_complex(X, rng);
  CHECK(same_failures(validate_complex(E, Exec::serial), validate_complex(E, Exec::parallel)));
  const auto rep = build_truncated_atiyah(E);
  const auto rs = verify_truncated_atiyah(E, rep, Exec::serial);
  const auto rp = verify_truncated_atiyah(E, rep, Exec::parallel);
  CHECK(rs.ok());
  CHECK(same_failures(rs, rp));
}

TEST_CASE("serial and parallel verification agree on failures") {
  auto X = nodal_cubic_scheme();
  auto E = nodal_line_bundle(X);
  // Corrupt a lift so both paths must report identical located failures.
  FractionMatrix bad(1, 1, X->pair(0, 2), X->ring());
  bad.at(0, 0) = frac_of(X->pair(0, 2), parse_poly("1+x", X->ring()));
  E.set_transition(0, 2, 0, std::move(bad));
  const auto vs = validate_complex(E, Exec::serial);
  const auto vp = validate_complex(E, Exec::parallel);
  CHECK(!vs.ok());
  CHECK(same_failures(vs, vp));

  auto L = nodal_line_bundle(X);
  auto rep = build_truncated_atiyah(L);
  for (auto& [s, c] : rep.t2) c = scale_cochain(c, Rational(-1));
  const auto fs = verify_truncated_atiyah(L, rep, Exec::serial);
  const auto fp = verify_truncated_atiyah(L, rep, Exec::parallel);
  CHECK(!fs.ok());
  CHECK(same_failures(fs, fp));
}

TEST_CASE("saturation cache is a compute-once table under concurrency") {
  auto X = nodal_cubic_scheme();
  // Hammer the cache from several threads; all answers must agree.
  std::vector<std::thread> workers;
  std::vector<char> results(8, 0);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      const Polynomial g = X->ideal()[0];
      const ChartSet cs = X->chart_set({0, 1, 2, 3});
      results[static_cast<std::size_t>(t)] =
          (X->num_in_ideal(g, cs) && !X->num_in_ideal_sq(g, cs) && !X->chart_empty(cs)) ? 1 : 0;
    });
  for (auto& w : workers) w.join();
  for (char r : results) CHECK(r == 1);
}

TEST_CASE("det-trace sampling is exec-independent") {
  auto X = nonreduced_line_scheme();
  Rng rng1(606), rng2(606);
  const bool serial = check_det_trace(X, X->single(0), 3, 6, rng1, Exec::serial);
  const bool parallel = check_det_trace(X, X->single(0), 3, 6, rng2, Exec::parallel);
  CHECK(serial == parallel);
  CHECK(serial);
}
