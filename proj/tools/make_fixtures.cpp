// Regenerates the bundled problem files under data/ from the builtin
// definitions plus one seeded rank-2 complex. Run from the repository root:
//   build/tools/make_fixtures data
#include <fstream>
#include <iostream>

#include "atc/builtin_schemes.hpp"
#include "atc/problem_io.hpp"
#include "atc/random_complexes.hpp"

using namespace atc;

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";

  auto write = [&](const std::string& name, const Problem& p) {
    const std::string path = dir + "/" + name;
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return false;
    }
    out << problem_to_json(p).dump(2) << "\n";
    std::cout << "wrote " << path << "\n";
    return true;
  };

  bool ok = true;
  {
    auto X = smooth_line_scheme();
    Problem p{X, {}};
    p.complexes.emplace("L", smooth_line_bundle(X));
    p.complexes.emplace("E01", smooth_two_term(X));
    p.complexes.emplace("O", trivial_line_bundle(X).complex());
    ok = ok && write("smooth_p1cover.json", p);
  }
  {
    auto X = nodal_cubic_scheme();
    Problem p{X, {}};
    p.complexes.emplace("L", nodal_line_bundle(X));
    p.complexes.emplace("O", trivial_line_bundle(X).complex());
    Rng rng(600613);
    GenOptions opt;
    opt.min_degrees = 2;
    opt.max_degrees = 2;
    opt.max_rank = 2;
    p.complexes.emplace("E2", random_valid_complex(X, rng, opt));
    ok = ok && write("nodal_cubic.json", p);
  }
  {
    auto X = nonreduced_line_scheme();
    Problem p{X, {}};
    p.complexes.emplace("T", nonreduced_tower(X));
    p.complexes.emplace("O", trivial_line_bundle(X).complex());
    ok = ok && write("nonreduced_line.json", p);
  }
  return ok ? 0 : 1;
}
