#include <iostream>

#include "CLI11.hpp"
#include "atc/builtin_schemes.hpp"
#include "atc/demo.hpp"
#include "atc/random_complexes.hpp"
#include "atc/report.hpp"

namespace {

using namespace atc;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct GlobalOpts {
  std::string format = "text";
  std::uint64_t seed = 20250808;
  bool json() const { return format == "json"; }
};

const BundleComplex& pick_complex(const Problem& p, const std::string& name) {
  const auto it = p.complexes.find(name);
  if (it == p.complexes.end())
    throw SchemaError("no complex named '" + name + "' in the problem file");
  return it->second;
}

void emit(const GlobalOpts& g, const Json& j, const std::string& text) {
  if (g.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_validate(const GlobalOpts& g, const std::string& file, const std::string& name) {
  const Problem p = parse_problem(file);
  bool all_ok = true;
  Json jout;
  jout["command"] = "validate";
  jout["file"] = file;
  Json per = Json::object();
  std::ostringstream text;
  for (const auto& [cname, E] : p.complexes) {
    if (!name.empty() && cname != name) continue;
    const ValidationReport r = validate_complex(E);
    all_ok = all_ok && r.ok();
    per[cname] = to_json(r);
    text << "validate " << cname << ": ";
    print_text(text, r);
  }
  if (!name.empty() && per.empty())
    throw SchemaError("no complex named '" + name + "' in the problem file");
  jout["complexes"] = std::move(per);
  jout["status"] = all_ok ? "pass" : "fail";
  emit(g, jout, text.str());
  return all_ok ? kExitPass : kExitCheckFailed;
}

int cmd_atiyah(const GlobalOpts& g, const std::string& file, const std::string& name,
               bool classical) {
  const Problem p = parse_problem(file);
  const BundleComplex& E = pick_complex(p, name);
  const ValidationReport v = validate_complex(E);
  if (!v.ok()) {
    std::ostringstream text;
    text << "validate " << name << ": ";
    print_text(text, v);
    emit(g, to_json(v), text.str());
    return kExitCheckFailed;
  }
  Json jout;
  std::ostringstream text;
  if (classical) {
    const auto rep = build_classical_atiyah(E);
    jout = to_json(*p.scheme, rep);
    text << "classical atiyah representative of " << name << ":\n" << jout.dump(2) << "\n";
  } else {
    const auto rep = build_truncated_atiyah(E);
    jout = to_json(*p.scheme, rep);
    text << "truncated atiyah representative of " << name << ":\n" << jout.dump(2) << "\n";
  }
  jout["complex"] = name;
  emit(g, jout, text.str());
  return kExitPass;
}

int cmd_chern(const GlobalOpts& g, const std::string& file, const std::string& name,
              bool classical) {
  const Problem p = parse_problem(file);
  const BundleComplex& E = pick_complex(p, name);
  const ValidationReport v = validate_complex(E);
  if (!v.ok()) {
    std::ostringstream text;
    text << "validate " << name << ": ";
    print_text(text, v);
    emit(g, to_json(v), text.str());
    return kExitCheckFailed;
  }
  Json jout;
  std::ostringstream text;
  if (classical) {
    jout = to_json(*p.scheme, build_class_chern1(E));
    text << "classical first chern representative of " << name << ":\n" << jout.dump(2) << "\n";
  } else {
    jout = to_json(*p.scheme, build_trunc_chern1(E));
    text << "truncated first chern representative of " << name << ":\n" << jout.dump(2) << "\n";
  }
  jout["complex"] = name;
  emit(g, jout, text.str());
  return kExitPass;
}

int cmd_verify(const GlobalOpts& g, const std::string& file, const std::string& name,
               const std::string& check) {
  const Problem p = parse_problem(file);
  const BundleComplex& E = pick_complex(p, name);
  const ValidationReport v = validate_complex(E);
  Json jout;
  jout["command"] = "verify";
  jout["complex"] = name;
  jout["check"] = check;
  std::ostringstream text;
  if (!v.ok()) {
    text << "validate " << name << ": ";
    print_text(text, v);
    jout["validation"] = to_json(v);
    jout["status"] = "fail";
    emit(g, jout, text.str());
    return kExitCheckFailed;
  }

  bool ok = false;
  if (check == "chain-map") {
    const auto r = verify_truncated_atiyah(E, build_truncated_atiyah(E));
    ok = r.ok();
    jout["report"] = to_json(r);
    text << "verify " << name << " chain-map: ";
    print_text(text, r);
  } else if (check == "classical-chain-map") {
    const auto r = verify_classical_atiyah(E, build_classical_atiyah(E));
    ok = r.ok();
    jout["report"] = to_json(r);
    text << "verify " << name << " classical-chain-map: ";
    print_text(text, r);
  } else if (check == "thm45") {
    ok = check_thm45(E);
    text << "verify " << name << " thm45: " << (ok ? "PASS" : "FAIL") << "\n";
  } else if (check.rfind("thm44:", 0) == 0) {
    const BundleComplex& other = pick_complex(p, check.substr(6));
    ok = check_thm44(LineBundle(E), LineBundle(other));
    text << "verify " << name << " " << check << ": " << (ok ? "PASS" : "FAIL") << "\n";
  } else if (check.rfind("thm46:", 0) == 0) {
    const BundleComplex& other = pick_complex(p, check.substr(6));
    const Thm46Report r = check_thm46(E, other);
    ok = r.ok();
    Json jr;
    jr["dual_negation"] = r.dual_negation;
    jr["sum_additivity"] = r.sum_additivity;
    jr["tensor_rank_rule"] = r.tensor_rank_rule;
    jr["hom_rank_rule"] = r.hom_rank_rule;
    jr["det_of_tensor"] = r.det_of_tensor;
    jout["report"] = std::move(jr);
    text << "verify " << name << " " << check << ":"
         << " dual=" << (r.dual_negation ? "PASS" : "FAIL")
         << " sum=" << (r.sum_additivity ? "PASS" : "FAIL")
         << " tensor=" << (r.tensor_rank_rule ? "PASS" : "FAIL")
         << " hom=" << (r.hom_rank_rule ? "PASS" : "FAIL")
         << " det-tensor=" << (r.det_of_tensor ? "PASS" : "FAIL") << "\n";
  } else {
    throw CLI::ValidationError("--check", "unknown check '" + check + "'");
  }
  jout["status"] = ok ? "pass" : "fail";
  emit(g, jout, text.str());
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_identity(const GlobalOpts& g, const std::string& check, std::size_t size,
                 std::size_t samples, const std::string& scheme_name) {
  bool ok = false;
  Json jout;
  jout["command"] = "identity";
  jout["check"] = check;
  jout["size"] = size;
  std::ostringstream text;
  if (check == "det-trace") {
    const SchemePtr X = scheme_name == "nonreduced" ? nonreduced_line_scheme() : nodal_cubic_scheme();
    Rng rng(g.seed);
    ok = check_det_trace(X, X->single(0), size, samples, rng);
    jout["samples"] = samples;
    jout["scheme"] = scheme_name;
    text << "identity det-trace m=" << size << " samples=" << samples << " scheme=" << scheme_name
         << ": " << (ok ? "PASS" : "FAIL") << "\n";
  } else if (check == "cofactor") {
    ok = check_cofactor_identity(size);
    text << "identity cofactor m=" << size << ": " << (ok ? "PASS" : "FAIL") << "\n";
  } else {
    throw CLI::ValidationError("--check", "unknown identity '" + check + "'");
  }
  jout["status"] = ok ? "pass" : "fail";
  emit(g, jout, text.str());
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_demo(const GlobalOpts& g) {
  const DemoResult r = run_demo(g.seed);
  if (g.json()) {
    Json jout;
    jout["command"] = "demo";
    jout["seed"] = g.seed;
    Json crit = Json::array();
    for (const auto& [label, ok] : r.criteria)
      crit.push_back(Json{{"label", label}, {"status", ok ? "pass" : "fail"}});
    jout["criteria"] = std::move(crit);
    jout["status"] = r.all_ok() ? "pass" : "fail";
    std::cout << jout.dump(2) << "\n";
  } else {
    std::cout << r.transcript;
  }
  std::cerr << "demo wall time: " << r.total_seconds << " s (max chain-map check "
            << r.max_chain_map_seconds << " s)\n";
  return r.all_ok() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cech-cocycle Atiyah and first Chern representatives over exact arithmetic"};
  app.require_subcommand(1);
  // Let global flags (--format, --seed) appear after the subcommand too.
  // (per-subcommand fallthrough set below so --format/--seed work anywhere)

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();

  std::string file, complex_name, check, scheme_name = "nodal";
  std::size_t size = 2, samples = 20;
  bool classical = false;

  auto* validate = app.add_subcommand("validate", "Check the lift relations of a problem file");
  validate->fallthrough();
  validate->add_option("file", file, "Problem file")->required();
  validate->add_option("--complex", complex_name, "Restrict to one complex");

  auto* atiyah = app.add_subcommand("atiyah", "Print an Atiyah cocycle representative");
  atiyah->fallthrough();
  atiyah->add_option("file", file, "Problem file")->required();
  atiyah->add_option("--complex", complex_name, "Complex name")->required();
  atiyah->add_flag("--classical", classical, "Classical (intrinsic) projection");

  auto* chern = app.add_subcommand("chern", "Print a first Chern cocycle representative");
  chern->fallthrough();
  chern->add_option("file", file, "Problem file")->required();
  chern->add_option("--complex", complex_name, "Complex name")->required();
  chern->add_flag("--classical", classical, "Classical (intrinsic) projection");

  auto* verify = app.add_subcommand("verify", "Run a verification check");
  verify->fallthrough();
  verify->add_option("file", file, "Problem file")->required();
  verify->add_option("--complex", complex_name, "Complex name")->required();
  verify->add_option("--check", check,
                     "chain-map | classical-chain-map | thm44:OTHER | thm45 | thm46:OTHER")
      ->required();

  auto* identity = app.add_subcommand("identity", "Standalone symbolic identities");
  identity->fallthrough();
  identity->add_option("--check", check, "det-trace | cofactor")->required();
  identity->add_option("--size", size, "Matrix size m")->required();
  identity->add_option("--samples", samples, "Sample count for det-trace")->capture_default_str();
  identity->add_option("--scheme", scheme_name, "Scheme for det-trace")
      ->check(CLI::IsMember({"nodal", "nonreduced"}))
      ->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Run the full verification battery");
  demo->fallthrough();
  (void)demo;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(g, file, complex_name);
    if (app.got_subcommand(atiyah)) return cmd_atiyah(g, file, complex_name, classical);
    if (app.got_subcommand(chern)) return cmd_chern(g, file, complex_name, classical);
    if (app.got_subcommand(verify)) return cmd_verify(g, file, complex_name, check);
    if (app.got_subcommand(identity)) return cmd_identity(g, check, size, samples, scheme_name);
    if (app.got_subcommand(demo)) return cmd_demo(g);
    std::cerr << "no command given\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
