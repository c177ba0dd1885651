#include "atc/report.hpp"

#include <sstream>

namespace atc {

std::string chart_tuple(const std::vector<std::size_t>& indices) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) os << ',';
    os << indices[k];
  }
  os << ')';
  return os.str();
}

Json to_json(const ValidationReport& r) {
  Json out;
  out["status"] = r.ok() ? "pass" : "fail";
  out["units"] = r.units;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"condition", std::string(1, f.condition)},
                            {"s", f.s},
                            {"charts", f.indices},
                            {"row", f.row},
                            {"col", f.col},
                            {"value", f.value}});
  }
  out["failures"] = std::move(failures);
  return out;
}

Json to_json(const ChainMapReport& r) {
  Json out;
  out["status"] = r.ok() ? "pass" : "fail";
  out["units"] = r.units;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"summand", f.summand},
                            {"s", f.s},
                            {"charts", f.charts},
                            {"row", f.row},
                            {"col", f.col}});
  }
  out["failures"] = std::move(failures);
  return out;
}

void print_text(std::ostream& os, const ValidationReport& r) {
  os << (r.ok() ? "PASS" : "FAIL") << " (" << r.units << " units)\n";
  for (const auto& f : r.failures)
    os << "  condition " << f.condition << " s=" << f.s << " charts=" << chart_tuple(f.indices)
       << " entry=(" << f.row << ',' << f.col << "): " << f.value << "\n";
}

void print_text(std::ostream& os, const ChainMapReport& r) {
  os << (r.ok() ? "PASS" : "FAIL") << " (" << r.units << " units)\n";
  for (const auto& f : r.failures)
    os << "  summand " << f.summand << " s=" << f.s << " charts=" << chart_tuple(f.charts)
       << " entry=(" << f.row << ',' << f.col << ")\n";
}

}  // namespace atc
