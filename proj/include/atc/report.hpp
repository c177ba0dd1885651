#pragma once

#include <ostream>
#include <string>

#include "atc/problem_io.hpp"

namespace atc {

std::string chart_tuple(const std::vector<std::size_t>& indices);

Json to_json(const ValidationReport& r);
Json to_json(const ChainMapReport& r);

void print_text(std::ostream& os, const ValidationReport& r);
void print_text(std::ostream& os, const ChainMapReport& r);

}  // namespace atc
