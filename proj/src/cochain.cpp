#include "atc/cochain.hpp"

namespace atc {

FormCochain conormal_d(const ConormalCochain& c) {
  FormCochain out{c.cech_degree, c.src_deg, c.tgt_deg, {}};
  for (const auto& [indices, m] : c.entries) out.entries.emplace(indices, FormMatrix::d_of(m));
  return out;
}

}  // namespace atc
