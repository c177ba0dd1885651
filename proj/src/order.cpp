#include "atc/order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace atc {

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  std::vector<std::size_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialOrder(OrderKind::degrevlex, std::move(perm), 0);
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialOrder(OrderKind::lex, std::move(perm), 0);
}

MonomialOrder MonomialOrder::elim(std::size_t nvars, std::vector<std::size_t> block) {
  std::vector<bool> in_block(nvars, false);
  for (std::size_t v : block) {
    if (v >= nvars || in_block[v]) throw std::invalid_argument("bad elimination block");
    in_block[v] = true;
  }
  std::vector<std::size_t> perm = block;
  for (std::size_t v = 0; v < nvars; ++v)
    if (!in_block[v]) perm.push_back(v);
  return MonomialOrder(OrderKind::elim, std::move(perm), block.size());
}

std::vector<std::size_t> MonomialOrder::block_vars() const {
  return {perm_.begin(), perm_.begin() + static_cast<std::ptrdiff_t>(block_)};
}

int MonomialOrder::degrevlex_on_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                      std::size_t hi) const {
  unsigned da = 0, db = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    da += a.exps[perm_[k]];
    db += b.exps[perm_[k]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = hi; k-- > lo;) {
    const unsigned ea = a.exps[perm_[k]], eb = b.exps[perm_[k]];
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::degrevlex:
      return degrevlex_on_range(a, b, 0, perm_.size());
    case OrderKind::lex:
      for (std::size_t k = 0; k < perm_.size(); ++k) {
        const unsigned ea = a.exps[perm_[k]], eb = b.exps[perm_[k]];
        if (ea != eb) return ea < eb ? -1 : 1;
      }
      return 0;
    case OrderKind::elim: {
      const int head = degrevlex_on_range(a, b, 0, block_);
      if (head != 0) return head;
      return degrevlex_on_range(a, b, block_, perm_.size());
    }
  }
  return 0;
}

}  // namespace atc
