#pragma once

#include <cstddef>
#include <vector>

#include "atc/polynomial.hpp"

namespace atc {

enum class OrderKind { degrevlex, lex, elim };

/// Total, multiplicative, well-founded monomial order. All kinds act through
/// a permutation of the variable slots: `perm[k]` is the variable compared at
/// position k. For the elimination kind the first `block` permuted slots are
/// compared first (degrevlex within each group), so those variables are
/// eliminated by taking the block-free part of a Groebner basis.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);
  /// Eliminates the listed variables; the remaining ones keep declared order.
  static MonomialOrder elim(std::size_t nvars, std::vector<std::size_t> block);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return perm_.size(); }
  std::size_t block_size() const { return block_; }
  /// Variable indices of the eliminated block.
  std::vector<std::size_t> block_vars() const;

  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.perm_ == b.perm_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> perm, std::size_t block)
      : kind_(kind), perm_(std::move(perm)), block_(block) {}

  int degrevlex_on_range(const Monomial& a, const Monomial& b, std::size_t lo,
                         std::size_t hi) const;

  OrderKind kind_;
  std::vector<std::size_t> perm_;
  std::size_t block_;
};

}  // namespace atc
