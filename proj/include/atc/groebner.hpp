#pragma once

#include <vector>

#include "atc/order.hpp"
#include "atc/polynomial.hpp"

namespace atc {

/// A Groebner basis together with the order it was computed under. Bases
/// produced by buchberger() are reduced: monic generators, fully inter-reduced,
/// sorted by ascending leading monomial — the unique reduced basis of the ideal.
struct GroebnerBasis {
  std::vector<Polynomial> gens;
  MonomialOrder order;
  bool reduced = false;
};

/// Index of the leading term of p under ord. Pre: p nonzero.
std::size_t leading_index(const Polynomial& p, const MonomialOrder& ord);
const Term& leading_term(const Polynomial& p, const MonomialOrder& ord);

/// Buchberger's algorithm with normal-strategy pair selection (smallest lcm in
/// the ambient order) and the coprimality criterion, followed by full
/// auto-reduction. Deterministic for a fixed generator multiset.
GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord);

/// Remainder of full multivariate division of p by gb (every term reduced,
/// first divisible basis element wins). Zero iff p lies in the ideal when gb
/// is a Groebner basis; idempotent.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Division with recorded quotients: p == sum_i quotients[i] * gb.gens[i] + remainder.
struct DivisionTranscript {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
DivisionTranscript normal_form_with_transcript(const Polynomial& p, const GroebnerBasis& gb);

bool in_ideal(const Polynomial& p, const GroebnerBasis& gb);

/// Generators of the intersection with the subring on the non-block variables.
/// Pre: gb was computed under MonomialOrder::elim with exactly this block.
std::vector<Polynomial> eliminate(const GroebnerBasis& gb, const std::vector<std::size_t>& block);

/// Generators of J : f^inf by Rabinowitsch elimination of a fresh variable t
/// from J + (1 - t*f). Pre: f nonzero.
std::vector<Polynomial> saturate(const std::vector<Polynomial>& ideal_gens, const Polynomial& f);

/// Ring-extension helpers shared with the module routines.
RingPtr extend_ring(const RingPtr& ring, const std::string& stem);
Polynomial lift_to_extension(const RingPtr& ext, const Polynomial& p);
Polynomial drop_last_var(const RingPtr& ring, const Polynomial& p);  // pre: last var absent
bool uses_last_var(const Polynomial& p);

}  // namespace atc
