#pragma once

#include "atc/atiyah.hpp"
#include "atc/rng.hpp"

namespace atc {

/// First truncated Chern representative: scalar conormal cochain over triples
/// (alternating trace of t1) and scalar form cochain over pairs (alternating
/// trace of t2).
struct TruncChernRep {
  ConormalCochain c2;
  FormCochain c1w;
};

/// Classical projection: the form family alone, compared mod the Jacobian
/// submodule.
struct ClassChernRep {
  FormCochain c1w;
};

TruncChernRep build_trunc_chern1(const BundleComplex& E);
ClassChernRep build_class_chern1(const BundleComplex& E);

TruncChernRep chern_zero(const SchemePtr& X);
TruncChernRep chern_add(const ChartedScheme& X, const TruncChernRep& a, const TruncChernRep& b);
TruncChernRep chern_negate(const TruncChernRep& a);
TruncChernRep chern_scale(const TruncChernRep& a, long k);

/// Entrywise: c2 mod J^2, c1w coefficientwise mod J.
bool rep_eq(const ChartedScheme& X, const TruncChernRep& a, const TruncChernRep& b);
/// Entrywise mod the Jacobian submodule.
bool rep_eq(const ChartedScheme& X, const ClassChernRep& a, const ClassChernRep& b);

/// c1(L ⊗ M) = c1(L) + c1(M) with the product lifts of the tensor complex.
bool check_thm44(const LineBundle& L, const LineBundle& M);
/// c1(E) = c1(det E) with the alternating determinant lifts.
bool check_thm45(const BundleComplex& E);

struct Thm46Report {
  bool dual_negation = false;        // c1(E^v) = -c1(E)
  bool sum_additivity = false;       // c1(E ⊕ F) = c1(E) + c1(F)
  bool tensor_rank_rule = false;     // c1(E ⊗ F) = rk F c1(E) + rk E c1(F)
  bool hom_rank_rule = false;        // c1(Hom(E,F)) = -rk F c1(E) + rk E c1(F)
  bool det_of_tensor = false;        // det(E ⊗ F) = det E^{rk F} ⊗ det F^{rk E} mod J
  bool ok() const {
    return dual_negation && sum_additivity && tensor_rank_rule && hom_rank_rule && det_of_tensor;
  }
};

/// Requires constant ranks for the tensor/Hom rules.
Thm46Report check_thm46(const BundleComplex& E, const BundleComplex& F);

/// det(1 + N) = tr(1 + N) - (m - 1) mod J^2 for random matrices N with entries
/// in J, drawn on the given chart set.
bool check_det_trace(const SchemePtr& X, const ChartSet& cs, std::size_t m, std::size_t samples,
                     Rng& rng, Exec exec = default_exec());

/// Sum_{u,v} det(M^{vu}) dM_{vu} = d(det M) for a fully generic m x m matrix
/// over the polynomial ring on m^2 variables. Pre: 1 <= m <= 4.
bool check_cofactor_identity(std::size_t m);

}  // namespace atc
