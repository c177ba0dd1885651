#pragma once

#include "atc/cochain.hpp"

namespace atc {

/// The five cocycle families per bundle degree s:
///   t1 (triples, conormal, target s), t2 (pairs, forms, target s),
///   t3 (pairs, conormal, target s+1), t4 (singles, forms, target s+1),
///   t5 (singles, conormal, target s+2).
struct TruncatedAtiyahRep {
  int s_min, s_max;
  std::map<int, ConormalCochain> t1, t3, t5;
  std::map<int, FormCochain> t2, t4;
};

/// The two classical families per degree: p1 = t2, p2 = t4, read intrinsically.
struct ClassicalAtiyahRep {
  int s_min, s_max;
  std::map<int, FormCochain> p1, p2;
};

/// Individual family builders (also used by the Chern traces).
ConormalCochain build_t1(const BundleComplex& E, int s);
FormCochain build_t2(const BundleComplex& E, int s);
ConormalCochain build_t3(const BundleComplex& E, int s);
FormCochain build_t4(const BundleComplex& E, int s);
ConormalCochain build_t5(const BundleComplex& E, int s);

TruncatedAtiyahRep build_truncated_atiyah(const BundleComplex& E);
ClassicalAtiyahRep build_classical_atiyah(const BundleComplex& E);

struct ChainMapFailure {
  int summand;  // 1..7 truncated, 1..3 classical
  int s;
  std::vector<std::size_t> charts;
  std::size_t row, col;
};

struct ChainMapReport {
  std::vector<ChainMapFailure> failures;
  std::size_t units = 0;
  bool ok() const { return failures.empty(); }
};

/// Compares the two chain-map composites of the rep summand by summand:
/// the displayed total differential applied to the degree-s families against
/// the degree-(s+1) families precomposed with d_E. Conormal-valued summands
/// are compared mod J^2, form-valued summands coefficientwise mod J.
ChainMapReport verify_truncated_atiyah(const BundleComplex& E, const TruncatedAtiyahRep& rep,
                                       Exec exec = default_exec());

/// Same comparison for the two-family classical rep, all equalities taken in
/// Omega_X, i.e. mod the saturated Jacobian submodule.
ChainMapReport verify_classical_atiyah(const BundleComplex& E, const ClassicalAtiyahRep& rep,
                                       Exec exec = default_exec());

/// Entrywise equality of representatives (t1/t3/t5 mod J^2, t2/t4 mod J).
bool rep_eq(const BundleComplex& E, const TruncatedAtiyahRep& a, const TruncatedAtiyahRep& b);
/// Entrywise equality mod the Jacobian submodule.
bool rep_eq(const BundleComplex& E, const ClassicalAtiyahRep& a, const ClassicalAtiyahRep& b);

/// Entrywise combinations, family by family.
TruncatedAtiyahRep rep_add(const BundleComplex& E, const TruncatedAtiyahRep& a,
                           const TruncatedAtiyahRep& b);
TruncatedAtiyahRep rep_scale(const TruncatedAtiyahRep& a, long k);
TruncatedAtiyahRep rep_negate(const TruncatedAtiyahRep& a);
TruncatedAtiyahRep zero_atiyah_rep(const BundleComplex& E);

}  // namespace atc
