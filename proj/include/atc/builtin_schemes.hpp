#pragma once

#include "atc/complexes.hpp"

namespace atc {

/// A^1 with J = 0, charts D(x) and D(x-1).
SchemePtr smooth_line_scheme();
/// Nodal cubic V(y^2 - x^3 - x^2) in A^2, four charts.
SchemePtr nodal_cubic_scheme();
/// Non-reduced V(x^2) in A^2, three charts.
SchemePtr nonreduced_line_scheme();

/// O(1)-style line bundle on the smooth line: lifts x and 1/x.
BundleComplex smooth_line_bundle(const SchemePtr& X);
/// Two-term complex O -> L on the smooth line with differential (x, 1).
BundleComplex smooth_two_term(const SchemePtr& X);
/// Trivial transitions except M~_{1,0} = 1 + g; exercises the conormal parts.
BundleComplex nodal_line_bundle(const SchemePtr& X);
/// Three-term tower on V(x^2) with both differentials x: D~ D~ = x^2 ∈ J \ J^2.
BundleComplex nonreduced_tower(const SchemePtr& X);

}  // namespace atc
