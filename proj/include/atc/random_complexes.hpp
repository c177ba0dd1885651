#pragma once

#include "atc/complexes.hpp"
#include "atc/rng.hpp"

namespace atc {

/// Knobs for the conjugation generator. Valid complexes are produced as
/// M~_ij = G_i G_j^-1 and D~_i = G_i D G_i^-1 for per-chart invertible frames
/// G_i (elementary row operations and unit f^k scalings, so the inverses are
/// exact fractions) and a constant block-nilpotent D. J-multiples added on
/// top keep the complex valid and make the conormal families nonzero.
///
/// Odd-degree transition perturbations are restricted to J^2: the determinant
/// identities (c1 of the determinant, dual negation) hold at the cocycle
/// level only when the odd-degree pairwise products keep trace 1 mod J^2.
struct GenOptions {
  int min_degrees = 1;
  int max_degrees = 3;
  std::size_t max_rank = 3;
  bool perturb_transitions = true;
  bool perturb_differentials = true;
  bool transitions_j2_only = false;  // force J^2 perturbations at all degrees
};

BundleComplex random_valid_complex(const SchemePtr& X, Rng& rng, const GenOptions& opt = {});

/// Degree-0 rank-1 bundle. With exact_inverses the two lifts of every pair
/// multiply to 1 on the nose; otherwise J-multiples are added.
LineBundle random_line_bundle(const SchemePtr& X, Rng& rng, bool exact_inverses);

/// Random element of J (resp. J^2) as a polynomial; zero when J = 0.
Polynomial random_ideal_element(const SchemePtr& X, Rng& rng, bool square);

/// Fresh J-multiples added to every transition and differential lift; the
/// residues, and hence the complex itself, are unchanged.
BundleComplex relift(const BundleComplex& E, Rng& rng);

}  // namespace atc
