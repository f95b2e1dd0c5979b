#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mqd/gamma_module.hpp"
#include "mqd/lattice.hpp"
#include "mqd/minimal.hpp"
#include "mqd/module.hpp"

namespace mqd {

enum class FhMethod { Intersection, Coinduction };

// Value of the determined subfunctor F_H at a module x, as a subspace of
// the hom coordinates of Hom(x, Y). The intersection method intersects
// preimages over a basis of Hom(C, x); the coinduction method takes the
// kernel of one stacked linear system into Hom(C,Y)/H. Both are canonical.
Subspace fh_eval(const GammaModule& gm, const Subspace& h, const Module& x, FhMethod method);

struct UniversalityWitness {
  int universe_index;
  int generator_index;
  Morphism beta;
  std::optional<Morphism> factor; // phi with alpha . phi = beta
};

struct DeterminedResult {
  Morphism alpha;
  Subspace h;                 // the requested invariant
  bool image_check = false;   // image_subfunctor(alpha) == h
  bool minimal_check = false;
  bool minimal_certified = false;
  std::vector<UniversalityWitness> witnesses;
  bool universality_check = false;
  bool truncated = false;     // universe incomplete
  std::string label;          // "exact" | "universe-truncated"

  bool verified() const { return image_check && minimal_check && universality_check; }
};

// Builds the right minimal morphism alpha with Im Hom(C, alpha) = H through
// which every morphism with smaller invariant factors, relative to the
// universe: generator scan over F_H, assembly, right-minimal reduction,
// then certification.
DeterminedResult construct_determined(const GammaModule& gm, const Subspace& h,
                                      const Universe& u);

struct DeterminacyResult {
  bool determined = true;
  std::optional<Morphism> counterexample; // beta that fails to factor
  int counterexample_universe_index = -1;
};

DeterminacyResult is_right_determined(const Morphism& alpha, const GammaModule& gm,
                                      const Universe& u);

struct CheckReport {
  bool ok = true;
  int checks = 0;
  std::vector<std::string> failures;
  void fail(const std::string& what) {
    ok = false;
    failures.push_back(what);
  }
};

// Adjunction sweep: for every H in the Gamma-submodule lattice and every
// universe member T, the subspace {beta : T->Y | Im Hom(C,beta) inside H}
// equals the subspace of morphisms factoring through alpha_H. Also checks
// the functoriality instances through morphisms y' -> y from the universe.
CheckReport galois_adjunction_check(const GammaModule& gm, const Universe& u);

// Round trip H -> alpha_H -> image = H over the whole lattice, pairwise
// non-equivalence of distinct alpha_H, and the recovery of every right
// determined morphism assembled from universe hom bases.
CheckReport auslander_bijection_check(const GammaModule& gm, const Universe& u);

// Every finite-dimensional module is pure-injective, so every hom-basis
// morphism between universe members must be right determined by the sum of
// the universe; the right-minimal decomposition alpha = [alpha', 0] is
// produced along the way.
CheckReport kernel_determinacy_check(const Universe& u);

} // namespace mqd
