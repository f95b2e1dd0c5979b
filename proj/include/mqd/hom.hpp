#pragma once

#include <optional>
#include <vector>

#include "mqd/module.hpp"

namespace mqd {

// Basis of the space of intertwiners x -> y, canonical via RREF of the
// kernel of the intertwining equations over flattened blocks.
struct HomSpace {
  Module source, target;
  std::vector<Morphism> basis;
  Subspace coords; // RREF subspace of the flattened-entry space

  int dim() const { return static_cast<int>(basis.size()); }
  std::optional<Vec> coordinates(const Morphism& f) const;
  Morphism from_coordinates(const Vec& c) const;
};

HomSpace hom_basis(const Module& x, const Module& y);

Vec morphism_to_vec(const Morphism& f);
Morphism vec_to_morphism(const Module& src, const Module& tgt, const Vec& v);

// phi: A -> B with m . phi = rhs (m: B -> C, rhs: A -> C)
std::optional<Morphism> solve_postcompose(const Morphism& m, const Morphism& rhs);
// phi: A -> B with phi . m = rhs (m: C -> A, rhs: C -> B)
std::optional<Morphism> solve_precompose(const Morphism& m, const Morphism& rhs);

// all phi: A -> A with m . phi = 0, as a hom-style basis (m: A -> C)
std::vector<Morphism> postcompose_kernel(const Morphism& m);

// phi with alpha . phi = beta (both ending at the same object)
std::optional<Morphism> factors_through(const Morphism& beta, const Morphism& alpha);

bool is_retraction(const Morphism& alpha);
bool is_section(const Morphism& alpha);

// matrix of (g |-> alpha . g): from = Hom(C,X), to = Hom(C,Y), alpha: X -> Y
Matrix postcompose_matrix(const HomSpace& from, const HomSpace& to, const Morphism& alpha);
// matrix of (b |-> b . gamma): from = Hom(X,Y), to = Hom(C,Y), gamma: C -> X
Matrix precompose_matrix(const HomSpace& from, const HomSpace& to, const Morphism& gamma);

} // namespace mqd
