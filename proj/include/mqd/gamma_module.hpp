#pragma once

#include <vector>

#include "mqd/finite_ring.hpp"
#include "mqd/hom.hpp"
#include "mqd/module.hpp"

namespace mqd {

// Hom(C, Y) as a module over Gamma = End(C), acting by precomposition.
// The action is contravariant: act(g1 * g2) = act(g2) . act(g1), where the
// ring product is composition. Construction verifies this on basis pairs.
struct GammaModule {
  Module c_sum; // direct sum of the chosen set (zero module for the empty set)
  Module y;
  EndRing gamma;              // End(c_sum)
  HomSpace hom;               // Hom(c_sum, y): the ambient space
  std::vector<Matrix> action; // precomposition matrix per gamma basis element

  int dim() const { return hom.dim(); }
};

GammaModule gamma_module(const std::vector<Module>& c_list, const Module& y);

// span of { alpha . g : g in Hom(C, X) } inside Hom(C, Y)
Subspace image_subfunctor(const GammaModule& gm, const Morphism& alpha);

bool is_gamma_stable(const GammaModule& gm, const Subspace& h);

// total-space block-diagonal matrix of a morphism
Matrix total_matrix(const Morphism& f);

} // namespace mqd
