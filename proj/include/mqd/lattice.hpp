#pragma once

#include <vector>

#include "mqd/gamma_module.hpp"
#include "mqd/module.hpp"

namespace mqd {

enum class LatticeMode { Lambda, EndStable, Gamma };

// Finite lattice of subspaces stable under a set of operators, with its
// covering relations. Elements are sorted by (dimension, basis lex).
struct SubmoduleLattice {
  int ambient = 0;
  std::vector<Subspace> elements;
  std::vector<std::pair<int, int>> hasse; // covered -> covering

  int index_of(const Subspace& s) const;
};

// All subspaces of GF(p)^ambient stable under every operator, found as the
// join closure of the cyclic (orbit-span) submodules of single vectors.
SubmoduleLattice stable_subspace_lattice(PrimeField f, int ambient,
                                         const std::vector<Matrix>& operators);

// mode Lambda: algebra action on the total space of a module;
// mode EndStable: stability under every endomorphism.
SubmoduleLattice module_submodule_lattice(const Module& m, LatticeMode mode);

// Gamma-submodules of Hom(C, Y)
SubmoduleLattice gamma_submodule_lattice(const GammaModule& gm);

} // namespace mqd
