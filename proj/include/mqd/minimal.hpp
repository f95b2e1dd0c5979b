#pragma once

#include <optional>
#include <string>

#include "mqd/finite_ring.hpp"
#include "mqd/hom.hpp"
#include "mqd/module.hpp"

namespace mqd {

// Decomposition X = X' + X'' with alpha|X' right minimal and alpha|X'' = 0.
struct RightMinimalResult {
  Morphism reduced;       // alpha': X' -> Y
  Module x_prime;
  Module x_dprime;        // zero module when alpha was already minimal
  Morphism decomposition; // iso (X' + X'') -> X with alpha . iso = [alpha', 0]
  bool certified;
  std::string witness;
};

RightMinimalResult right_minimal_reduce(const Morphism& alpha);

// certified right-minimality test on its own
bool is_right_minimal(const Morphism& alpha, bool* certified = nullptr);

// kernel inclusion; a monomorphism, hence right minimal
Morphism minimal_weak_kernel(const Morphism& beta);

struct MinimalPresentation {
  Morphism beta_min; // right minimal reduction of beta
  Morphism kappa;    // minimal weak kernel of beta_min
  RightMinimalResult reduction;
  bool exactness_checked = false;
  bool exactness_ok = true;
};

// Minimal presentation data for the cokernel functor of beta. When a
// universe is supplied, Hom(T,-)-exactness at the middle is verified for
// every member T.
MinimalPresentation minimal_presentation(const Morphism& beta, const Universe* u = nullptr);

} // namespace mqd
