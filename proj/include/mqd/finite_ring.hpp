#pragma once

#include <cstdint>
#include <vector>

#include "mqd/hom.hpp"
#include "mqd/matrix.hpp"
#include "mqd/subspace.hpp"

namespace mqd {

// Finite-dimensional associative unital GF(p)-algebra given by structure
// constants in a fixed basis. Construction verifies associativity and the
// unit laws on all basis pairs/triples.
class FiniteRing {
public:
  FiniteRing(PrimeField f, std::vector<std::vector<Vec>> mult, Vec unit);

  int dim() const { return dim_; }
  const PrimeField& field() const { return field_; }
  const Vec& unit() const { return unit_; }
  const Vec& basis_product(int i, int j) const { return mult_[i][j]; }

  Vec multiply(const Vec& x, const Vec& y) const;
  Matrix left_mult_matrix(const Vec& x) const;
  bool is_invertible(const Vec& x) const;
  bool is_commutative() const;

private:
  PrimeField field_;
  int dim_;
  std::vector<std::vector<Vec>> mult_; // mult_[i][j] = e_i * e_j in coordinates
  Vec unit_;
  std::vector<Matrix> left_basis_; // left multiplication by e_i
};

struct EndRing {
  FiniteRing ring;
  HomSpace hom; // basis morphisms; ring coordinates match hom coordinates
};

// End(x) with composition as the product: e_i * e_j = e_i after e_j.
EndRing end_ring(const Module& x);

// J = {x | 1 - y*x invertible for every y}, by exhaustive enumeration.
// Requires p^dim within the cap; verifies J is a two-sided ideal and that
// the quotient has zero radical.
Subspace jacobson_radical(const FiniteRing& r);

// every element is invertible or in the radical
bool is_local(const FiniteRing& r);

// quotient by a two-sided ideal; basis = complement coordinates
struct QuotientRing {
  FiniteRing ring;
  Matrix projection; // ring coords -> quotient coords
};
QuotientRing quotient_ring(const FiniteRing& r, const Subspace& ideal);

// exhaustively verified field test: commutative and all nonzero invertible
struct RingClass {
  uint64_t order;
  bool commutative;
  bool division_ring;
  bool field; // commutative division ring
};
RingClass classify_ring(const FiniteRing& r);

} // namespace mqd
