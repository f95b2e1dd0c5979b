#pragma once

#include <optional>
#include <vector>

#include "mqd/matrix.hpp"

namespace mqd {

// Subspace of GF(p)^n in canonical form: basis rows in RREF, zero rows
// removed. Two subspaces are equal as sets iff their basis matrices are
// identical, so operator== is set equality.
class Subspace {
public:
  Subspace(PrimeField f, int ambient); // zero subspace

  static Subspace span(const Matrix& generators);
  static Subspace span_rows(PrimeField f, int ambient, const std::vector<Vec>& rows);
  static Subspace full(PrimeField f, int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const PrimeField& field() const { return basis_.field(); }

  bool contains_vector(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Strict total order for deterministic container keys: (dim, basis lex).
  bool operator<(const Subspace& o) const;

  Subspace meet(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  // Coordinates of v in the RREF basis, or nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  // Remainder of v after reduction by the basis rows.
  Vec reduce(const Vec& v) const;

  // Rows spanning {q | q . v = 0 for all v in this}; double annihilator
  // recovers the subspace (standard dot form is nondegenerate).
  Matrix annihilator() const;

private:
  int ambient_;
  Matrix basis_;
};

// {x | m*x in v}. v lives in the target space of m.
Subspace preimage(const Matrix& m, const Subspace& v);

// Column space / null space in canonical form.
Subspace image_space(const Matrix& m);
Subspace kernel_space(const Matrix& m);

// Image of a subspace under a linear map: span{m*b : b basis of u}.
Subspace apply_to_subspace(const Matrix& m, const Subspace& u);

} // namespace mqd
