#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mqd/matrix.hpp"
#include "mqd/quiver.hpp"

namespace mqd {

struct RelationTerm {
  int64_t coeff;
  std::vector<std::string> path; // arrow names, in traversal order: path[0] first
};
using Relation = std::vector<RelationTerm>;

struct BasisPath {
  std::vector<int> arrows; // arrow indices, traversal order
  int source;
  int target;
  std::string display() const;
};

struct BeilinsonShape {
  int n;      // arrows per step are x_0..x_n
  int degree; // vertices degree..0
};

// Finite-dimensional path algebra with relations. Paths compose left to
// right: the product [a, b] means "a then b" and needs target(a)=source(b).
// Elements are dense coefficient vectors over the canonical path basis.
// All paths of length >= cap vanish; construction fails when that is not
// already a consequence of the relations (non-admissible ideal).
class PathAlgebra {
public:
  using Elem = Vec;

  static std::shared_ptr<const PathAlgebra> build(PrimeField f, Quiver q,
                                                  std::vector<Relation> rels, int cap);

  const Quiver& quiver() const { return quiver_; }
  const PrimeField& field() const { return field_; }
  int cap() const { return cap_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisPath>& basis() const { return basis_; }
  const std::vector<Relation>& relations() const { return relations_in_; }
  const std::optional<BeilinsonShape>& beilinson_shape() const { return beilinson_; }

  // basis indices of paths from s to t, in basis order
  std::vector<int> basis_indices(int s, int t) const;

  Elem zero_elem() const { return Elem(basis_.size(), 0); }
  Elem unit_elem() const;
  Elem vertex_idempotent(int v) const;
  Elem arrow_elem(int a) const;

  // Reduction of an arbitrary composable arrow sequence to basis form.
  Elem path_elem(const std::vector<int>& arrows) const;
  Elem path_elem_named(const std::vector<std::string>& arrow_names) const;

  Elem multiply(const Elem& x, const Elem& y) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem scale(uint32_t c, const Elem& x) const;

  std::shared_ptr<const PathAlgebra> opposite() const;
  bool same_structure(const PathAlgebra& o) const;

  std::string elem_display(const Elem& x) const;

private:
  PathAlgebra(PrimeField f, Quiver q) : field_(f), quiver_(std::move(q)) {}

  PrimeField field_;
  Quiver quiver_;
  int cap_ = 0;
  std::vector<Relation> relations_in_;
  std::optional<BeilinsonShape> beilinson_;

  std::vector<BasisPath> basis_;
  std::map<std::vector<int>, int> basis_by_arrows_;
  // prepend_[a]: for each basis index, the expansion of (arrow a) * path
  std::vector<std::map<int, std::vector<std::pair<int, uint32_t>>>> prepend_;

  friend std::shared_ptr<const PathAlgebra> beilinson_algebra(int, int, PrimeField);
};

// Beilinson algebra: linear quiver degree -> ... -> 0 with n+1 parallel
// arrows x_0..x_n on each step, commuting (x_i x_j = x_j x_i).
std::shared_ptr<const PathAlgebra> beilinson_algebra(int n, int degree, PrimeField f);

} // namespace mqd
