#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mqd/path_algebra.hpp"
#include "mqd/subspace.hpp"

namespace mqd {

// Finite-dimensional right module over a path algebra, given as a quiver
// representation: a space per vertex and a matrix per arrow mapping the
// source vertex space to the target vertex space (columns act first).
class Module {
public:
  Module(std::shared_ptr<const PathAlgebra> alg, std::vector<int> dims, std::vector<Matrix> maps);

  const std::shared_ptr<const PathAlgebra>& algebra() const { return alg_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int v) const { return dims_[v]; }
  const Matrix& map(int a) const { return maps_[a]; }
  int total_dim() const { return total_; }
  int vertex_offset(int v) const { return offsets_[v]; }

  // composite matrix of a path acting on this module (first arrow first)
  Matrix path_matrix(const std::vector<int>& arrows) const;

  // block-diagonal action of each arrow on the total space
  Matrix total_arrow_matrix(int a) const;
  Matrix total_vertex_projection(int v) const;

  bool same_space(const Module& o) const; // same algebra and dims

private:
  std::shared_ptr<const PathAlgebra> alg_;
  std::vector<int> dims_;
  std::vector<Matrix> maps_;
  std::vector<int> offsets_;
  int total_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};
ValidationReport validate(const Module& m);

bool compatible_algebras(const Module& a, const Module& b);

// Intertwiner between representations; one block per vertex. The
// constructor verifies the intertwining identity and throws otherwise.
class Morphism {
public:
  Morphism(Module source, Module target, std::vector<Matrix> blocks);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& block(int v) const { return blocks_[v]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  bool is_zero() const;
  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const;
  Morphism inverse() const; // requires is_iso

  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(uint32_t c) const;
  bool operator==(const Morphism& o) const;

private:
  Module source_, target_;
  std::vector<Matrix> blocks_;
};

Morphism identity_morphism(const Module& m);
Morphism zero_morphism(const Module& src, const Module& tgt);
Morphism compose(const Morphism& g, const Morphism& f); // g after f

struct DirectSum {
  Module sum;
  std::vector<Morphism> inject;
  std::vector<Morphism> project;
};
DirectSum direct_sum(const std::vector<Module>& ms);

// Submodule spanned by per-vertex subspaces; input must be arrow-stable.
struct SubmoduleResult {
  Module sub;
  Morphism inclusion;
};
SubmoduleResult submodule(const Module& m, const std::vector<Subspace>& spaces);

struct QuotientResult {
  Module quot;
  Morphism projection;
};
QuotientResult quotient(const Module& m, const std::vector<Subspace>& spaces);

struct Factorization {
  Module kernel;
  Morphism kernel_inclusion;     // ker -> X
  Module image;
  Morphism image_inclusion;      // im -> Y
  Morphism corestriction;        // X -> im (epi)
  Module cokernel;
  Morphism cokernel_projection;  // Y -> coker
};
Factorization factor_morphism(const Morphism& f);

Module simple_module(std::shared_ptr<const PathAlgebra> alg, int v);
Module projective_module(std::shared_ptr<const PathAlgebra> alg, int v);
Module injective_module(std::shared_ptr<const PathAlgebra> alg, int v);
Module regular_module(std::shared_ptr<const PathAlgebra> alg); // sum of all P(v)

// Dual module over the opposite algebra; spaces and arrow maps transposed.
Module dual_module(const Module& m);

// nu(P) = D(Hom(P, regular)); input must be projective.
Module nakayama(const Module& p);

struct Decomposition {
  std::vector<Module> parts;          // indecomposable
  std::vector<Morphism> inclusions;   // part -> m
};
Decomposition decompose(const Module& m);
Morphism decomposition_iso(const Module& m, const Decomposition& d); // sum(parts) -> m

std::optional<Morphism> is_isomorphic(const Module& m, const Module& n);

// Retraction test for a short exact pair: sigma with sigma . iota = id.
bool is_split_exact(const Morphism& iota, const Morphism& pi);

struct Universe {
  std::shared_ptr<const PathAlgebra> alg;
  std::vector<Module> modules; // pairwise non-isomorphic indecomposables
  std::vector<std::string> provenance;
  int dim_bound = 0;
  bool complete = false;
};
Universe build_universe(std::shared_ptr<const PathAlgebra> alg, int dim_bound);

} // namespace mqd
