#pragma once

#include <cstdint>
#include <vector>

#include "mqd/module.hpp"
#include "mqd/polynomial.hpp"

namespace mqd {

struct VarietySpec {
  int n;                        // projective ambient dimension (variables x0..xn)
  int degree_cap;               // Beilinson degree parameter
  std::vector<Polynomial> polys;
  uint32_t q;                   // prime field size
};

// I(0) of the quotient of the Beilinson algebra by the placed polynomial
// ideal, restricted along the surjection back to the Beilinson algebra.
Module beilinson_injective(const VarietySpec& spec);

struct GrassmannianCount {
  std::vector<int> dim_vector;
  std::vector<std::vector<Subspace>> points; // one subspace per vertex
  uint64_t count = 0;
};

// All arrow-stable tuples of per-vertex subspaces with the prescribed
// dimension vector, by exhaustive enumeration of canonical representatives.
GrassmannianCount grassmannian_points(const Module& m, const std::vector<int>& d,
                                      uint64_t guard = 10'000'000);

struct VarietyCount {
  std::vector<Vec> points; // canonical projective representatives
  uint64_t count = 0;
};

// Projective points with every polynomial vanishing, enumerated directly.
VarietyCount variety_points(const VarietySpec& spec);

// all subspaces of GF(p)^n of dimension k, canonical RREF order
std::vector<Subspace> enumerate_subspaces(PrimeField f, int n, int k);

uint64_t gaussian_binomial(uint32_t q, int n, int k);

} // namespace mqd
