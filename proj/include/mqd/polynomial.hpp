#pragma once

#include <string>
#include <vector>

#include "mqd/gf.hpp"
#include "mqd/path_algebra.hpp"

namespace mqd {

// Multivariate polynomial over GF(p) in variables x0, x1, ... A monomial is
// the sorted list of its variable indices (with repetition), so x0^2*x2 is
// [0,0,2]. Terms are combined and sorted; zero coefficients are dropped.
struct Polynomial {
  std::vector<std::pair<uint32_t, std::vector<int>>> terms;

  bool zero() const { return terms.empty(); }
  bool homogeneous() const;
  int degree() const; // max term degree; -1 for the zero polynomial
  int max_var() const;
  uint32_t evaluate(const PrimeField& f, const Vec& point) const;
};

Polynomial normalize_polynomial(const PrimeField& f,
                                std::vector<std::pair<int64_t, std::vector<int>>> raw);

// Grammar: sum of terms; term = [coefficient *] factor (* factor)*;
// factor = integer | x<k> [^ <e>]. Whitespace-insensitive.
Polynomial parse_polynomial(const std::string& text, const PrimeField& f);

std::string polynomial_display(const Polynomial& p);

// Places a homogeneous polynomial of degree d into a Beilinson algebra:
// one element per target vertex 0..degree-d, each the sum over monomials
// of the corresponding descending path.
std::vector<PathAlgebra::Elem> place_polynomial(const PathAlgebra& alg, const Polynomial& f);

} // namespace mqd
