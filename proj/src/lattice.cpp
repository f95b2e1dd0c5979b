#include "mqd/lattice.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mqd/caps.hpp"
#include "mqd/hom.hpp"

namespace mqd {

namespace {

bool fits_cap(uint32_t p, int n, uint64_t cap) {
  uint64_t acc = 1;
  for (int i = 0; i < n; ++i) {
    if (acc > cap / p) return false;
    acc *= p;
  }
  return acc <= cap;
}

bool advance(Vec& v, uint32_t p) {
  for (auto& x : v) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

// smallest operator-stable subspace containing v
Subspace orbit_span(PrimeField f, int ambient, const std::vector<Matrix>& ops, const Vec& v) {
  Subspace s = Subspace::span_rows(f, ambient, {v});
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Matrix& a : ops)
      for (int r = 0; r < s.dim(); ++r) {
        Vec w = a.apply(s.basis().row(r));
        if (!s.contains_vector(w)) {
          s = s.sum(Subspace::span_rows(f, ambient, {w}));
          grew = true;
        }
      }
  }
  return s;
}

} // namespace

int SubmoduleLattice::index_of(const Subspace& s) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == s) return static_cast<int>(i);
  return -1;
}

SubmoduleLattice stable_subspace_lattice(PrimeField f, int ambient,
                                         const std::vector<Matrix>& operators) {
  if (ambient > 12)
    throw cap_exceeded("lattice enumeration limited to ambient dimension 12, got " +
                       std::to_string(ambient));
  if (!fits_cap(f.p(), ambient, enum_cap()))
    throw cap_exceeded("lattice vector sweep exceeds the enumeration cap");
  for (const Matrix& a : operators)
    if (a.rows() != ambient || a.cols() != ambient)
      throw input_error("lattice operator has wrong shape");

  std::set<Subspace> found;
  found.insert(Subspace(f, ambient)); // zero
  Vec v(ambient, 0);
  while (advance(v, f.p())) found.insert(orbit_span(f, ambient, operators, v));

  // join closure
  std::vector<Subspace> work(found.begin(), found.end());
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Subspace s = work[i].sum(work[j]);
      if (found.insert(s).second) work.push_back(s);
    }

  SubmoduleLattice lat;
  lat.ambient = ambient;
  lat.elements.assign(found.begin(), found.end()); // set order = (dim, basis lex)

  const int n = static_cast<int>(lat.elements.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && lat.elements[i].dim() < lat.elements[j].dim())
        leq[i][j] = lat.elements[j].contains(lat.elements[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (leq[i][k] && leq[k][j]) cover = false;
      if (cover) lat.hasse.emplace_back(i, j);
    }
  std::sort(lat.hasse.begin(), lat.hasse.end());
  return lat;
}

SubmoduleLattice module_submodule_lattice(const Module& m, LatticeMode mode) {
  const PrimeField& f = m.algebra()->field();
  std::vector<Matrix> ops;
  if (mode == LatticeMode::Lambda) {
    for (int v = 0; v < static_cast<int>(m.dims().size()); ++v)
      ops.push_back(m.total_vertex_projection(v));
    for (int a = 0; a < m.algebra()->quiver().arrow_count(); ++a)
      ops.push_back(m.total_arrow_matrix(a));
  } else if (mode == LatticeMode::EndStable) {
    HomSpace end = hom_basis(m, m);
    for (const Morphism& e : end.basis) ops.push_back(total_matrix(e));
  } else {
    throw input_error("gamma mode needs a GammaModule; use gamma_submodule_lattice");
  }
  return stable_subspace_lattice(f, m.total_dim(), ops);
}

SubmoduleLattice gamma_submodule_lattice(const GammaModule& gm) {
  return stable_subspace_lattice(gm.y.algebra()->field(), gm.dim(), gm.action);
}

} // namespace mqd
