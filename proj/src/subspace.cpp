#include "mqd/subspace.hpp"

namespace mqd {

Subspace::Subspace(PrimeField f, int ambient) : ambient_(ambient), basis_(f, 0, ambient) {
  if (ambient < 0) throw input_error("negative ambient dimension");
}

Subspace Subspace::span(const Matrix& generators) {
  RrefResult r = rref(generators);
  Subspace s(generators.field(), generators.cols());
  s.basis_ = r.mat.block(0, 0, r.rank, generators.cols());
  return s;
}

Subspace Subspace::span_rows(PrimeField f, int ambient, const std::vector<Vec>& rows) {
  return span(Matrix::from_rows(f, ambient, rows));
}

Subspace Subspace::full(PrimeField f, int ambient) { return span(Matrix::identity(f, ambient)); }

Vec Subspace::reduce(const Vec& v) const {
  Vec w = v;
  const PrimeField& f = field();
  for (int r = 0; r < basis_.rows(); ++r) {
    int pc = -1;
    for (int c = 0; c < ambient_; ++c)
      if (basis_.at(r, c) != 0) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    uint32_t k = w[pc]; // pivot entry is 1 in RREF
    if (!k) continue;
    for (int c = 0; c < ambient_; ++c) w[c] = f.sub(w[c], f.mul(k, basis_.at(r, c)));
  }
  return w;
}

bool Subspace::contains_vector(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw input_error("ambient dimension mismatch");
  Vec w = reduce(v);
  for (auto x : w)
    if (x) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw input_error("ambient dimension mismatch");
  for (int r = 0; r < other.basis_.rows(); ++r)
    if (!contains_vector(other.basis_.row(r))) return false;
  return true;
}

bool Subspace::operator<(const Subspace& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (dim() != o.dim()) return dim() < o.dim();
  return basis_.lex_less(o.basis_);
}

Subspace Subspace::meet(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw input_error("ambient dimension mismatch in meet");
  Matrix ann = Matrix::vstack(annihilator(), other.annihilator());
  return kernel_space(ann);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw input_error("ambient dimension mismatch in sum");
  return span(Matrix::vstack(basis_, other.basis_));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw input_error("ambient dimension mismatch");
  const PrimeField& f = field();
  Vec w = v;
  Vec coords(static_cast<size_t>(basis_.rows()), 0);
  for (int r = 0; r < basis_.rows(); ++r) {
    int pc = -1;
    for (int c = 0; c < ambient_; ++c)
      if (basis_.at(r, c) != 0) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    uint32_t k = w[pc];
    coords[r] = k;
    if (!k) continue;
    for (int c = 0; c < ambient_; ++c) w[c] = f.sub(w[c], f.mul(k, basis_.at(r, c)));
  }
  for (auto x : w)
    if (x) return std::nullopt;
  return coords;
}

Matrix Subspace::annihilator() const {
  // q with basis * q = 0, i.e. q orthogonal to every basis row.
  Subspace k = kernel_space(basis_);
  return k.basis();
}

Subspace preimage(const Matrix& m, const Subspace& v) {
  if (v.ambient() != m.rows()) throw input_error("ambient dimension mismatch in preimage");
  Matrix ann = v.annihilator();
  if (ann.rows() == 0) return Subspace::full(m.field(), m.cols());
  return kernel_space(ann * m);
}

Subspace image_space(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace kernel_space(const Matrix& m) {
  RrefResult r = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec x(m.cols(), 0);
    x[c] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = f.neg(r.mat.at(static_cast<int>(i), c));
    rows.push_back(std::move(x));
  }
  return Subspace::span_rows(f, m.cols(), rows);
}

Subspace apply_to_subspace(const Matrix& m, const Subspace& u) {
  if (u.ambient() != m.cols()) throw input_error("ambient dimension mismatch in apply");
  std::vector<Vec> rows;
  for (int r = 0; r < u.dim(); ++r) rows.push_back(m.apply(u.basis().row(r)));
  return Subspace::span_rows(m.field(), m.rows(), rows);
}

} // namespace mqd
