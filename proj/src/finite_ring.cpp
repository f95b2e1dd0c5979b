#include "mqd/finite_ring.hpp"

#include <string>

#include "mqd/caps.hpp"

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

Subspace radical_impl(const FiniteRing& r, bool verify);

} // namespace

FiniteRing::FiniteRing(PrimeField f, std::vector<std::vector<Vec>> mult, Vec unit)
    : field_(f), dim_(static_cast<int>(unit.size())), mult_(std::move(mult)), unit_(std::move(unit)) {
  if (static_cast<int>(mult_.size()) != dim_) throw input_error("structure constant shape");
  for (auto& row : mult_) {
    if (static_cast<int>(row.size()) != dim_) throw input_error("structure constant shape");
    for (auto& v : row)
      if (static_cast<int>(v.size()) != dim_) throw input_error("structure constant shape");
  }
  for (int i = 0; i < dim_; ++i) {
    Matrix li(field_, dim_, dim_);
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) li.set(k, j, mult_[i][j][k]);
    left_basis_.push_back(std::move(li));
  }
  // unit laws
  for (int i = 0; i < dim_; ++i) {
    Vec e(dim_, 0);
    e[i] = 1;
    if (multiply(unit_, e) != e || multiply(e, unit_) != e)
      throw verify_error("ring unit law fails on basis element " + std::to_string(i));
  }
  // associativity on basis triples
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const Vec& ij = mult_[i][j];
      for (int k = 0; k < dim_; ++k) {
        Vec ek(dim_, 0);
        ek[k] = 1;
        Vec lhs = multiply(ij, ek);
        Vec ei(dim_, 0);
        ei[i] = 1;
        Vec rhs = multiply(ei, mult_[j][k]);
        if (lhs != rhs) throw verify_error("ring associativity fails on a basis triple");
      }
    }
}

Vec FiniteRing::multiply(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw input_error("ring element length mismatch");
  Vec out(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < dim_; ++j) {
      if (!y[j]) continue;
      uint32_t c = field_.mul(x[i], y[j]);
      const Vec& m = mult_[i][j];
      for (int k = 0; k < dim_; ++k)
        if (m[k]) out[k] = field_.add(out[k], field_.mul(c, m[k]));
    }
  }
  return out;
}

Matrix FiniteRing::left_mult_matrix(const Vec& x) const {
  Matrix out(field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c)
        out.set(r, c, field_.add(out.at(r, c), field_.mul(x[i], left_basis_[i].at(r, c))));
  }
  return out;
}

bool FiniteRing::is_invertible(const Vec& x) const {
  return rank_of(left_mult_matrix(x)) == dim_;
}

bool FiniteRing::is_commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (mult_[i][j] != mult_[j][i]) return false;
  return true;
}

EndRing end_ring(const Module& x) {
  HomSpace h = hom_basis(x, x);
  const PrimeField& f = x.algebra()->field();
  std::vector<std::vector<Vec>> mult(h.dim(), std::vector<Vec>(h.dim()));
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j) {
      Morphism comp = compose(h.basis[i], h.basis[j]);
      auto c = h.coordinates(comp);
      if (!c) throw verify_error("endomorphism composition left the hom space");
      mult[i][j] = *c;
    }
  Vec unit;
  if (x.total_dim() == 0) {
    unit = Vec{};
  } else {
    auto u = h.coordinates(identity_morphism(x));
    if (!u) throw verify_error("identity not in the endomorphism space");
    unit = *u;
  }
  return EndRing{FiniteRing(f, std::move(mult), std::move(unit)), std::move(h)};
}

namespace {

Subspace radical_impl(const FiniteRing& r, bool verify) {
  const PrimeField& f = r.field();
  const uint32_t p = f.p();
  const int d = r.dim();
  if (d == 0) return Subspace(f, 0);
  if (!fits_cap(p, d, enum_cap()))
    throw cap_exceeded("radical: ring of size " + std::to_string(p) + "^" + std::to_string(d) +
                       " exceeds the enumeration cap");
  if (!fits_cap(p, 2 * d, uint64_t{1} << 26))
    throw cap_exceeded("radical: quasi-invertibility pair sweep of size " + std::to_string(p) +
                       "^" + std::to_string(2 * d) + " exceeds the pair budget");
  Matrix id = Matrix::identity(f, d);
  std::vector<Vec> members;
  Vec x(d, 0);
  do {
    Matrix lx = r.left_mult_matrix(x);
    bool in_radical = true;
    Vec y(d, 0);
    do {
      Matrix ly = r.left_mult_matrix(y);
      if (rank_of(id - ly * lx) != d) {
        in_radical = false;
        break;
      }
    } while (advance(y, p));
    if (in_radical) members.push_back(x);
  } while (advance(x, p));
  Subspace j = Subspace::span_rows(f, d, members);
  // the membership set must already be a subspace
  uint64_t count = 1;
  for (int i = 0; i < j.dim(); ++i) count *= p;
  if (count != members.size())
    throw verify_error("radical membership set is not a subspace");
  if (verify) {
    // two-sided ideal
    for (int i = 0; i < j.dim(); ++i) {
      Vec ji = j.basis().row(i);
      for (int b = 0; b < d; ++b) {
        Vec eb(d, 0);
        eb[b] = 1;
        if (!j.contains_vector(r.multiply(ji, eb)) || !j.contains_vector(r.multiply(eb, ji)))
          throw verify_error("radical is not a two-sided ideal");
      }
    }
    // semisimple quotient: radical of r/J vanishes
    QuotientRing q = quotient_ring(r, j);
    if (radical_impl(q.ring, false).dim() != 0)
      throw verify_error("quotient by the radical has nonzero radical");
    // nilpotency: J^dim = 0 in the left regular representation, tracked
    // as spans of flattened matrices
    if (j.dim() > 0) {
      auto flatten = [&](const Matrix& m) {
        Vec v(static_cast<size_t>(d) * d);
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) v[static_cast<size_t>(a) * d + b] = m.at(a, b);
        return v;
      };
      std::vector<Matrix> gens;
      for (int i = 0; i < j.dim(); ++i) gens.push_back(r.left_mult_matrix(j.basis().row(i)));
      std::vector<Matrix> power = gens;
      for (int e = 1; e <= d && !power.empty(); ++e) {
        std::vector<Vec> rows;
        for (const Matrix& a : power)
          for (const Matrix& b : gens) rows.push_back(flatten(a * b));
        Subspace span = Subspace::span_rows(f, d * d, rows);
        power.clear();
        for (int i = 0; i < span.dim(); ++i) {
          Vec row = span.basis().row(i);
          Matrix m(f, d, d);
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) m.set(a, b, row[static_cast<size_t>(a) * d + b]);
          power.push_back(std::move(m));
        }
      }
      if (!power.empty()) throw verify_error("radical is not nilpotent");
    }
  }
  return j;
}

} // namespace

Subspace jacobson_radical(const FiniteRing& r) { return radical_impl(r, true); }

bool is_local(const FiniteRing& r) {
  if (r.dim() == 0) return false; // zero ring
  Subspace j = radical_impl(r, true);
  const uint32_t p = r.field().p();
  Vec x(r.dim(), 0);
  do {
    if (!j.contains_vector(x) && !r.is_invertible(x)) return false;
  } while (advance(x, p));
  return true;
}

QuotientRing quotient_ring(const FiniteRing& r, const Subspace& ideal) {
  const PrimeField& f = r.field();
  const int d = r.dim();
  if (ideal.ambient() != d) throw input_error("quotient_ring: ambient mismatch");
  RrefResult rr = rref(ideal.basis());
  std::vector<bool> pivot(d, false);
  for (int p : rr.pivots) pivot[p] = true;
  std::vector<int> rep;
  for (int c = 0; c < d; ++c)
    if (!pivot[c]) rep.push_back(c);
  const int qd = static_cast<int>(rep.size());
  Matrix proj(f, qd, d);
  for (int c = 0; c < d; ++c) {
    Vec e(d, 0);
    e[c] = 1;
    Vec red = ideal.reduce(e);
    for (int i = 0; i < qd; ++i) proj.set(i, c, red[rep[i]]);
  }
  auto project = [&](const Vec& v) {
    Vec red = ideal.reduce(v);
    Vec out(qd, 0);
    for (int i = 0; i < qd; ++i) out[i] = red[rep[i]];
    return out;
  };
  std::vector<std::vector<Vec>> mult(qd, std::vector<Vec>(qd));
  for (int i = 0; i < qd; ++i)
    for (int j = 0; j < qd; ++j) {
      Vec a(d, 0), b(d, 0);
      a[rep[i]] = 1;
      b[rep[j]] = 1;
      mult[i][j] = project(r.multiply(a, b));
    }
  Vec unit = project(r.unit());
  return {FiniteRing(f, std::move(mult), std::move(unit)), proj};
}

RingClass classify_ring(const FiniteRing& r) {
  const uint32_t p = r.field().p();
  if (!fits_cap(p, r.dim(), enum_cap()))
    throw cap_exceeded("classify_ring: ring exceeds the enumeration cap");
  RingClass out;
  out.order = 1;
  for (int i = 0; i < r.dim(); ++i) out.order *= p;
  out.commutative = r.is_commutative();
  out.division_ring = true;
  Vec x(r.dim(), 0);
  do {
    bool zero = true;
    for (auto v : x) zero &= (v == 0);
    if (zero) continue;
    if (!r.is_invertible(x)) {
      out.division_ring = false;
      break;
    }
  } while (advance(x, p));
  out.field = out.commutative && out.division_ring;
  return out;
}

} // namespace mqd
