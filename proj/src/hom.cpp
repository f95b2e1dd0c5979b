#include "mqd/hom.hpp"

namespace mqd {

namespace {

// Layout of the flattened unknown phi: A -> B: per vertex, row-major block.
struct Layout {
  std::vector<int> offset;
  int total = 0;
  Layout(const Module& a, const Module& b) {
    int nv = static_cast<int>(a.dims().size());
    offset.resize(nv);
    for (int v = 0; v < nv; ++v) {
      offset[v] = total;
      total += b.dim(v) * a.dim(v);
    }
  }
  int index(const Module& a, int v, int r, int c) const {
    return offset[v] + r * a.dim(v) + c;
  }
};

// rows expressing the intertwining constraints of phi: A -> B
void intertwining_rows(const Module& a, const Module& b, const Layout& lay,
                       std::vector<Vec>& rows) {
  const Quiver& q = a.algebra()->quiver();
  const PrimeField& f = a.algebra()->field();
  for (int ar = 0; ar < q.arrow_count(); ++ar) {
    const Arrow& arr = q.arrow(ar);
    int i = arr.source, j = arr.target;
    // B_a * phi_i - phi_j * A_a = 0, entry (r, c): r in B_j rows, c in A_i cols
    for (int r = 0; r < b.dim(j); ++r)
      for (int c = 0; c < a.dim(i); ++c) {
        Vec row(lay.total, 0);
        for (int k = 0; k < b.dim(i); ++k) {
          int idx = lay.index(a, i, k, c);
          row[idx] = f.add(row[idx], b.map(ar).at(r, k));
        }
        for (int k = 0; k < a.dim(j); ++k) {
          int idx = lay.index(a, j, r, k);
          row[idx] = f.sub(row[idx], a.map(ar).at(k, c));
        }
        bool nz = false;
        for (auto x : row) nz |= (x != 0);
        if (nz) rows.push_back(std::move(row));
      }
  }
}

} // namespace

Vec morphism_to_vec(const Morphism& f) {
  Layout lay(f.source(), f.target());
  Vec out(lay.total, 0);
  int nv = static_cast<int>(f.source().dims().size());
  for (int v = 0; v < nv; ++v)
    for (int r = 0; r < f.target().dim(v); ++r)
      for (int c = 0; c < f.source().dim(v); ++c)
        out[lay.index(f.source(), v, r, c)] = f.block(v).at(r, c);
  return out;
}

Morphism vec_to_morphism(const Module& src, const Module& tgt, const Vec& v) {
  Layout lay(src, tgt);
  if (static_cast<int>(v.size()) != lay.total) throw input_error("flattened morphism length mismatch");
  std::vector<Matrix> blocks;
  int nv = static_cast<int>(src.dims().size());
  const PrimeField& f = src.algebra()->field();
  for (int w = 0; w < nv; ++w) {
    Matrix b(f, tgt.dim(w), src.dim(w));
    for (int r = 0; r < tgt.dim(w); ++r)
      for (int c = 0; c < src.dim(w); ++c) b.set(r, c, v[lay.index(src, w, r, c)]);
    blocks.push_back(std::move(b));
  }
  return Morphism(src, tgt, std::move(blocks));
}

HomSpace hom_basis(const Module& x, const Module& y) {
  if (!compatible_algebras(x, y)) throw input_error("hom across algebras");
  Layout lay(x, y);
  std::vector<Vec> rows;
  intertwining_rows(x, y, lay, rows);
  Subspace sol = rows.empty() ? Subspace::full(x.algebra()->field(), lay.total)
                              : kernel_space(Matrix::from_rows(x.algebra()->field(), lay.total, rows));
  HomSpace out{x, y, {}, sol};
  for (int r = 0; r < sol.dim(); ++r) out.basis.push_back(vec_to_morphism(x, y, sol.basis().row(r)));
  return out;
}

std::optional<Vec> HomSpace::coordinates(const Morphism& f) const {
  return coords.coordinates(morphism_to_vec(f));
}

Morphism HomSpace::from_coordinates(const Vec& c) const {
  if (static_cast<int>(c.size()) != dim()) throw input_error("hom coordinate length mismatch");
  const PrimeField& f = source.algebra()->field();
  Vec flat(coords.ambient(), 0);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < coords.ambient(); ++j)
      flat[j] = f.add(flat[j], f.mul(c[i], coords.basis().at(i, j)));
  return vec_to_morphism(source, target, flat);
}

namespace {

// shared core: solve for phi: A -> B subject to intertwining plus one
// composition constraint; post = true solves m.phi = rhs, else phi.m = rhs
std::optional<Morphism> solve_composition(const Morphism& m, const Morphism& rhs, bool post) {
  const Module& a = post ? rhs.source() : m.target();
  const Module& b = post ? m.source() : rhs.target();
  const PrimeField& f = a.algebra()->field();
  Layout lay(a, b);
  std::vector<Vec> rows;
  Vec rhs_col;
  intertwining_rows(a, b, lay, rows);
  rhs_col.assign(rows.size(), 0);
  int nv = static_cast<int>(a.dims().size());
  if (post) {
    // m: B -> C, rhs: A -> C; per vertex: m_v * phi_v = rhs_v
    const Module& cmod = m.target();
    if (!rhs.target().same_space(cmod)) throw input_error("solve: target mismatch");
    for (int v = 0; v < nv; ++v)
      for (int r = 0; r < cmod.dim(v); ++r)
        for (int c = 0; c < a.dim(v); ++c) {
          Vec row(lay.total, 0);
          for (int k = 0; k < b.dim(v); ++k) row[lay.index(a, v, k, c)] = m.block(v).at(r, k);
          rows.push_back(std::move(row));
          rhs_col.push_back(rhs.block(v).at(r, c));
        }
  } else {
    // m: C -> A, rhs: C -> B; per vertex: phi_v * m_v = rhs_v
    const Module& cmod = m.source();
    if (!rhs.source().same_space(cmod)) throw input_error("solve: source mismatch");
    for (int v = 0; v < nv; ++v)
      for (int r = 0; r < b.dim(v); ++r)
        for (int c = 0; c < cmod.dim(v); ++c) {
          Vec row(lay.total, 0);
          for (int k = 0; k < a.dim(v); ++k) row[lay.index(a, v, r, k)] = m.block(v).at(k, c);
          rows.push_back(std::move(row));
          rhs_col.push_back(rhs.block(v).at(r, c));
        }
  }
  if (rows.empty()) return zero_morphism(a, b);
  Matrix sys = Matrix::from_rows(f, lay.total, rows);
  Matrix bcol(f, static_cast<int>(rhs_col.size()), 1);
  for (size_t i = 0; i < rhs_col.size(); ++i) bcol.set(static_cast<int>(i), 0, rhs_col[i]);
  auto x = solve(sys, bcol);
  if (!x) return std::nullopt;
  return vec_to_morphism(a, b, x->col(0));
}

} // namespace

std::optional<Morphism> solve_postcompose(const Morphism& m, const Morphism& rhs) {
  return solve_composition(m, rhs, true);
}

std::optional<Morphism> solve_precompose(const Morphism& m, const Morphism& rhs) {
  return solve_composition(m, rhs, false);
}

std::vector<Morphism> postcompose_kernel(const Morphism& m) {
  const Module& a = m.source();
  const PrimeField& f = a.algebra()->field();
  Layout lay(a, a);
  std::vector<Vec> rows;
  intertwining_rows(a, a, lay, rows);
  int nv = static_cast<int>(a.dims().size());
  const Module& cmod = m.target();
  for (int v = 0; v < nv; ++v)
    for (int r = 0; r < cmod.dim(v); ++r)
      for (int c = 0; c < a.dim(v); ++c) {
        Vec row(lay.total, 0);
        for (int k = 0; k < a.dim(v); ++k) row[lay.index(a, v, k, c)] = m.block(v).at(r, k);
        bool nz = false;
        for (auto x : row) nz |= (x != 0);
        if (nz) rows.push_back(std::move(row));
      }
  Subspace sol = rows.empty() ? Subspace::full(f, lay.total)
                              : kernel_space(Matrix::from_rows(f, lay.total, rows));
  std::vector<Morphism> out;
  for (int r = 0; r < sol.dim(); ++r) out.push_back(vec_to_morphism(a, a, sol.basis().row(r)));
  return out;
}

std::optional<Morphism> factors_through(const Morphism& beta, const Morphism& alpha) {
  if (!beta.target().same_space(alpha.target()))
    throw input_error("factors_through: targets differ");
  return solve_postcompose(alpha, beta);
}

bool is_retraction(const Morphism& alpha) {
  return solve_postcompose(alpha, identity_morphism(alpha.target())).has_value();
}

bool is_section(const Morphism& alpha) {
  return solve_precompose(alpha, identity_morphism(alpha.source())).has_value();
}

Matrix postcompose_matrix(const HomSpace& from, const HomSpace& to, const Morphism& alpha) {
  Matrix out(alpha.source().algebra()->field(), to.dim(), from.dim());
  for (int j = 0; j < from.dim(); ++j) {
    Morphism comp = compose(alpha, from.basis[j]);
    auto c = to.coordinates(comp);
    if (!c) throw verify_error("postcompose image outside target hom space");
    for (int i = 0; i < to.dim(); ++i) out.set(i, j, (*c)[i]);
  }
  return out;
}

Matrix precompose_matrix(const HomSpace& from, const HomSpace& to, const Morphism& gamma) {
  Matrix out(gamma.source().algebra()->field(), to.dim(), from.dim());
  for (int j = 0; j < from.dim(); ++j) {
    Morphism comp = compose(from.basis[j], gamma);
    auto c = to.coordinates(comp);
    if (!c) throw verify_error("precompose image outside target hom space");
    for (int i = 0; i < to.dim(); ++i) out.set(i, j, (*c)[i]);
  }
  return out;
}

} // namespace mqd
