#include "mqd/gamma_module.hpp"

namespace mqd {

namespace {

Module zero_module_for(const std::shared_ptr<const PathAlgebra>& alg) {
  const Quiver& q = alg->quiver();
  std::vector<int> dims(q.vertex_count(), 0);
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) maps.push_back(Matrix(alg->field(), 0, 0));
  return Module(alg, dims, maps);
}

} // namespace

Matrix total_matrix(const Morphism& f) {
  const PrimeField& fld = f.source().algebra()->field();
  Matrix out(fld, f.target().total_dim(), f.source().total_dim());
  int nv = static_cast<int>(f.source().dims().size());
  for (int v = 0; v < nv; ++v) {
    int ro = f.target().vertex_offset(v), co = f.source().vertex_offset(v);
    for (int i = 0; i < f.block(v).rows(); ++i)
      for (int j = 0; j < f.block(v).cols(); ++j) out.set(ro + i, co + j, f.block(v).at(i, j));
  }
  return out;
}

GammaModule gamma_module(const std::vector<Module>& c_list, const Module& y) {
  for (const Module& c : c_list)
    if (!compatible_algebras(c, y)) throw input_error("gamma_module across algebras");
  Module c_sum = c_list.empty() ? zero_module_for(y.algebra()) : direct_sum(c_list).sum;
  EndRing gamma = end_ring(c_sum);
  HomSpace hom = hom_basis(c_sum, y);
  std::vector<Matrix> action;
  for (const Morphism& g : gamma.hom.basis) action.push_back(precompose_matrix(hom, hom, g));
  // contravariance on all basis pairs: act(gi . gj) = act(gj) * act(gi)
  const PrimeField& f = y.algebra()->field();
  for (int i = 0; i < gamma.ring.dim(); ++i)
    for (int j = 0; j < gamma.ring.dim(); ++j) {
      const Vec& prod = gamma.ring.basis_product(i, j);
      Matrix lhs(f, hom.dim(), hom.dim());
      for (int k = 0; k < gamma.ring.dim(); ++k)
        if (prod[k]) lhs = lhs + action[k].scaled(prod[k]);
      if (lhs != action[j] * action[i])
        throw verify_error("gamma action is not contravariant on a basis pair");
    }
  return GammaModule{std::move(c_sum), y, std::move(gamma), std::move(hom), std::move(action)};
}

Subspace image_subfunctor(const GammaModule& gm, const Morphism& alpha) {
  if (!alpha.target().same_space(gm.y)) throw input_error("image_subfunctor: target is not Y");
  HomSpace hom_cx = hom_basis(gm.c_sum, alpha.source());
  if (hom_cx.dim() == 0) return Subspace(gm.y.algebra()->field(), gm.dim());
  Matrix post = postcompose_matrix(hom_cx, gm.hom, alpha);
  Subspace im = image_space(post);
  if (!is_gamma_stable(gm, im))
    throw verify_error("image subfunctor is not Gamma-stable");
  return im;
}

bool is_gamma_stable(const GammaModule& gm, const Subspace& h) {
  if (h.ambient() != gm.dim()) throw input_error("subspace has wrong ambient dimension");
  for (const Matrix& a : gm.action)
    if (!h.contains(apply_to_subspace(a, h))) return false;
  return true;
}

} // namespace mqd
