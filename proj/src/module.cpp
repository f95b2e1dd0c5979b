#include "mqd/module.hpp"

#include <algorithm>

#include "mqd/hom.hpp"

namespace mqd {

Module::Module(std::shared_ptr<const PathAlgebra> alg, std::vector<int> dims,
               std::vector<Matrix> maps)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!alg_) throw input_error("module without algebra");
  const Quiver& q = alg_->quiver();
  if (static_cast<int>(dims_.size()) != q.vertex_count())
    throw input_error("module dimension vector length mismatch");
  for (int d : dims_)
    if (d < 0) throw input_error("negative vertex dimension");
  if (static_cast<int>(maps_.size()) != q.arrow_count())
    throw input_error("module arrow map count mismatch");
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (maps_[a].rows() != dims_[ar.target] || maps_[a].cols() != dims_[ar.source])
      throw input_error("arrow map shape mismatch at arrow " + ar.name + ": expected " +
                        std::to_string(dims_[ar.target]) + "x" + std::to_string(dims_[ar.source]));
    if (maps_[a].field() != alg_->field()) throw input_error("arrow map field mismatch");
  }
  offsets_.resize(dims_.size());
  total_ = 0;
  for (size_t v = 0; v < dims_.size(); ++v) {
    offsets_[v] = total_;
    total_ += dims_[v];
  }
}

Matrix Module::path_matrix(const std::vector<int>& arrows) const {
  if (arrows.empty()) throw input_error("path_matrix needs at least one arrow");
  Matrix cur = maps_[arrows[0]];
  for (size_t i = 1; i < arrows.size(); ++i) cur = maps_[arrows[i]] * cur;
  return cur;
}

Matrix Module::total_arrow_matrix(int a) const {
  const Arrow& ar = alg_->quiver().arrow(a);
  Matrix out(alg_->field(), total_, total_);
  for (int i = 0; i < maps_[a].rows(); ++i)
    for (int j = 0; j < maps_[a].cols(); ++j)
      out.set(offsets_[ar.target] + i, offsets_[ar.source] + j, maps_[a].at(i, j));
  return out;
}

Matrix Module::total_vertex_projection(int v) const {
  Matrix out(alg_->field(), total_, total_);
  for (int i = 0; i < dims_[v]; ++i) out.set(offsets_[v] + i, offsets_[v] + i, 1);
  return out;
}

bool Module::same_space(const Module& o) const {
  return compatible_algebras(*this, o) && dims_ == o.dims_;
}

bool compatible_algebras(const Module& a, const Module& b) {
  if (a.algebra() == b.algebra()) return true;
  return a.algebra()->same_structure(*b.algebra());
}

ValidationReport validate(const Module& m) {
  ValidationReport rep;
  const PathAlgebra& alg = *m.algebra();
  for (size_t r = 0; r < alg.relations().size(); ++r) {
    const Relation& rel = alg.relations()[r];
    // evaluate sum of coeff * path matrices
    std::optional<Matrix> acc;
    const PrimeField& f = alg.field();
    for (const RelationTerm& t : rel) {
      std::vector<int> arrows;
      for (const std::string& n : t.path) arrows.push_back(alg.quiver().arrow_index(n));
      Matrix pm = m.path_matrix(arrows).scaled(f.reduce(t.coeff));
      acc = acc ? *acc + pm : pm;
    }
    if (acc && !acc->is_zero()) {
      rep.ok = false;
      std::string terms;
      for (const RelationTerm& t : rel) {
        if (!terms.empty()) terms += " + ";
        terms += std::to_string(t.coeff) + "*(";
        for (size_t i = 0; i < t.path.size(); ++i)
          terms += (i ? "*" : "") + t.path[i];
        terms += ")";
      }
      rep.violations.push_back("relation " + std::to_string(r) + " [" + terms +
                               "] does not act by zero");
    }
  }
  return rep;
}

Morphism::Morphism(Module source, Module target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  if (!compatible_algebras(source_, target_)) throw input_error("morphism across algebras");
  const Quiver& q = source_.algebra()->quiver();
  if (static_cast<int>(blocks_.size()) != q.vertex_count())
    throw input_error("morphism block count mismatch");
  for (int v = 0; v < q.vertex_count(); ++v)
    if (blocks_[v].rows() != target_.dim(v) || blocks_[v].cols() != source_.dim(v))
      throw input_error("morphism block shape mismatch at vertex " + q.vertex_name(v));
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (target_.map(a) * blocks_[ar.source] != blocks_[ar.target] * source_.map(a))
      throw verify_error("intertwining identity fails at arrow " + ar.name);
  }
}

bool Morphism::is_zero() const {
  for (const Matrix& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

bool Morphism::is_mono() const {
  for (const Matrix& b : blocks_)
    if (rank_of(b) != b.cols()) return false;
  return true;
}

bool Morphism::is_epi() const {
  for (const Matrix& b : blocks_)
    if (rank_of(b) != b.rows()) return false;
  return true;
}

bool Morphism::is_iso() const {
  for (const Matrix& b : blocks_) {
    if (b.rows() != b.cols()) return false;
    if (rank_of(b) != b.rows()) return false;
  }
  return true;
}

Morphism Morphism::inverse() const {
  std::vector<Matrix> inv;
  for (const Matrix& b : blocks_) {
    auto i = mqd::inverse(b);
    if (!i) throw input_error("inverse of a non-invertible morphism");
    inv.push_back(*i);
  }
  return Morphism(target_, source_, std::move(inv));
}

Morphism Morphism::operator+(const Morphism& o) const {
  std::vector<Matrix> bl;
  for (size_t v = 0; v < blocks_.size(); ++v) bl.push_back(blocks_[v] + o.blocks_[v]);
  return Morphism(source_, target_, std::move(bl));
}

Morphism Morphism::operator-(const Morphism& o) const {
  std::vector<Matrix> bl;
  for (size_t v = 0; v < blocks_.size(); ++v) bl.push_back(blocks_[v] - o.blocks_[v]);
  return Morphism(source_, target_, std::move(bl));
}

Morphism Morphism::scaled(uint32_t c) const {
  std::vector<Matrix> bl;
  for (const Matrix& b : blocks_) bl.push_back(b.scaled(c));
  return Morphism(source_, target_, std::move(bl));
}

bool Morphism::operator==(const Morphism& o) const {
  return source_.same_space(o.source_) && target_.same_space(o.target_) && blocks_ == o.blocks_;
}

Morphism identity_morphism(const Module& m) {
  std::vector<Matrix> bl;
  for (int v = 0; v < static_cast<int>(m.dims().size()); ++v)
    bl.push_back(Matrix::identity(m.algebra()->field(), m.dim(v)));
  return Morphism(m, m, std::move(bl));
}

Morphism zero_morphism(const Module& src, const Module& tgt) {
  std::vector<Matrix> bl;
  for (int v = 0; v < static_cast<int>(src.dims().size()); ++v)
    bl.push_back(Matrix(src.algebra()->field(), tgt.dim(v), src.dim(v)));
  return Morphism(src, tgt, std::move(bl));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!f.target().same_space(g.source())) throw input_error("composition shape mismatch");
  std::vector<Matrix> bl;
  for (size_t v = 0; v < f.blocks().size(); ++v) bl.push_back(g.block(static_cast<int>(v)) * f.block(static_cast<int>(v)));
  return Morphism(f.source(), g.target(), std::move(bl));
}

DirectSum direct_sum(const std::vector<Module>& ms) {
  if (ms.empty()) throw input_error("direct sum of an empty list needs an algebra; use a zero module");
  auto alg = ms[0].algebra();
  for (const Module& m : ms)
    if (!compatible_algebras(ms[0], m)) throw input_error("direct sum across algebras");
  const Quiver& q = alg->quiver();
  const PrimeField& f = alg->field();
  std::vector<int> dims(q.vertex_count(), 0);
  for (const Module& m : ms)
    for (int v = 0; v < q.vertex_count(); ++v) dims[v] += m.dim(v);
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix big(f, dims[ar.target], dims[ar.source]);
    int ro = 0, co = 0;
    for (const Module& m : ms) {
      for (int i = 0; i < m.map(a).rows(); ++i)
        for (int j = 0; j < m.map(a).cols(); ++j) big.set(ro + i, co + j, m.map(a).at(i, j));
      ro += m.dim(ar.target);
      co += m.dim(ar.source);
    }
    maps.push_back(std::move(big));
  }
  Module sum(alg, dims, maps);
  DirectSum out{sum, {}, {}};
  std::vector<int> off(q.vertex_count(), 0);
  for (const Module& m : ms) {
    std::vector<Matrix> inj, prj;
    for (int v = 0; v < q.vertex_count(); ++v) {
      Matrix in(f, dims[v], m.dim(v));
      Matrix pr(f, m.dim(v), dims[v]);
      for (int i = 0; i < m.dim(v); ++i) {
        in.set(off[v] + i, i, 1);
        pr.set(i, off[v] + i, 1);
      }
      inj.push_back(std::move(in));
      prj.push_back(std::move(pr));
    }
    out.inject.emplace_back(m, sum, std::move(inj));
    out.project.emplace_back(sum, m, std::move(prj));
    for (int v = 0; v < q.vertex_count(); ++v) off[v] += m.dim(v);
  }
  return out;
}

SubmoduleResult submodule(const Module& m, const std::vector<Subspace>& spaces) {
  const Quiver& q = m.algebra()->quiver();
  if (static_cast<int>(spaces.size()) != q.vertex_count())
    throw input_error("submodule: space count mismatch");
  std::vector<int> dims;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (spaces[v].ambient() != m.dim(v)) throw input_error("submodule: ambient mismatch");
    dims.push_back(spaces[v].dim());
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    // solve B_t^T * N = M_a * B_s^T
    Matrix rhs = m.map(a) * spaces[ar.source].basis().transpose();
    auto n = solve(spaces[ar.target].basis().transpose(), rhs);
    if (!n) throw input_error("submodule data is not arrow-stable at arrow " + ar.name);
    maps.push_back(*n);
  }
  Module sub(m.algebra(), dims, maps);
  std::vector<Matrix> inc;
  for (int v = 0; v < q.vertex_count(); ++v) inc.push_back(spaces[v].basis().transpose());
  return {sub, Morphism(sub, m, std::move(inc))};
}

QuotientResult quotient(const Module& m, const std::vector<Subspace>& spaces) {
  const Quiver& q = m.algebra()->quiver();
  const PrimeField& f = m.algebra()->field();
  if (static_cast<int>(spaces.size()) != q.vertex_count())
    throw input_error("quotient: space count mismatch");
  // projection extracts non-pivot coordinates after reduction by the subspace
  std::vector<Matrix> proj;
  std::vector<int> dims;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (spaces[v].ambient() != m.dim(v)) throw input_error("quotient: ambient mismatch");
    RrefResult rr = rref(spaces[v].basis());
    std::vector<bool> pivot(m.dim(v), false);
    for (int p : rr.pivots) pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.dim(v); ++c)
      if (!pivot[c]) free_cols.push_back(c);
    Matrix pv(f, static_cast<int>(free_cols.size()), m.dim(v));
    for (int c = 0; c < m.dim(v); ++c) {
      Vec e(m.dim(v), 0);
      e[c] = 1;
      Vec red = spaces[v].reduce(e);
      for (size_t i = 0; i < free_cols.size(); ++i) pv.set(static_cast<int>(i), c, red[free_cols[i]]);
    }
    proj.push_back(std::move(pv));
    dims.push_back(static_cast<int>(free_cols.size()));
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    // section embeds quotient coordinates at the free columns
    RrefResult rr = rref(spaces[ar.source].basis());
    std::vector<bool> pivot(m.dim(ar.source), false);
    for (int p : rr.pivots) pivot[p] = true;
    Matrix sec(f, m.dim(ar.source), dims[ar.source]);
    int k = 0;
    for (int c = 0; c < m.dim(ar.source); ++c)
      if (!pivot[c]) sec.set(c, k++, 1);
    Matrix qa = proj[ar.target] * m.map(a) * sec;
    maps.push_back(qa);
  }
  Module qm(m.algebra(), dims, maps);
  Morphism pr(m, qm, proj);
  // well-definedness: projection must intertwine (checked by Morphism ctor)
  return {qm, pr};
}

Factorization factor_morphism(const Morphism& fm) {
  const Quiver& q = fm.source().algebra()->quiver();
  std::vector<Subspace> ker, im;
  for (int v = 0; v < q.vertex_count(); ++v) {
    ker.push_back(kernel_space(fm.block(v)));
    im.push_back(image_space(fm.block(v)));
  }
  SubmoduleResult K = submodule(fm.source(), ker);
  SubmoduleResult I = submodule(fm.target(), im);
  QuotientResult C = quotient(fm.target(), im);
  // corestriction: coordinates of f(x) in the image basis
  std::vector<Matrix> co;
  for (int v = 0; v < q.vertex_count(); ++v) {
    auto c = solve(im[v].basis().transpose(), fm.block(v));
    if (!c) throw verify_error("corestriction solve failed");
    co.push_back(*c);
  }
  Morphism corestrict(fm.source(), I.sub, std::move(co));
  return {K.sub, K.inclusion, I.sub, I.inclusion, corestrict, C.quot, C.projection};
}

Module simple_module(std::shared_ptr<const PathAlgebra> alg, int v) {
  const Quiver& q = alg->quiver();
  if (v < 0 || v >= q.vertex_count()) throw input_error("unknown vertex");
  std::vector<int> dims(q.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a)
    maps.push_back(Matrix(alg->field(), dims[q.arrow(a).target], dims[q.arrow(a).source]));
  return Module(alg, dims, maps);
}

Module projective_module(std::shared_ptr<const PathAlgebra> alg, int v) {
  const Quiver& q = alg->quiver();
  if (v < 0 || v >= q.vertex_count()) throw input_error("unknown vertex");
  // vertex-w component: basis paths from v to w; arrows act by appending
  std::vector<std::vector<int>> comp(q.vertex_count());
  for (int w = 0; w < q.vertex_count(); ++w) comp[w] = alg->basis_indices(v, w);
  std::vector<int> dims;
  for (int w = 0; w < q.vertex_count(); ++w) dims.push_back(static_cast<int>(comp[w].size()));
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix ma(alg->field(), dims[ar.target], dims[ar.source]);
    for (size_t j = 0; j < comp[ar.source].size(); ++j) {
      const BasisPath& bp = alg->basis()[comp[ar.source][j]];
      std::vector<int> longer = bp.arrows;
      longer.push_back(a);
      PathAlgebra::Elem e = alg->path_elem(longer);
      for (size_t i = 0; i < comp[ar.target].size(); ++i)
        ma.set(static_cast<int>(i), static_cast<int>(j), e[comp[ar.target][i]]);
    }
    maps.push_back(std::move(ma));
  }
  return Module(alg, dims, maps);
}

Module dual_module(const Module& m) {
  auto opp = m.algebra()->opposite();
  const Quiver& q = m.algebra()->quiver();
  // opposite keeps arrow order; arrow a: i->j becomes a: j->i with map M_a^T
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) maps.push_back(m.map(a).transpose());
  return Module(opp, m.dims(), maps);
}

Module injective_module(std::shared_ptr<const PathAlgebra> alg, int v) {
  auto opp = alg->opposite();
  Module pop = projective_module(opp, v);
  Module d = dual_module(pop); // over opp(opp), structurally the original
  if (!d.algebra()->same_structure(*alg)) throw verify_error("double opposite mismatch");
  std::vector<Matrix> maps;
  for (int a = 0; a < alg->quiver().arrow_count(); ++a) maps.push_back(d.map(a));
  return Module(alg, d.dims(), maps);
}

Module regular_module(std::shared_ptr<const PathAlgebra> alg) {
  std::vector<Module> ps;
  for (int v = 0; v < alg->quiver().vertex_count(); ++v) ps.push_back(projective_module(alg, v));
  return direct_sum(ps).sum;
}

bool is_split_exact(const Morphism& iota, const Morphism& pi) {
  if (!iota.target().same_space(pi.source())) throw input_error("sequence shape mismatch");
  if (!compose(pi, iota).is_zero()) throw input_error("not a complex: pi . iota != 0");
  if (!iota.is_mono()) throw input_error("iota is not mono");
  if (!pi.is_epi()) throw input_error("pi is not epi");
  for (size_t v = 0; v < iota.blocks().size(); ++v)
    if (iota.source().dim(static_cast<int>(v)) + pi.target().dim(static_cast<int>(v)) !=
        iota.target().dim(static_cast<int>(v)))
      throw input_error("dimensions not additive: sequence is not short exact");
  return solve_precompose(iota, identity_morphism(iota.source())).has_value();
}

} // namespace mqd
