#include <algorithm>
#include <string>

#include "mqd/caps.hpp"
#include "mqd/hom.hpp"
#include "mqd/module.hpp"

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

// coefficient odometer over GF(p)^n starting at zero
bool advance(Vec& v, uint32_t p) {
  for (auto& x : v) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

Module zero_module(const std::shared_ptr<const PathAlgebra>& alg) {
  const Quiver& q = alg->quiver();
  std::vector<int> dims(q.vertex_count(), 0);
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a)
    maps.push_back(Matrix(alg->field(), 0, 0));
  return Module(alg, dims, maps);
}

Morphism morphism_power(const Morphism& f, int n) {
  Morphism acc = identity_morphism(f.source());
  Morphism base = f;
  while (n) {
    if (n & 1) acc = compose(base, acc);
    base = compose(base, base);
    n >>= 1;
  }
  return acc;
}

struct Split {
  std::vector<Subspace> first, second; // complementary stable subspaces
};

// Fitting split along phi: nonzero proper kernel of phi^N yields
// X = im(phi^N) + ker(phi^N)
std::optional<Split> fitting_split(const Module& m, const Morphism& phi) {
  int n = 1;
  while (n < m.total_dim()) n <<= 1;
  Morphism pw = morphism_power(phi, n);
  int kdim = 0, nv = static_cast<int>(m.dims().size());
  Split s;
  for (int v = 0; v < nv; ++v) {
    s.second.push_back(kernel_space(pw.block(v)));
    s.first.push_back(image_space(pw.block(v)));
    kdim += s.second.back().dim();
  }
  if (kdim == 0 || kdim == m.total_dim()) return std::nullopt;
  // Fitting: the two must be complementary
  for (int v = 0; v < nv; ++v)
    if (s.first[v].meet(s.second[v]).dim() != 0 ||
        s.first[v].dim() + s.second[v].dim() != m.dim(v))
      return std::nullopt;
  return s;
}

void decompose_into(const Module& m, const Morphism& embed, Decomposition& out);

void split_and_recurse(const Module& m, const Morphism& embed, const Split& s,
                       Decomposition& out) {
  SubmoduleResult a = submodule(m, s.first);
  SubmoduleResult b = submodule(m, s.second);
  decompose_into(a.sub, compose(embed, a.inclusion), out);
  decompose_into(b.sub, compose(embed, b.inclusion), out);
}

void decompose_into(const Module& m, const Morphism& embed, Decomposition& out) {
  if (m.total_dim() == 0) return;
  HomSpace end = hom_basis(m, m);
  const uint32_t p = m.algebra()->field().p();
  if (fits_cap(p, end.dim(), enum_cap())) {
    Morphism id = identity_morphism(m);
    Vec c(end.dim(), 0);
    while (advance(c, p)) {
      Morphism e = end.from_coordinates(c);
      if (e.is_zero() || e == id) continue;
      if (!(compose(e, e) == e)) continue;
      Split s;
      int nv = static_cast<int>(m.dims().size());
      for (int v = 0; v < nv; ++v) {
        s.first.push_back(image_space(e.block(v)));
        s.second.push_back(kernel_space(e.block(v)));
      }
      split_and_recurse(m, embed, s, out);
      return;
    }
    // no nontrivial idempotent in all of End: indecomposable
    out.parts.push_back(m);
    out.inclusions.push_back(embed);
    return;
  }
  // endomorphism ring too large to enumerate: Fitting on a deterministic
  // candidate sequence
  std::vector<Morphism> candidates = end.basis;
  for (int i = 0; i < end.dim(); ++i)
    for (int j = i + 1; j < end.dim(); ++j) candidates.push_back(end.basis[i] + end.basis[j]);
  for (const Morphism& phi : candidates) {
    auto s = fitting_split(m, phi);
    if (s) {
      split_and_recurse(m, embed, *s, out);
      return;
    }
  }
  throw cap_exceeded("decompose: endomorphism ring of size " + std::to_string(p) + "^" +
                     std::to_string(end.dim()) +
                     " exceeds the enumeration cap and Fitting candidates gave no splitting");
}

} // namespace

Decomposition decompose(const Module& m) {
  Decomposition out;
  decompose_into(m, identity_morphism(m), out);
  return out;
}

Morphism decomposition_iso(const Module& m, const Decomposition& d) {
  if (d.parts.empty()) {
    Module z = zero_module(m.algebra());
    Morphism iso = zero_morphism(z, m);
    if (m.total_dim() != 0) throw verify_error("empty decomposition of a nonzero module");
    return iso;
  }
  DirectSum ds = direct_sum(d.parts);
  Morphism acc = zero_morphism(ds.sum, m);
  for (size_t k = 0; k < d.parts.size(); ++k)
    acc = acc + compose(d.inclusions[k], ds.project[k]);
  if (!acc.is_iso()) throw verify_error("decomposition does not assemble to an isomorphism");
  return acc;
}

std::optional<Morphism> is_isomorphic(const Module& m, const Module& n) {
  if (!compatible_algebras(m, n)) throw input_error("isomorphism test across algebras");
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.total_dim() == 0) return zero_morphism(m, n);
  HomSpace h = hom_basis(m, n);
  if (h.dim() == 0) return std::nullopt;
  for (const Morphism& f : h.basis)
    if (f.is_iso()) return f;
  {
    Morphism s = h.basis[0];
    for (int i = 1; i < h.dim(); ++i) s = s + h.basis[i];
    if (s.is_iso()) return s;
  }
  const uint32_t p = m.algebra()->field().p();
  if (fits_cap(p, h.dim(), enum_cap())) {
    Vec c(h.dim(), 0);
    while (advance(c, p)) {
      Morphism f = h.from_coordinates(c);
      if (f.is_iso()) return f;
    }
    return std::nullopt;
  }
  // fall back to matching indecomposable summands
  Decomposition dm = decompose(m), dn = decompose(n);
  if (dm.parts.size() != dn.parts.size()) return std::nullopt;
  std::vector<bool> used(dn.parts.size(), false);
  std::vector<std::pair<size_t, Morphism>> match;
  for (size_t i = 0; i < dm.parts.size(); ++i) {
    bool ok = false;
    for (size_t j = 0; j < dn.parts.size(); ++j) {
      if (used[j]) continue;
      auto phi = is_isomorphic(dm.parts[i], dn.parts[j]);
      if (phi) {
        used[j] = true;
        match.emplace_back(j, *phi);
        ok = true;
        break;
      }
    }
    if (!ok) return std::nullopt;
  }
  DirectSum sm = direct_sum(dm.parts), sn = direct_sum(dn.parts);
  Morphism g = zero_morphism(sm.sum, sn.sum);
  for (size_t i = 0; i < dm.parts.size(); ++i)
    g = g + compose(sn.inject[match[i].first], compose(match[i].second, sm.project[i]));
  Morphism iso_m = decomposition_iso(m, dm);
  Morphism iso_n = decomposition_iso(n, dn);
  Morphism result = compose(iso_n, compose(g, iso_m.inverse()));
  if (!result.is_iso()) throw verify_error("assembled isomorphism is not invertible");
  return result;
}

Module nakayama(const Module& p) {
  auto alg = p.algebra();
  const Quiver& q = alg->quiver();
  // precondition: p decomposes into projectives
  {
    Decomposition d = decompose(p);
    for (const Module& part : d.parts) {
      bool proj = false;
      for (int v = 0; v < q.vertex_count() && !proj; ++v)
        proj = is_isomorphic(part, projective_module(alg, v)).has_value();
      if (!proj) throw input_error("nakayama: input module is not projective");
    }
  }
  // H_w = Hom(p, P(w)); arrows act by postcomposing with left multiplication
  std::vector<Module> proj_w;
  std::vector<HomSpace> hw;
  for (int w = 0; w < q.vertex_count(); ++w) {
    proj_w.push_back(projective_module(alg, w));
    hw.push_back(hom_basis(p, proj_w[w]));
  }
  std::vector<int> dims;
  for (int w = 0; w < q.vertex_count(); ++w) dims.push_back(hw[w].dim());
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    int i = ar.source, j = ar.target;
    // lambda_a: P(j) -> P(i), prepend the arrow to each basis path
    std::vector<Matrix> blocks;
    for (int w = 0; w < q.vertex_count(); ++w) {
      auto from_idx = alg->basis_indices(j, w);
      auto to_idx = alg->basis_indices(i, w);
      Matrix b(alg->field(), static_cast<int>(to_idx.size()), static_cast<int>(from_idx.size()));
      for (size_t col = 0; col < from_idx.size(); ++col) {
        const BasisPath& bp = alg->basis()[from_idx[col]];
        std::vector<int> longer;
        longer.push_back(a);
        longer.insert(longer.end(), bp.arrows.begin(), bp.arrows.end());
        PathAlgebra::Elem e = alg->path_elem(longer);
        for (size_t row = 0; row < to_idx.size(); ++row)
          b.set(static_cast<int>(row), static_cast<int>(col), e[to_idx[row]]);
      }
      blocks.push_back(std::move(b));
    }
    Morphism lambda_a(proj_w[j], proj_w[i], std::move(blocks));
    Matrix la = postcompose_matrix(hw[j], hw[i], lambda_a); // H_j -> H_i
    maps.push_back(la.transpose());                          // dual: nu_i -> nu_j
  }
  return Module(alg, dims, maps);
}

Universe build_universe(std::shared_ptr<const PathAlgebra> alg, int dim_bound) {
  if (dim_bound < 1) throw input_error("universe dimension bound must be >= 1");
  Universe u;
  u.alg = alg;
  u.dim_bound = dim_bound;
  bool pruned = false;

  auto add_candidate = [&](const Module& cand, const std::string& prov) {
    bool changed = false;
    Decomposition d = decompose(cand);
    for (const Module& part : d.parts) {
      if (part.total_dim() == 0) continue;
      if (part.total_dim() > dim_bound) {
        pruned = true;
        continue;
      }
      bool known = false;
      for (const Module& ex : u.modules)
        if (is_isomorphic(part, ex)) {
          known = true;
          break;
        }
      if (!known) {
        u.modules.push_back(part);
        u.provenance.push_back(prov);
        changed = true;
      }
    }
    return changed;
  };

  const Quiver& q = alg->quiver();
  for (int v = 0; v < q.vertex_count(); ++v)
    add_candidate(simple_module(alg, v), "simple(" + q.vertex_name(v) + ")");
  for (int v = 0; v < q.vertex_count(); ++v)
    add_candidate(projective_module(alg, v), "projective(" + q.vertex_name(v) + ")");
  for (int v = 0; v < q.vertex_count(); ++v)
    add_candidate(injective_module(alg, v), "injective(" + q.vertex_name(v) + ")");

  // sweep whole hom spaces when they are small: factor parts of non-basis
  // combinations (diagonal maps, say) reach summands the basis misses
  const uint32_t p = alg->field().p();
  const uint64_t sweep_cap = std::min<uint64_t>(enum_cap(), 4096);
  bool changed = true;
  while (changed) {
    changed = false;
    size_t n = u.modules.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        HomSpace h = hom_basis(u.modules[i], u.modules[j]);
        std::string pair_tag = "hom(" + std::to_string(i) + "->" + std::to_string(j) + ")";
        if (fits_cap(p, h.dim(), sweep_cap)) {
          Vec c(h.dim(), 0);
          uint64_t k = 0;
          while (advance(c, p)) {
            Factorization fac = factor_morphism(h.from_coordinates(c));
            std::string tag = pair_tag + "@" + std::to_string(k++);
            changed |= add_candidate(fac.kernel, "kernel of " + tag);
            changed |= add_candidate(fac.image, "image of " + tag);
            changed |= add_candidate(fac.cokernel, "cokernel of " + tag);
          }
        } else {
          for (int k = 0; k < h.dim(); ++k) {
            Factorization fac = factor_morphism(h.basis[k]);
            std::string tag = pair_tag + "#" + std::to_string(k);
            changed |= add_candidate(fac.kernel, "kernel of " + tag);
            changed |= add_candidate(fac.image, "image of " + tag);
            changed |= add_candidate(fac.cokernel, "cokernel of " + tag);
          }
        }
      }
  }
  u.complete = !pruned;
  return u;
}

} // namespace mqd
