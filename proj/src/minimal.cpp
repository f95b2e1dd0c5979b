#include "mqd/minimal.hpp"

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

Module zero_module_for(const std::shared_ptr<const PathAlgebra>& alg) {
  const Quiver& q = alg->quiver();
  std::vector<int> dims(q.vertex_count(), 0);
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) maps.push_back(Matrix(alg->field(), 0, 0));
  return Module(alg, dims, maps);
}

Morphism combine(const std::vector<Morphism>& basis, const Vec& c) {
  Morphism acc = basis[0].scaled(c[0]);
  for (size_t i = 1; i < basis.size(); ++i) acc = acc + basis[i].scaled(c[i]);
  return acc;
}

// Searches {id + psi | psi in K} for a non-invertible member. Returns the
// witness when found; certified=false when the search had to give up.
struct MinimalityScan {
  std::optional<Morphism> non_invertible;
  bool certified = true;
  std::string note;
};

MinimalityScan scan_affine_set(const Morphism& alpha) {
  const Module& x = alpha.source();
  MinimalityScan out;
  std::vector<Morphism> K = postcompose_kernel(alpha);
  if (K.empty()) {
    out.note = "kernel ideal is zero";
    return out;
  }
  Morphism id = identity_morphism(x);
  const uint32_t p = x.algebra()->field().p();
  if (fits_cap(p, static_cast<int>(K.size()), enum_cap())) {
    Vec c(K.size(), 0);
    while (advance(c, p)) {
      Morphism phi = id + combine(K, c);
      if (!phi.is_iso()) {
        out.non_invertible = phi;
        return out;
      }
    }
    out.note = "enumerated " + std::to_string(p) + "^" + std::to_string(K.size()) +
               " affine endomorphisms";
    return out;
  }
  // affine set too large: a right ideal of quasi-regular elements lies in
  // the radical, so K inside rad End certifies minimality
  try {
    EndRing e = end_ring(x);
    Subspace rad = jacobson_radical(e.ring);
    bool inside = true;
    for (const Morphism& psi : K) {
      auto c = e.hom.coordinates(psi);
      if (!c || !rad.contains_vector(*c)) {
        inside = false;
        break;
      }
    }
    if (inside) {
      out.note = "kernel ideal contained in rad End";
      return out;
    }
  } catch (const cap_exceeded&) {
    // fall through to the bounded scan
  }
  // bounded deterministic scan for a witness
  for (const Morphism& psi : K) {
    Morphism phi = id + psi;
    if (!phi.is_iso()) {
      out.non_invertible = phi;
      return out;
    }
  }
  for (size_t i = 0; i < K.size(); ++i)
    for (size_t j = i + 1; j < K.size(); ++j) {
      Morphism phi = id + K[i] + K[j];
      if (!phi.is_iso()) {
        out.non_invertible = phi;
        return out;
      }
    }
  out.certified = false;
  out.note = "uncertified: affine set too large and no witness found";
  return out;
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

} // namespace

bool is_right_minimal(const Morphism& alpha, bool* certified) {
  MinimalityScan s = scan_affine_set(alpha);
  if (certified) *certified = s.certified;
  return !s.non_invertible.has_value();
}

RightMinimalResult right_minimal_reduce(const Morphism& alpha) {
  const Module x = alpha.source();
  Morphism cur = alpha;
  Morphism emb = identity_morphism(x);
  std::vector<Module> kernel_parts;
  std::vector<Morphism> kernel_embs;
  bool certified = true;
  std::string witness;

  while (true) {
    MinimalityScan s = scan_affine_set(cur);
    if (!s.non_invertible) {
      certified = s.certified;
      witness = s.note;
      break;
    }
    // Fitting along phi: alpha . phi = alpha and phi is not invertible
    const Morphism& phi = *s.non_invertible;
    int n = 1;
    while (n < cur.source().total_dim()) n <<= 1;
    Morphism pw = morphism_power(phi, n);
    int nv = static_cast<int>(cur.source().dims().size());
    std::vector<Subspace> im, ker;
    for (int v = 0; v < nv; ++v) {
      im.push_back(image_space(pw.block(v)));
      ker.push_back(kernel_space(pw.block(v)));
    }
    SubmoduleResult a = submodule(cur.source(), im);
    SubmoduleResult b = submodule(cur.source(), ker);
    if (b.sub.total_dim() == 0) throw verify_error("Fitting produced no kernel part");
    Morphism restricted = compose(cur, b.inclusion);
    if (!restricted.is_zero()) throw verify_error("alpha does not vanish on the split part");
    kernel_parts.push_back(b.sub);
    kernel_embs.push_back(compose(emb, b.inclusion));
    emb = compose(emb, a.inclusion);
    cur = compose(cur, a.inclusion);
  }

  Module x_prime = cur.source();
  Module x_dprime = kernel_parts.empty() ? zero_module_for(x.algebra())
                                         : direct_sum(kernel_parts).sum;
  // assemble iso (X' + X'') -> X
  DirectSum pair = direct_sum(std::vector<Module>{x_prime, x_dprime});
  Morphism to_x = compose(emb, pair.project[0]);
  if (!kernel_parts.empty()) {
    DirectSum inner = direct_sum(kernel_parts);
    Morphism from_dprime = zero_morphism(x_dprime, x);
    for (size_t i = 0; i < kernel_parts.size(); ++i)
      from_dprime = from_dprime + compose(kernel_embs[i], inner.project[i]);
    to_x = to_x + compose(from_dprime, pair.project[1]);
  }
  if (!to_x.is_iso()) throw verify_error("right-minimal decomposition is not an isomorphism");
  // alpha . iso = [alpha', 0]
  Morphism check = compose(alpha, to_x);
  if (!(compose(check, pair.inject[0]) == cur) || !compose(check, pair.inject[1]).is_zero())
    throw verify_error("right-minimal decomposition does not factor alpha");

  return {cur, x_prime, x_dprime, to_x, certified, witness};
}

Morphism minimal_weak_kernel(const Morphism& beta) {
  return factor_morphism(beta).kernel_inclusion;
}

MinimalPresentation minimal_presentation(const Morphism& beta, const Universe* u) {
  RightMinimalResult rm = right_minimal_reduce(beta);
  Morphism kappa0 = minimal_weak_kernel(rm.reduced);
  RightMinimalResult krm = right_minimal_reduce(kappa0); // a monomorphism: no-op
  MinimalPresentation out{rm.reduced, krm.reduced, rm};
  if (!compose(out.beta_min, out.kappa).is_zero())
    throw verify_error("presentation is not a complex");
  if (u) {
    out.exactness_checked = true;
    for (const Module& t : u->modules) {
      HomSpace tk = hom_basis(t, out.kappa.source());
      HomSpace tx = hom_basis(t, out.beta_min.source());
      HomSpace ty = hom_basis(t, out.beta_min.target());
      Matrix a = postcompose_matrix(tk, tx, out.kappa);
      Matrix b = postcompose_matrix(tx, ty, out.beta_min);
      if (!(image_space(a) == kernel_space(b))) {
        out.exactness_ok = false;
        break;
      }
    }
  }
  return out;
}

} // namespace mqd
