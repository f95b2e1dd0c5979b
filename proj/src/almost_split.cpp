#include "mqd/almost_split.hpp"

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

} // namespace

RightAlmostSplitResult right_almost_split(const Module& y, const Universe& u) {
  EndRing er = end_ring(y);
  if (!is_local(er.ring)) throw input_error("right_almost_split: End(Y) is not local");
  Subspace rad = jacobson_radical(er.ring);
  GammaModule gm = gamma_module({y}, y);
  if (gm.dim() != er.ring.dim()) throw verify_error("End coordinates disagree");
  RightAlmostSplitResult out{construct_determined(gm, rad, u)};
  out.not_retraction = !is_retraction(out.det.alpha);
  // sweep every morphism T -> Y (non-retractions do not form a subspace,
  // so this is a genuine element enumeration)
  out.every_non_retraction_factors = true;
  const uint32_t p = y.algebra()->field().p();
  for (const Module& t : u.modules) {
    HomSpace h = hom_basis(t, y);
    if (!fits_cap(p, h.dim(), enum_cap()))
      throw cap_exceeded("right_almost_split: hom element sweep exceeds the cap");
    Vec c(h.dim(), 0);
    while (advance(c, p)) {
      Morphism beta = h.from_coordinates(c);
      if (is_retraction(beta)) continue;
      if (!factors_through(beta, out.det.alpha)) {
        out.every_non_retraction_factors = false;
        break;
      }
    }
    if (!out.every_non_retraction_factors) break;
  }
  return out;
}

AlmostSplitSequence almost_split_sequence(const Module& z, const Universe& u) {
  // projectives admit no almost split sequence ending at them
  for (int v = 0; v < z.algebra()->quiver().vertex_count(); ++v)
    if (is_isomorphic(z, projective_module(z.algebra(), v)))
      throw input_error("almost_split_sequence: Z is projective");
  RightAlmostSplitResult ras = right_almost_split(z, u); // checks locality
  AlmostSplitSequence out{factor_morphism(ras.det.alpha).kernel_inclusion, ras.det.alpha};
  const Morphism& pi = out.projection;
  const Morphism& iota = out.inclusion;
  out.right_almost_split_ok = ras.ras_verified();
  out.short_exact = pi.is_epi() && iota.is_mono() && compose(pi, iota).is_zero();
  if (out.short_exact) {
    for (size_t v = 0; v < iota.blocks().size(); ++v)
      out.short_exact &= iota.source().dim(static_cast<int>(v)) +
                             pi.target().dim(static_cast<int>(v)) ==
                         pi.source().dim(static_cast<int>(v));
  }
  out.non_split = out.short_exact && !is_split_exact(iota, pi);
  // left almost split: iota is not a section and every non-section X -> T
  // factors as h . iota
  out.left_almost_split_ok = !is_section(iota);
  const uint32_t p = z.algebra()->field().p();
  for (const Module& t : u.modules) {
    if (!out.left_almost_split_ok) break;
    HomSpace h = hom_basis(iota.source(), t);
    if (!fits_cap(p, h.dim(), enum_cap()))
      throw cap_exceeded("almost_split_sequence: hom element sweep exceeds the cap");
    Vec c(h.dim(), 0);
    while (advance(c, p)) {
      Morphism g = h.from_coordinates(c);
      if (is_section(g)) continue;
      if (!solve_precompose(iota, g)) {
        out.left_almost_split_ok = false;
        break;
      }
    }
  }
  return out;
}

EndRadCompare end_mod_rad_compare(const Module& x, const Module& z) {
  auto classify = [](const Module& m) {
    EndRing er = end_ring(m);
    Subspace rad = jacobson_radical(er.ring);
    return classify_ring(quotient_ring(er.ring, rad).ring);
  };
  EndRadCompare out{classify(x), classify(z)};
  out.isomorphic = out.x_class.field && out.z_class.field && out.x_class.order == out.z_class.order;
  return out;
}

ForgetfulFh forgetful_fh(const Module& c, const Subspace& h, const Module& x) {
  if (h.ambient() != c.total_dim()) throw input_error("forgetful_fh: ambient mismatch");
  const PrimeField& f = c.algebra()->field();
  HomSpace hom_xc = hom_basis(x, c);
  Subspace acc = Subspace::full(f, x.total_dim());
  for (const Morphism& a : hom_xc.basis) acc = acc.meet(preimage(total_matrix(a), h));
  bool stable = true;
  for (const Morphism& e : hom_basis(c, c).basis)
    if (!h.contains(apply_to_subspace(total_matrix(e), h))) {
      stable = false;
      break;
    }
  return {acc, stable};
}

} // namespace mqd
