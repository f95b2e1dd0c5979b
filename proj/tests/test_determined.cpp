#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mqd/almost_split.hpp"
#include "mqd/determined.hpp"
#include "mqd/lattice.hpp"
#include "oracles.hpp"

using namespace mqd;

namespace {

std::shared_ptr<const PathAlgebra> dual_numbers() {
  Quiver q({"v"}, {{"e", "v", "v"}});
  return PathAlgebra::build(PrimeField(2), q, {{{1, {"e", "e"}}}}, 2);
}

std::shared_ptr<const PathAlgebra> a2() {
  Quiver q({"1", "2"}, {{"a", "1", "2"}});
  return PathAlgebra::build(PrimeField(2), q, {}, 2);
}

Module reg(std::shared_ptr<const PathAlgebra> dn) {
  return Module(dn, {2}, {Matrix(dn->field(), 2, 2, {0, 0, 1, 0})});
}

bool mutually_factoring(const Morphism& a, const Morphism& b) {
  return factors_through(a, b).has_value() && factors_through(b, a).has_value();
}

} // namespace

TEST_CASE("gamma module shapes") {
  auto dn = dual_numbers();
  Module r = reg(dn);
  Module s = simple_module(dn, 0);

  // C = {regular}: Hom(Lambda, y) has the dimension of y
  for (const Module& y : {r, s}) {
    GammaModule gm = gamma_module({regular_module(dn)}, y);
    CHECK(gm.dim() == y.total_dim());
  }
  // empty C: the zero module over the zero ring
  GammaModule empty = gamma_module({}, r);
  CHECK(empty.dim() == 0);
  CHECK(empty.gamma.ring.dim() == 0);
  // C = {reg + simple}, y the same: Gamma of dim 5 on a 5-dim hom space
  Module c = direct_sum({r, s}).sum;
  GammaModule gm = gamma_module({c}, c);
  CHECK(gm.gamma.ring.dim() == 5);
  CHECK(gm.dim() == 5);
}

TEST_CASE("image subfunctor") {
  auto a = a2();
  Module p1 = projective_module(a, 0);
  Module s1 = simple_module(a, 0);
  GammaModule gm = gamma_module({s1}, s1);
  CHECK(image_subfunctor(gm, identity_morphism(s1)) == Subspace::full(PrimeField(2), gm.dim()));
  CHECK(image_subfunctor(gm, zero_morphism(s1, s1)).dim() == 0);
  // C = {S1}, alpha: P1 -> S1: Hom(S1, P1) = 0 so the image is zero
  Morphism proj = hom_basis(p1, s1).basis[0];
  CHECK(image_subfunctor(gm, proj).dim() == 0);
}

TEST_CASE("lambda submodule lattice of the dual-numbers example") {
  auto dn = dual_numbers();
  Module c = direct_sum({reg(dn), simple_module(dn, 0)}).sum;
  SubmoduleLattice lat = module_submodule_lattice(c, LatticeMode::Lambda);
  CHECK(lat.elements.size() == 8);
  // oracle: all 16 subspaces of GF(2)^3 filtered by stability
  std::vector<Matrix> ops{c.total_vertex_projection(0), c.total_arrow_matrix(0)};
  auto expected = oracle::stable_subspaces(PrimeField(2), 3, ops);
  REQUIRE(expected.size() == 8);
  for (size_t i = 0; i < 8; ++i) CHECK(lat.elements[i] == expected[i]);
  // covering relations against the oracle poset
  std::vector<std::pair<int, int>> expect_hasse;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (i == j || expected[i].dim() >= expected[j].dim()) continue;
      if (!expected[j].contains(expected[i])) continue;
      bool cover = true;
      for (int k = 0; k < 8 && cover; ++k) {
        if (k == i || k == j) continue;
        if (expected[k].contains(expected[i]) && expected[j].contains(expected[k]) &&
            expected[i].dim() < expected[k].dim() && expected[k].dim() < expected[j].dim())
          cover = false;
      }
      if (cover) expect_hasse.emplace_back(i, j);
    }
  std::sort(expect_hasse.begin(), expect_hasse.end());
  CHECK(lat.hasse == expect_hasse);
}

TEST_CASE("end-stable lattice of the dual-numbers example has 4 elements") {
  auto dn = dual_numbers();
  Module c = direct_sum({reg(dn), simple_module(dn, 0)}).sum;
  SubmoduleLattice lat = module_submodule_lattice(c, LatticeMode::EndStable);
  CHECK(lat.elements.size() == 4);
  std::vector<Matrix> ops;
  for (const Morphism& e : hom_basis(c, c).basis) ops.push_back(total_matrix(e));
  CHECK(oracle::stable_subspaces(PrimeField(2), 3, ops).size() == 4);
}

TEST_CASE("simple module lattice is the 2-chain in every mode") {
  auto a = a2();
  Module s = simple_module(a, 0);
  for (LatticeMode mode : {LatticeMode::Lambda, LatticeMode::EndStable}) {
    SubmoduleLattice lat = module_submodule_lattice(s, mode);
    CHECK(lat.elements.size() == 2);
    CHECK(lat.hasse == std::vector<std::pair<int, int>>{{0, 1}});
  }
}

TEST_CASE("gamma lattice of End(Lambda) acting on Hom(Lambda, Lambda) is a 3-chain") {
  auto dn = dual_numbers();
  Module r = reg(dn);
  GammaModule gm = gamma_module({r}, r);
  SubmoduleLattice lat = gamma_submodule_lattice(gm);
  CHECK(lat.elements.size() == 3);
  CHECK(lat.hasse == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("fh_eval: trivial and socle cases, both methods") {
  auto dn = dual_numbers();
  Module r = reg(dn);
  Module s = simple_module(dn, 0);
  Universe u = build_universe(dn, 2);

  GammaModule gm = gamma_module({r}, r); // C = {Lambda}, y = Lambda
  Subspace full = Subspace::full(PrimeField(2), gm.dim());
  Subspace zero(PrimeField(2), gm.dim());
  for (const Module& x : u.modules) {
    int hd = hom_basis(x, r).dim();
    // H full: no constraint
    CHECK(fh_eval(gm, full, x, FhMethod::Intersection) == Subspace::full(PrimeField(2), hd));
    // C contains the regular module and H = 0: everything is detected
    CHECK(fh_eval(gm, zero, x, FhMethod::Intersection).dim() == 0);
  }

  // H = socle line of Hom(Lambda, Lambda)
  SubmoduleLattice lat = gamma_submodule_lattice(gm);
  Subspace socle = lat.elements[1];
  REQUIRE(socle.dim() == 1);
  Subspace at_reg = fh_eval(gm, socle, r, FhMethod::Intersection);
  CHECK(at_reg == socle); // restriction to C recovers H
  Subspace at_s = fh_eval(gm, socle, s, FhMethod::Intersection);
  CHECK(at_s.dim() == hom_basis(s, r).dim()); // all of Hom(F2, Lambda)
  // both methods agree here and on the whole grid below
  CHECK(fh_eval(gm, socle, r, FhMethod::Coinduction) == at_reg);
  CHECK(fh_eval(gm, socle, s, FhMethod::Coinduction) == at_s);
}

TEST_CASE("fh_eval double derivation and third characterization on full grids") {
  for (auto alg : {dual_numbers(), a2()}) {
    Universe u = build_universe(alg, 2);
    REQUIRE(u.complete);
    for (const Module& c : u.modules)
      for (const Module& y : u.modules) {
        GammaModule gm = gamma_module({c}, y);
        SubmoduleLattice lat = gamma_submodule_lattice(gm);
        for (const Subspace& h : lat.elements) {
          // restriction identity: F_H at the sum of C recovers H
          CHECK(fh_eval(gm, h, gm.c_sum, FhMethod::Intersection) == h);
          for (const Module& x : u.modules) {
            Subspace a = fh_eval(gm, h, x, FhMethod::Intersection);
            Subspace b = fh_eval(gm, h, x, FhMethod::Coinduction);
            CHECK(a == b);
            // third characterization, on every element of Hom(x, y)
            HomSpace hom_xy = hom_basis(x, y);
            Vec coeff(hom_xy.dim(), 0);
            bool more = true;
            while (more) {
              Morphism beta = hom_xy.from_coordinates(coeff);
              bool in_fh = a.contains_vector(coeff);
              bool inv_inside = h.contains(image_subfunctor(gm, beta));
              CHECK(in_fh == inv_inside);
              more = false;
              for (auto& x2 : coeff) {
                if (++x2 < 2) {
                  more = true;
                  break;
                }
                x2 = 0;
              }
            }
          }
        }
      }
  }
}

TEST_CASE("fh_eval monotonicity") {
  auto dn = dual_numbers();
  Module r = reg(dn);
  Universe u = build_universe(dn, 2);
  GammaModule gm = gamma_module({r}, r);
  SubmoduleLattice lat = gamma_submodule_lattice(gm);
  for (size_t i = 0; i < lat.elements.size(); ++i)
    for (size_t j = 0; j < lat.elements.size(); ++j) {
      if (!lat.elements[j].contains(lat.elements[i])) continue;
      for (const Module& x : u.modules)
        CHECK(fh_eval(gm, lat.elements[j], x, FhMethod::Intersection)
                  .contains(fh_eval(gm, lat.elements[i], x, FhMethod::Intersection)));
      DeterminedResult di = construct_determined(gm, lat.elements[i], u);
      DeterminedResult dj = construct_determined(gm, lat.elements[j], u);
      CHECK(factors_through(di.alpha, dj.alpha).has_value());
    }
}

TEST_CASE("fh_eval rejects a non-stable H") {
  auto dn = dual_numbers();
  Module r = reg(dn);
  GammaModule gm = gamma_module({r}, r);
  // span{id} is not closed under precomposition with the nilpotent
  Vec id_coords = *gm.hom.coordinates(identity_morphism(r));
  Subspace h = Subspace::span_rows(PrimeField(2), gm.dim(), {id_coords});
  REQUIRE(!is_gamma_stable(gm, h));
  CHECK_THROWS_AS(fh_eval(gm, h, r, FhMethod::Intersection), input_error);
}

TEST_CASE("determined morphism extremes") {
  for (auto alg : {dual_numbers(), a2()}) {
    Universe u = build_universe(alg, 2);
    Module lambda = regular_module(alg);
    for (const Module& y : u.modules) {
      // empty C, H = 0: the identity of Y
      GammaModule none = gamma_module({}, y);
      DeterminedResult did = construct_determined(none, Subspace(alg->field(), 0), u);
      CHECK(did.verified());
      CHECK(mutually_factoring(did.alpha, identity_morphism(y)));
      // C containing a generator, H = 0: the zero morphism with zero source
      GammaModule gen = gamma_module({lambda}, y);
      DeterminedResult dz = construct_determined(gen, Subspace(alg->field(), gen.dim()), u);
      CHECK(dz.verified());
      CHECK(dz.alpha.source().total_dim() == 0);
    }
  }
}

TEST_CASE("determined morphism for (F2, 0) over the dual numbers is the top projection") {
  auto dn = dual_numbers();
  Universe u = build_universe(dn, 2);
  Module s = simple_module(dn, 0);
  GammaModule gm = gamma_module({s}, s);
  Subspace h(PrimeField(2), gm.dim()); // rad End(F2) = 0
  DeterminedResult d = construct_determined(gm, h, u);
  CHECK(d.verified());
  CHECK(!d.truncated);
  REQUIRE(is_isomorphic(d.alpha.source(), reg(dn)).has_value());
  CHECK(d.alpha.is_epi());
  CHECK(!is_retraction(d.alpha));
}

TEST_CASE("theorem certificates across full lattices") {
  for (auto alg : {dual_numbers(), a2()}) {
    Universe u = build_universe(alg, 2);
    for (const Module& c : u.modules)
      for (const Module& y : u.modules) {
        GammaModule gm = gamma_module({c}, y);
        SubmoduleLattice lat = gamma_submodule_lattice(gm);
        for (const Subspace& h : lat.elements) {
          DeterminedResult d = construct_determined(gm, h, u);
          CHECK(d.image_check);
          CHECK(d.minimal_check);
          CHECK(d.minimal_certified);
          CHECK(d.universality_check);
          CHECK(d.label == "exact");
        }
      }
  }
}

TEST_CASE("construction independent of universe enumeration order") {
  auto dn = dual_numbers();
  Universe u = build_universe(dn, 2);
  Universe flipped = u;
  std::reverse(flipped.modules.begin(), flipped.modules.end());
  std::reverse(flipped.provenance.begin(), flipped.provenance.end());
  Module r = reg(dn);
  GammaModule gm = gamma_module({r}, r);
  SubmoduleLattice lat = gamma_submodule_lattice(gm);
  for (const Subspace& h : lat.elements) {
    DeterminedResult a = construct_determined(gm, h, u);
    DeterminedResult b = construct_determined(gm, h, flipped);
    CHECK(mutually_factoring(a.alpha, b.alpha));
  }
}

TEST_CASE("is_right_determined: positive and negative") {
  auto dn = dual_numbers();
  Universe u = build_universe(dn, 2);
  Module r = reg(dn);
  Module s = simple_module(dn, 0);

  GammaModule gm = gamma_module({s}, s);
  CHECK(is_right_determined(identity_morphism(s), gm, u).determined);
  // the top projection is right determined by {F2}
  Morphism top = hom_basis(r, s).basis[0];
  CHECK(is_right_determined(top, gm, u).determined);
  // the socle inclusion F2 -> Lambda is not right determined by {F2}
  GammaModule gs = gamma_module({s}, r);
  Morphism socle = hom_basis(s, r).basis[0];
  DeterminacyResult neg = is_right_determined(socle, gs, u);
  CHECK(!neg.determined);
  REQUIRE(neg.counterexample.has_value());
  // the reported counterexample has a smaller invariant but does not factor
  CHECK(image_subfunctor(gs, socle).contains(image_subfunctor(gs, *neg.counterexample)));
  CHECK(!factors_through(*neg.counterexample, socle).has_value());
}

TEST_CASE("galois adjunction sweep") {
  auto dn = dual_numbers();
  Universe u = build_universe(dn, 2);
  Module c = direct_sum({reg(dn), simple_module(dn, 0)}).sum;
  GammaModule gm = gamma_module({c}, simple_module(dn, 0));
  CheckReport rep = galois_adjunction_check(gm, u);
  CHECK(rep.ok);
  CHECK(rep.checks > 0);
}

TEST_CASE("auslander bijection round trip") {
  auto dn = dual_numbers();
  Universe u = build_universe(dn, 2);
  Module c = direct_sum({reg(dn), simple_module(dn, 0)}).sum;
  GammaModule gm = gamma_module({c}, c);
  CheckReport rep = auslander_bijection_check(gm, u);
  CHECK(rep.ok);

  auto a = a2();
  Universe ua = build_universe(a, 2);
  Module ca = direct_sum({projective_module(a, 0), simple_module(a, 0), simple_module(a, 1)}).sum;
  GammaModule gma = gamma_module({ca}, simple_module(a, 0));
  CheckReport repa = auslander_bijection_check(gma, ua);
  CHECK(repa.ok);
}

TEST_CASE("right almost split morphisms") {
  auto dn = dual_numbers();
  Universe u = build_universe(dn, 2);
  RightAlmostSplitResult r1 = right_almost_split(simple_module(dn, 0), u);
  CHECK(r1.ras_verified());
  REQUIRE(is_isomorphic(r1.det.alpha.source(), reg(dn)).has_value());

  auto a = a2();
  Universe ua = build_universe(a, 2);
  Module p1 = projective_module(a, 0);
  RightAlmostSplitResult r2 = right_almost_split(simple_module(a, 0), ua);
  CHECK(r2.ras_verified());
  REQUIRE(is_isomorphic(r2.det.alpha.source(), p1).has_value());
  // for the projective P1, the right almost split morphism is the radical
  // inclusion S2 -> P1
  RightAlmostSplitResult r3 = right_almost_split(p1, ua);
  CHECK(r3.ras_verified());
  REQUIRE(is_isomorphic(r3.det.alpha.source(), simple_module(a, 1)).has_value());
  CHECK(r3.det.alpha.is_mono());

  // locality failures are rejected
  Module dec = direct_sum({simple_module(a, 0), simple_module(a, 1)}).sum;
  CHECK_THROWS_AS(right_almost_split(dec, ua), input_error);
}

TEST_CASE("almost split sequences") {
  auto dn = dual_numbers();
  Universe u = build_universe(dn, 2);
  Module s = simple_module(dn, 0);
  AlmostSplitSequence seq = almost_split_sequence(s, u);
  CHECK(seq.verified());
  REQUIRE(is_isomorphic(seq.projection.source(), reg(dn)).has_value());
  REQUIRE(is_isomorphic(seq.inclusion.source(), s).has_value());

  auto a = a2();
  Universe ua = build_universe(a, 2);
  AlmostSplitSequence seq2 = almost_split_sequence(simple_module(a, 0), ua);
  CHECK(seq2.verified());
  REQUIRE(is_isomorphic(seq2.projection.source(), projective_module(a, 0)).has_value());
  REQUIRE(is_isomorphic(seq2.inclusion.source(), simple_module(a, 1)).has_value());

  CHECK_THROWS_AS(almost_split_sequence(projective_module(a, 0), ua), input_error);
}

TEST_CASE("end/rad comparison across almost split sequences") {
  auto dn = dual_numbers();
  Universe u = build_universe(dn, 2);
  Module s = simple_module(dn, 0);
  AlmostSplitSequence seq = almost_split_sequence(s, u);
  EndRadCompare cmp = end_mod_rad_compare(seq.inclusion.source(), seq.projection.target());
  CHECK(cmp.isomorphic);
  CHECK(cmp.x_class.order == 2);
  CHECK(cmp.z_class.order == 2);

  auto a = a2();
  Universe ua = build_universe(a, 2);
  AlmostSplitSequence seq2 = almost_split_sequence(simple_module(a, 0), ua);
  EndRadCompare cmp2 = end_mod_rad_compare(seq2.inclusion.source(), seq2.projection.target());
  CHECK(cmp2.isomorphic);

  EndRadCompare self = end_mod_rad_compare(s, s);
  CHECK(self.isomorphic);
}

TEST_CASE("forgetful functor subfunctor values") {
  auto dn = dual_numbers();
  Module r = reg(dn);
  Module s = simple_module(dn, 0);
  Module c = direct_sum({r, s}).sum;

  // h = everything: no constraint
  ForgetfulFh full = forgetful_fh(c, Subspace::full(PrimeField(2), 3), r);
  CHECK(full.value == Subspace::full(PrimeField(2), 2));
  // h = 0 against a generator: points are separated
  ForgetfulFh zero = forgetful_fh(regular_module(dn), Subspace(PrimeField(2), 2), r);
  CHECK(zero.value.dim() == 0);

  // h = span(eps, 0), x = Lambda: elementwise oracle over all 4 elements
  Subspace h = Subspace::span_rows(PrimeField(2), 3, {{0, 1, 0}});
  ForgetfulFh got = forgetful_fh(c, h, r);
  CHECK(got.h_end_stable);
  HomSpace hom_rc = hom_basis(r, c);
  for (const Vec& m : oracle::all_vectors(PrimeField(2), 2)) {
    bool expect = true;
    Vec coeff(hom_rc.dim(), 0);
    bool more = true;
    while (more && expect) {
      Morphism alpha = hom_rc.from_coordinates(coeff);
      if (!h.contains_vector(total_matrix(alpha).apply(m))) expect = false;
      more = false;
      for (auto& x2 : coeff) {
        if (++x2 < 2) {
          more = true;
          break;
        }
        x2 = 0;
      }
    }
    CHECK(got.value.contains_vector(m) == expect);
  }
}

TEST_CASE("three readings of the dual-numbers subobject example") {
  // the module C = regular + simple over the dual numbers admits three
  // subobject enumerations: 8 submodules, 4 endomorphism-stable subspaces
  // forming a chain, and the matching 4-chain of forgetful-functor
  // subfunctor values
  auto dn = dual_numbers();
  Module r = reg(dn);
  Module s = simple_module(dn, 0);
  Module c = direct_sum({r, s}).sum;
  Universe u = build_universe(dn, 2);

  SubmoduleLattice lambda = module_submodule_lattice(c, LatticeMode::Lambda);
  CHECK(lambda.elements.size() == 8);
  SubmoduleLattice endst = module_submodule_lattice(c, LatticeMode::EndStable);
  REQUIRE(endst.elements.size() == 4);
  CHECK(endst.hasse == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  // every end-stable subspace is one of the submodules
  for (const Subspace& h : endst.elements) CHECK(lambda.index_of(h) >= 0);

  // forgetful-functor values along the chain: restriction recovers H and
  // the values are strictly monotone at C itself
  for (size_t i = 0; i < endst.elements.size(); ++i) {
    ForgetfulFh at_c = forgetful_fh(c, endst.elements[i], c);
    CHECK(at_c.h_end_stable);
    CHECK(at_c.value == endst.elements[i]);
    for (const Module& x : u.modules) {
      ForgetfulFh fx = forgetful_fh(c, endst.elements[i], x);
      if (i > 0) {
        ForgetfulFh prev = forgetful_fh(c, endst.elements[i - 1], x);
        CHECK(fx.value.contains(prev.value));
      }
    }
  }
}

TEST_CASE("right determinacy is equivalent to x-wise determinacy of the image") {
  // alpha is right C-determined over u iff at every member x the value of
  // F_(Im Hom(C,alpha)) equals the subspace of morphisms factoring through
  // alpha, and the constructions compute those two sides independently
  auto dn = dual_numbers();
  Universe u = build_universe(dn, 2);
  Module r = reg(dn);
  Module s = simple_module(dn, 0);
  for (const Module& c : u.modules) {
    GammaModule gm = gamma_module({c}, r);
    for (const Module& t : u.modules)
      for (const Morphism& alpha : hom_basis(t, r).basis) {
        Subspace inv = image_subfunctor(gm, alpha);
        bool pointwise = true;
        for (const Module& x : u.modules) {
          Subspace fh = fh_eval(gm, inv, x, FhMethod::Intersection);
          HomSpace hom_xr = hom_basis(x, r);
          HomSpace hom_xt = hom_basis(x, t);
          Subspace factored = hom_xt.dim() == 0
                                  ? Subspace(PrimeField(2), hom_xr.dim())
                                  : image_space(postcompose_matrix(hom_xt, hom_xr, alpha));
          pointwise &= (fh == factored);
        }
        CHECK(is_right_determined(alpha, gm, u).determined == pointwise);
      }
  }
  // the socle inclusion against C = {F2} is the negative instance
  GammaModule gs = gamma_module({s}, r);
  Morphism socle = hom_basis(s, r).basis[0];
  CHECK(!is_right_determined(socle, gs, u).determined);
}

TEST_CASE("pure-injective determinacy sweep") {
  for (auto alg : {dual_numbers(), a2()}) {
    Universe u = build_universe(alg, 2);
    CheckReport rep = kernel_determinacy_check(u);
    CHECK(rep.ok);
    CHECK(rep.checks > 0);
  }
}

TEST_CASE("full stack over GF(3): A2 determined morphisms and almost split sequence") {
  Quiver q({"1", "2"}, {{"a", "1", "2"}});
  auto alg = PathAlgebra::build(PrimeField(3), q, {}, 2);
  Universe u = build_universe(alg, 2);
  REQUIRE(u.complete);
  CHECK(u.modules.size() == 3);
  // lattice sweep with both F_H methods
  for (const Module& c : u.modules)
    for (const Module& y : u.modules) {
      GammaModule gm = gamma_module({c}, y);
      SubmoduleLattice lat = gamma_submodule_lattice(gm);
      for (const Subspace& h : lat.elements) {
        for (const Module& x : u.modules)
          CHECK(fh_eval(gm, h, x, FhMethod::Intersection) ==
                fh_eval(gm, h, x, FhMethod::Coinduction));
        DeterminedResult d = construct_determined(gm, h, u);
        CHECK(d.verified());
      }
    }
  Module p1 = projective_module(alg, 0);
  AlmostSplitSequence seq = almost_split_sequence(simple_module(alg, 0), u);
  CHECK(seq.verified());
  REQUIRE(is_isomorphic(seq.projection.source(), p1).has_value());
  EndRadCompare cmp = end_mod_rad_compare(seq.inclusion.source(), seq.projection.target());
  CHECK(cmp.isomorphic);
  CHECK(cmp.x_class.order == 3);
}

TEST_CASE("kronecker universe at bound 3 finds all seven small indecomposables") {
  auto alg = beilinson_algebra(1, 1, PrimeField(2));
  Universe u = build_universe(alg, 3);
  // simples, P(1), I(0) and the three regular representations of total
  // dimension two; the closure stabilizes without touching the bound
  CHECK(u.modules.size() == 7);
  CHECK(u.complete);
  int dim2 = 0;
  for (const Module& m : u.modules) dim2 += (m.total_dim() == 2);
  CHECK(dim2 == 3);
  // the three regulars are pairwise non-isomorphic lines in the hom sense
  std::vector<const Module*> regulars;
  for (const Module& m : u.modules)
    if (m.total_dim() == 2) regulars.push_back(&m);
  for (size_t i = 0; i < regulars.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      CHECK(!is_isomorphic(*regulars[i], *regulars[j]).has_value());
}

TEST_CASE("constructions against a pruned universe carry the truncation label") {
  auto alg = beilinson_algebra(1, 1, PrimeField(2));
  Universe u = build_universe(alg, 1); // prunes everything beyond the simples
  CHECK(!u.complete);
  REQUIRE(u.modules.size() == 2);
  int v0 = alg->quiver().vertex_index("0");
  Module s0 = simple_module(alg, v0);
  GammaModule gm = gamma_module({s0}, s0);
  SubmoduleLattice lat = gamma_submodule_lattice(gm);
  bool saw = false;
  for (const Subspace& h : lat.elements) {
    DeterminedResult d = construct_determined(gm, h, u);
    CHECK(d.truncated);
    CHECK(d.label == "universe-truncated");
    saw = true;
  }
  CHECK(saw);
}

TEST_CASE("A3 almost split sequences for every non-projective indecomposable") {
  Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  auto alg = PathAlgebra::build(PrimeField(2), q, {}, 3);
  Universe u = build_universe(alg, 3);
  REQUIRE(u.complete);
  REQUIRE(u.modules.size() == 6);
  int sequences = 0;
  for (const Module& z : u.modules) {
    bool projective = false;
    for (int v = 0; v < 3; ++v)
      if (is_isomorphic(z, projective_module(alg, v))) projective = true;
    if (projective) {
      CHECK_THROWS_AS(almost_split_sequence(z, u), input_error);
      continue;
    }
    AlmostSplitSequence seq = almost_split_sequence(z, u);
    CHECK(seq.verified());
    // dimension bookkeeping of a short exact sequence
    CHECK(seq.inclusion.source().total_dim() + seq.projection.target().total_dim() ==
          seq.projection.source().total_dim());
    EndRadCompare cmp = end_mod_rad_compare(seq.inclusion.source(), seq.projection.target());
    CHECK(cmp.isomorphic);
    ++sequences;
  }
  CHECK(sequences == 3);
}

TEST_CASE("A3 pure-injective determinacy sweep") {
  Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  auto alg = PathAlgebra::build(PrimeField(2), q, {}, 3);
  Universe u = build_universe(alg, 3);
  CheckReport rep = kernel_determinacy_check(u);
  CHECK(rep.ok);
  CHECK(rep.checks >= 15);
}
