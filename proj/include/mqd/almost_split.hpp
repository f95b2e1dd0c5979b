#pragma once

#include "mqd/determined.hpp"

namespace mqd {

struct RightAlmostSplitResult {
  DeterminedResult det;   // alpha for (Y, rad End Y, Y)
  bool not_retraction = false;
  bool every_non_retraction_factors = false;
  bool ras_verified() const { return det.verified() && not_retraction && every_non_retraction_factors; }
};

// The determined morphism of the triple (Y, rad End(Y), Y); End(Y) must be
// local. The definition is certified directly over the universe: alpha is
// not a retraction and every non-retraction into Y factors through it.
RightAlmostSplitResult right_almost_split(const Module& y, const Universe& u);

struct AlmostSplitSequence {
  Morphism inclusion;  // X -> M
  Morphism projection; // M -> Z, right minimal right almost split
  bool short_exact = false;
  bool non_split = false;
  bool right_almost_split_ok = false;
  bool left_almost_split_ok = false;
  bool verified() const {
    return short_exact && non_split && right_almost_split_ok && left_almost_split_ok;
  }
};

// Z must be indecomposable and non-projective; the universe should be
// complete for the certificates to be exact.
AlmostSplitSequence almost_split_sequence(const Module& z, const Universe& u);

struct EndRadCompare {
  RingClass x_class, z_class;
  bool isomorphic = false; // equal-order finite fields
};
EndRadCompare end_mod_rad_compare(const Module& x, const Module& z);

struct ForgetfulFh {
  Subspace value;     // subspace of the total space of x
  bool h_end_stable;  // reported, not required
};

// F_H for the forgetful functor: intersection over a basis of Hom(x, c) of
// elementwise preimages of h (h a subspace of the total space of c).
ForgetfulFh forgetful_fh(const Module& c, const Subspace& h, const Module& x);

} // namespace mqd
