#pragma once

#include "core/dcat.hpp"
#include "core/epd.hpp"

namespace sheafline {

// dim Nat(h(A), h(B)) computed as honest natural transformations between the
// block functors restricted to a separating sample grid.  Independent of the
// Hom geometry; at desk scale the two agree by the equivalence theorem.
int nat_dim(const DcatObject& A, const DcatObject& B);

// Map Hom(iota(a), X) -> Hom(iota(b), X) induced by precomposition with the
// (scaled) canonical morphism iota(b) -> iota(a); requires slot_allowed(b, a).
Mat precompose_matrix(const DcatObject& X, const CanonicalPoint& a, const CanonicalPoint& b,
                      int scalar);

// Exactness of the long block sequence attached to one axis-aligned rectangle
// u <= v1, v2 <= w inside a single tile, checked at the dimension level with
// honest matrices through the whole T-orbit.
struct TileRectangle {
	StripPoint u, v1, v2, w; // u = (xh, yl), v1 = (xl, yl), v2 = (xh, yh), w = (xl, yh)
};
bool cohomological_rectangle_ok(const Diagram& D, const TileRectangle& R);

// All rectangles with corners on the diagram's critical coordinate grid, over
// every tile meeting the support.
bool check_cohomological(const Diagram& D);

} // namespace sheafline
