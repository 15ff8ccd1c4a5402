#ifndef CAPLINK_SLICE_HPP
#define CAPLINK_SLICE_HPP

#include "caplink/hompoly.hpp"
#include "caplink/solve.hpp"

#include <array>
#include <vector>

namespace caplink {

// A validated real pencil: two independent real forms of the same degree
// with no common factor.
struct PencilSpec {
    HomPoly R;
    HomPoly S;
    int degree = 0;

    PencilSpec(HomPoly r, HomPoly s);
};

// A certified base point together with the coorientation induced by the
// slicing member R + iS. The frame (v, w) consists of chart tangent
// vectors, positively cooriented iff
// det [[dR(v), dR(w)], [dS(v), dS(w)]] > 0 at the point; det_sign is that
// certified determinant sign for the stored frame.
struct CoorientationFrame {
    CertifiedBasePoint point;
    std::array<std::array<Rational, 2>, 2> frame{{{Rational(1), Rational(0)},
                                                  {Rational(0), Rational(1)}}};
    int det_sign = 0;
};

struct CoorientedBase {
    PencilSpec pencil;
    std::vector<CoorientationFrame> points;
};

// Certify that the base is a slice: isolate every real base point and attach
// a nonvanishing Jacobian certificate with its coorientation sign. Throws
// RealP when one of the forms vanishes identically, CommonFactor for a
// positive-dimensional base, SingularOrTangent when a point fails.
CoorientedBase certify_slice(const HomPoly& R, const HomPoly& S);

// A positively cooriented frame at the given point (the coordinate frame,
// swapped when the coordinate frame is negative).
CoorientationFrame coorientation_frame(const CoorientedBase& base, size_t index);

// The cooriented base for (R, -S): identical points, every sign reversed.
CoorientedBase conjugate_flip(const CoorientedBase& base);

// Sign of the point's coorientation measured against a declared chart
// orientation.
int chart_sign(const CoorientationFrame& frame, int chart_orientation);

} // namespace caplink

#endif
