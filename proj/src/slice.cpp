#include "caplink/slice.hpp"

#include "caplink/errors.hpp"

#include <algorithm>

namespace caplink {

PencilSpec::PencilSpec(HomPoly r, HomPoly s) : R(std::move(r)), S(std::move(s)) {
    if (!R.is_real() || !S.is_real())
        throw InputError("slice", "pencil forms must have real coefficients");
    if (R.is_zero() || S.is_zero())
        throw InputError("slice", "pencil forms must be nonzero");
    if (R.degree() != S.degree())
        throw DegreeMismatch("pencil forms must have equal degrees");
    degree = R.degree();
    HomPoly common = hom_gcd(R, S);
    if (common.degree() >= 1)
        throw CommonFactor("pencil forms share the factor " + common.str(), common.str());
}

CoorientedBase certify_slice(const HomPoly& R, const HomPoly& S) {
    if (!R.is_real() || !S.is_real())
        throw InputError("slice", "certify_slice expects real forms");
    if (S.is_zero())
        throw RealP("the slicing member R + iS is real; its zero set cannot cut transversally");
    if (R.is_zero())
        throw RealP("the slicing member R + iS is real up to a constant factor");

    CoorientedBase base{PencilSpec(R, S), {}};
    std::vector<CertifiedBasePoint> pts = real_base_points(R, S);
    for (auto& p : pts) {
        CoorientationFrame fr;
        fr.det_sign = jacobian_certificate(R, S, p); // sets multiplicity to 1
        fr.point = std::move(p);
        base.points.push_back(std::move(fr));
    }
    std::sort(base.points.begin(), base.points.end(),
              [](const CoorientationFrame& a, const CoorientationFrame& b) {
                  if (a.point.chart != b.point.chart) return a.point.chart < b.point.chart;
                  if (a.point.s.loc.lo != b.point.s.loc.lo) return a.point.s.loc.lo < b.point.s.loc.lo;
                  return a.point.t.loc.lo < b.point.t.loc.lo;
              });
    return base;
}

CoorientationFrame coorientation_frame(const CoorientedBase& base, size_t index) {
    if (index >= base.points.size())
        throw InputError("slice", "point index out of range");
    CoorientationFrame fr = base.points[index];
    if (fr.det_sign < 0) {
        std::swap(fr.frame[0], fr.frame[1]); // swapping the frame flips the determinant
        fr.det_sign = +1;
    }
    return fr;
}

CoorientedBase conjugate_flip(const CoorientedBase& base) {
    CoorientedBase out{PencilSpec(base.pencil.R, -base.pencil.S), {}};
    out.points = base.points;
    for (auto& fr : out.points) fr.det_sign = -fr.det_sign;
    return out;
}

int chart_sign(const CoorientationFrame& frame, int chart_orientation) {
    if (chart_orientation != 1 && chart_orientation != -1)
        throw InputError("slice", "chart orientation must be +1 or -1");
    if (frame.det_sign != 1 && frame.det_sign != -1)
        throw InternalError("slice", "frame carries no certified sign");
    return frame.det_sign * chart_orientation;
}

} // namespace caplink
