#ifndef CAPLINK_LINKING_HPP
#define CAPLINK_LINKING_HPP

#include "caplink/hompoly.hpp"
#include "caplink/slice.hpp"

#include <cstdint>
#include <string>

namespace caplink {

// An oriented real line: the traversal of l(t0 : t1) = t0 u + t1 v by
// increasing t = t1/t0. Swapping u and v reverses the orientation.
struct OrientedLine {
    Vec3Q u;
    Vec3Q v;

    OrientedLine(Vec3Q uu, Vec3Q vv);
    OrientedLine reversed() const { return {v, u}; }
    std::string describe() const;
};

struct HalfPlaneCount {
    int upper = 0;
    int lower = 0;
    int degree = 0;
};

// Exact counts (with multiplicity) of the roots of the affine polynomial
// q(tau) = sum coeffs[k] tau^k in the upper and lower half planes, by Cauchy
// indices of the real and imaginary parts. Requires full degree (leading
// coefficient nonzero, else RootAtInfinity) and no real roots (RealRoot).
HalfPlaneCount halfplane_root_count(const BinaryForm& p);

// Same count after a determinant-one reparametrization that moves the point
// at infinity to a non-root; counts are invariant.
HalfPlaneCount halfplane_root_count_reparametrized(const BinaryForm& p);

// Throws LineMeetsBase when the line's real points meet the base.
void require_disjoint(const OrientedLine& line, const PencilSpec& pencil);

// H o V: the number of roots of (R + iS) restricted to the line that lie in
// the half selected by the line's orientation; complex intersections count
// positively with multiplicity.
int h_circle_v(const OrientedLine& line, const CoorientedBase& base);

// Cap-linking by the affine-chart sign sum (one global calibration constant
// fixes the chart orientation).
Rational lk_chart(const OrientedLine& line, const CoorientedBase& base);

// The individual point signs entering lk_chart, in base-point order and
// including the calibration factor: lk_chart = sum / 2.
std::vector<int> lk_chart_signs(const OrientedLine& line, const CoorientedBase& base);

// Cap-linking by bounding each doubled cooriented point with an auxiliary
// line through it, transporting the flipped coorientation to the single
// crossing with the oriented line. Auxiliary lines are drawn from the seed
// and resampled on degeneracy.
Rational lk_boundary(const OrientedLine& line, const CoorientedBase& base, uint64_t aux_seed);

struct LinkingReport {
    Rational lk_chart;
    Rational lk_boundary;
    int h_dot_v = 0;
    int degree = 0;
    Rational residual; // D/2 - h_dot_v - lk_chart, zero when the identity holds
    uint64_t aux_seed = 0;
    int aux_retries = 0;
};

// Evaluate both linking algorithms, the half-plane count and the identity
// residual; checks the ledger of inequalities exactly.
LinkingReport verify_theorem5(const OrientedLine& line, const CoorientedBase& base,
                              uint64_t aux_seed = 1);

} // namespace caplink

#endif
