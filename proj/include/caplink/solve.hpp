#ifndef CAPLINK_SOLVE_HPP
#define CAPLINK_SOLVE_HPP

#include "caplink/bipoly.hpp"
#include "caplink/hompoly.hpp"
#include "caplink/interval.hpp"
#include "caplink/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace caplink {

// Dimension bookkeeping for the transversality criterion
// defect = dim U - (dim V + dim W) + dim(V cap W); zero means transverse.
struct TransversalityDefect {
    int dim_u = 0;
    int dim_v = 0;
    int dim_w = 0;
    int dim_intersection = 0;
    int defect = 0;
    bool transverse() const { return defect == 0; }
};

TransversalityDefect transversality_defect(int dim_u, int dim_v, int dim_w, int dim_int);

// Specialization for a real pair: the complex points of the ambient variety
// against its real points, with a real subvariety cut out. Always
// dim RX - dim RY, so never transverse unless the dimensions agree.
TransversalityDefect real_pair_defect(int dim_rx, int dim_ry);

// One chart coordinate of a certified point: a squarefree defining
// polynomial together with an isolating interval (or an exact rational).
struct CoordRoot {
    UniPoly defining;
    RootLoc loc;

    bool exact() const { return loc.exact(); }
    Interval interval() const { return loc.interval(); }
};

// An isolated real solution of the dehomogenized pencil system in its
// canonical owning chart. `multiplicity` is 1 exactly when the Jacobian
// certificate succeeded; otherwise it carries the eliminant-root
// multiplicity as an upper bound.
struct CertifiedBasePoint {
    ChartId chart = ChartId::Z;
    CoordRoot s;
    CoordRoot t;
    int multiplicity = 1;

    Interval box_s() const { return s.interval(); }
    Interval box_t() const { return t.interval(); }
    std::string describe() const;
};

// The pencil system restricted to one chart, kept alongside points so that
// downstream sign certificates can refine against it.
struct ChartSystem {
    BiPoly f; // dehomogenized R
    BiPoly g; // dehomogenized S
};

ChartSystem chart_system(const HomPoly& R, const HomPoly& S, ChartId chart);

// Complete certified list of the real solutions of R = S = 0 on the
// projective plane. Throws CommonFactor when the base is positive
// dimensional, SingularOrTangent when an undecidable tangential
// configuration blocks certification.
std::vector<CertifiedBasePoint> real_base_points(const HomPoly& R, const HomPoly& S);

// Same point, box width at most `width` in both coordinates.
CertifiedBasePoint refine_point(const CertifiedBasePoint& p, const Rational& width);
void refine_point_in_place(CertifiedBasePoint& p, const Rational& width);

// Certified sign of the chart Jacobian determinant of (R, S) at a base
// point: the transversality certificate. Throws SingularOrTangent when the
// determinant vanishes (confirmed exactly) or cannot be certified nonzero.
int jacobian_certificate(const HomPoly& R, const HomPoly& S, CertifiedBasePoint& p);

// Certified sign of an arbitrary chart-coordinate polynomial at the point,
// refining the point's box as needed. Returns nullopt when the refinement
// budget runs out without a decision (the value may be exactly zero).
std::optional<int> certified_sign(const BiPoly& F, CertifiedBasePoint& p, int max_steps = 192);

// Test oracle: sign-change subdivision sweep over the three charts. Returns
// cluster boxes (chart, s-interval, t-interval) where both dehomogenized
// forms admit a zero by interval evaluation.
struct OracleCluster {
    ChartId chart;
    Interval s;
    Interval t;
};

std::vector<OracleCluster> brute_force_base_oracle(const HomPoly& R, const HomPoly& S,
                                                   int resolution);

} // namespace caplink

#endif
