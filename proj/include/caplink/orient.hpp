#ifndef CAPLINK_ORIENT_HPP
#define CAPLINK_ORIENT_HPP

#include "caplink/matrix.hpp"
#include "caplink/rational.hpp"

#include <vector>

namespace caplink {

// Columns are basis vectors of a k-dimensional subspace of n-space;
// column rank k is checked on construction.
struct BasisMatrix {
    RatMat m;

    explicit BasisMatrix(RatMat mat);
    static BasisMatrix from_columns(size_t n, const std::vector<std::vector<Rational>>& cols);

    size_t dim_ambient() const { return m.rows; }
    size_t dim_span() const { return m.cols; }
};

// Square complex matrix acting linearly (v -> M v) or semilinearly
// (v -> M conj v).
struct ComplexMatrix {
    GaussMat m;
    bool semilinear = false;
};

struct OrientationSign {
    int value = +1; // in {+1, -1}
};

// sign of det T where b = b_ref T; both must span the same subspace
OrientationSign orientation_sign(const BasisMatrix& b, const BasisMatrix& b_ref);

// Realification of a complex basis with the interleaved convention
// (e1, i e1, ..., en, i en); a complex vector (z1, ..., zn) becomes
// (Re z1, Im z1, ..., Re zn, Im zn).
BasisMatrix complex_orientation_basis(const GaussMat& complex_basis);

std::vector<Rational> realify_vector(const std::vector<GaussianRational>& v);

// Sign by which f pulls back the complex orientation: realify f to a
// 2k x 2k rational matrix and take the determinant sign. Linear maps give
// +1, semilinear ones (-1)^k.
OrientationSign semilinear_pullback_sign(const ComplexMatrix& f);

// The related basis of B for the exact sequence 0 -> A -> B -> C -> 0:
// lifts of the C-basis first, then the A-basis.
BasisMatrix ses_orientation(const BasisMatrix& a_basis, const BasisMatrix& c_lifts);

// Orientation data of a quotient T_pX / T_pW: ambient representatives of a
// quotient basis together with a basis of W itself.
struct QuotientBasis {
    RatMat reps;
    RatMat subspace;
};

// Local intersection number of an oriented Y against a cooriented Z of
// complementary codimension: +1 when the projection of the Y-orientation
// matches the coorientation.
OrientationSign intersection_sign(const BasisMatrix& tangent_y, const QuotientBasis& coorient_z);

// Coorientation of the transverse intersection: Z-representatives first,
// then Y-representatives, over the intersection subspace.
QuotientBasis cup_coorientation(const QuotientBasis& coorient_y, const QuotientBasis& coorient_z);

} // namespace caplink

#endif
