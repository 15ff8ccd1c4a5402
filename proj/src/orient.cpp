#include "caplink/orient.hpp"

#include "caplink/errors.hpp"

#include <cassert>

namespace caplink {

BasisMatrix::BasisMatrix(RatMat mat) : m(std::move(mat)) {
    if (m.cols == 0 || m.cols > m.rows)
        throw RankDeficient("basis matrix must have 1..n columns");
    if (rank(m) != m.cols) throw RankDeficient("columns are linearly dependent");
}

BasisMatrix BasisMatrix::from_columns(size_t n, const std::vector<std::vector<Rational>>& cols) {
    RatMat m(n, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != n) throw RankDeficient("column length mismatch");
        for (size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    }
    return BasisMatrix(std::move(m));
}

OrientationSign orientation_sign(const BasisMatrix& b, const BasisMatrix& b_ref) {
    if (b.dim_ambient() != b_ref.dim_ambient() || b.dim_span() != b_ref.dim_span())
        throw DifferentSpans("bases live in different spaces");
    // same span: appending the other basis must not raise the rank
    if (rank(b_ref.m.augmented_with(b.m)) != b_ref.dim_span())
        throw DifferentSpans("bases span different subspaces");
    auto T = solve(b_ref.m, b.m);
    if (!T.has_value()) throw DifferentSpans("no transition matrix");
    Rational d = det(*T);
    if (sgn(d) == 0) throw RankDeficient("transition matrix is singular");
    return {sgn(d)};
}

std::vector<Rational> realify_vector(const std::vector<GaussianRational>& v) {
    std::vector<Rational> out;
    out.reserve(2 * v.size());
    for (const auto& z : v) {
        out.push_back(z.re);
        out.push_back(z.im);
    }
    return out;
}

BasisMatrix complex_orientation_basis(const GaussMat& complex_basis) {
    if (complex_basis.rows != complex_basis.cols)
        throw RankDeficient("complex basis must be square");
    size_t n = complex_basis.rows;
    if (rank(complex_basis) != n) throw RankDeficient("complex vectors are dependent");
    RatMat m(2 * n, 2 * n);
    const GaussianRational i_unit = imag_unit();
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) {
            const GaussianRational& z = complex_basis.at(i, j);
            GaussianRational iz = i_unit * z;
            // column 2j is e_j, column 2j+1 is i e_j
            m.at(2 * i, 2 * j) = z.re;
            m.at(2 * i + 1, 2 * j) = z.im;
            m.at(2 * i, 2 * j + 1) = iz.re;
            m.at(2 * i + 1, 2 * j + 1) = iz.im;
        }
    }
    return BasisMatrix(std::move(m));
}

OrientationSign semilinear_pullback_sign(const ComplexMatrix& f) {
    if (f.m.rows != f.m.cols) throw Singular("map must be square");
    size_t k = f.m.rows;
    RatMat r(2 * k, 2 * k);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            const GaussianRational& z = f.m.at(i, j);
            if (!f.semilinear) {
                // multiplication by z on interleaved coordinates
                r.at(2 * i, 2 * j) = z.re;
                r.at(2 * i, 2 * j + 1) = -z.im;
                r.at(2 * i + 1, 2 * j) = z.im;
                r.at(2 * i + 1, 2 * j + 1) = z.re;
            } else {
                // v -> z * conj(v)
                r.at(2 * i, 2 * j) = z.re;
                r.at(2 * i, 2 * j + 1) = z.im;
                r.at(2 * i + 1, 2 * j) = z.im;
                r.at(2 * i + 1, 2 * j + 1) = -z.re;
            }
        }
    }
    Rational d = det(r);
    if (sgn(d) == 0) throw Singular("map is not invertible");
    return {sgn(d)};
}

BasisMatrix ses_orientation(const BasisMatrix& a_basis, const BasisMatrix& c_lifts) {
    if (a_basis.dim_ambient() != c_lifts.dim_ambient())
        throw NotComplementary("ambient dimensions differ");
    RatMat joined = c_lifts.m.augmented_with(a_basis.m);
    if (rank(joined) != joined.cols)
        throw NotComplementary("lifts do not complement the subspace");
    return BasisMatrix(std::move(joined));
}

OrientationSign intersection_sign(const BasisMatrix& tangent_y, const QuotientBasis& coorient_z) {
    size_t n = tangent_y.dim_ambient();
    if (coorient_z.reps.rows != n || coorient_z.subspace.rows != n)
        throw DifferentSpans("ambient dimensions differ");
    if (tangent_y.dim_span() != coorient_z.reps.cols)
        throw InconsistentDims("dimension of Y must equal the codimension of Z");
    if (coorient_z.reps.cols + coorient_z.subspace.cols != n)
        throw InconsistentDims("quotient representatives plus subspace must fill the ambient space");

    RatMat ref = coorient_z.reps.augmented_with(coorient_z.subspace);
    Rational dref = det(ref);
    if (sgn(dref) == 0) throw RankDeficient("invalid coorientation data");
    RatMat test = tangent_y.m.augmented_with(coorient_z.subspace);
    Rational dtest = det(test);
    if (sgn(dtest) == 0) throw NotTransverse("projection of T_pY to the quotient is singular");
    return {sgn(dtest) * sgn(dref)};
}

namespace {
// basis of the intersection of two column spans
RatMat span_intersection(const RatMat& a, const RatMat& b) {
    // solve a u = b v: kernel of [a | -b]
    RatMat joined(a.rows, a.cols + b.cols);
    for (size_t i = 0; i < a.rows; ++i) {
        for (size_t j = 0; j < a.cols; ++j) joined.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols; ++j) joined.at(i, a.cols + j) = -b.at(i, j);
    }
    // row-reduce and read off kernel vectors
    RatMat m = joined;
    std::vector<long> pivot_of_col(m.cols, -1);
    size_t r = 0;
    for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
        size_t piv = r;
        while (piv < m.rows && sgn(m.at(piv, col)) == 0) ++piv;
        if (piv == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || sgn(m.at(i, col)) == 0) continue;
            Rational f = m.at(i, col) / m.at(r, col);
            for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_of_col[col] = static_cast<long>(r);
        ++r;
    }
    std::vector<std::vector<Rational>> kernel;
    for (size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Rational> k(m.cols, Rational(0));
        k[free_col] = 1;
        for (size_t col = 0; col < m.cols; ++col) {
            long pr = pivot_of_col[col];
            if (pr < 0) continue;
            k[col] = -m.at(static_cast<size_t>(pr), free_col) / m.at(static_cast<size_t>(pr), col);
        }
        kernel.push_back(std::move(k));
    }
    // map kernel vectors through a to get intersection vectors
    RatMat out(a.rows, kernel.size());
    for (size_t j = 0; j < kernel.size(); ++j)
        for (size_t i = 0; i < a.rows; ++i) {
            Rational acc(0);
            for (size_t k = 0; k < a.cols; ++k) acc += a.at(i, k) * kernel[j][k];
            out.at(i, j) = acc;
        }
    return out;
}
} // namespace

QuotientBasis cup_coorientation(const QuotientBasis& coorient_y, const QuotientBasis& coorient_z) {
    size_t n = coorient_y.reps.rows;
    if (coorient_z.reps.rows != n) throw DifferentSpans("ambient dimensions differ");
    RatMat tangents = coorient_y.subspace.augmented_with(coorient_z.subspace);
    if (rank(tangents) != n) throw NotTransverse("tangent spaces do not span the ambient space");

    QuotientBasis out;
    out.reps = coorient_z.reps.augmented_with(coorient_y.reps); // Z-factor first
    out.subspace = span_intersection(coorient_y.subspace, coorient_z.subspace);
    RatMat full = out.reps.augmented_with(out.subspace);
    if (full.cols != n || rank(full) != n)
        throw NotTransverse("representatives do not complement the intersection");
    return out;
}

} // namespace caplink
