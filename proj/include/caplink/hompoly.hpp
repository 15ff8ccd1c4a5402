#ifndef CAPLINK_HOMPOLY_HPP
#define CAPLINK_HOMPOLY_HPP

#include "caplink/rational.hpp"
#include "caplink/unipoly.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace caplink {

// Exponent triple (a, b, c) for x^a y^b z^c.
using Mono = std::array<int, 3>;

// Graded lexicographic term order, highest first in serialization.
struct MonoOrder {
    bool operator()(const Mono& p, const Mono& q) const {
        int dp = p[0] + p[1] + p[2], dq = q[0] + q[1] + q[2];
        if (dp != dq) return dp > dq;
        return p > q;
    }
};

// Homogeneous polynomial in x, y, z with Gaussian-rational coefficients.
// Every stored exponent triple sums to degree_, zero coefficients are never
// stored, and the zero polynomial keeps an explicit degree tag so that
// degree-checked operations stay total.
class HomPoly {
  public:
    explicit HomPoly(int degree = 0) : degree_(degree) {}

    static HomPoly term(int degree, Mono m, const GaussianRational& coeff);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Mono, GaussianRational, MonoOrder>& terms() const { return terms_; }

    GaussianRational coeff(const Mono& m) const;
    void set_coeff(const Mono& m, const GaussianRational& v); // validates a+b+c == degree

    GaussianRational evaluate(const GaussianRational& x, const GaussianRational& y,
                              const GaussianRational& z) const;
    Rational evaluate_real(const Rational& x, const Rational& y, const Rational& z) const;

    HomPoly real_part() const;
    HomPoly imag_part() const;
    HomPoly conjugate_coefficients() const;

    // partial derivatives; degree >= 1 required
    std::array<HomPoly, 3> gradient() const;

    HomPoly operator-() const;
    HomPoly& operator+=(const HomPoly& o); // equal degrees
    HomPoly& operator-=(const HomPoly& o);
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const GaussianRational& s, const HomPoly& p);
    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    std::string str() const; // canonical graded-lex serialization

  private:
    int degree_;
    std::map<Mono, GaussianRational, MonoOrder> terms_;
};

// Binary form p(t0, t1), coefficient list indexed by the exponent of t0
// (so coeffs[k] multiplies t0^k t1^(degree-k)).
struct BinaryForm {
    int degree = 0;
    std::vector<GaussianRational> coeffs; // size degree + 1

    explicit BinaryForm(int d = 0) : degree(d), coeffs(static_cast<size_t>(d) + 1) {}

    bool is_zero() const;
    GaussianRational evaluate(const GaussianRational& t0, const GaussianRational& t1) const;

    // The affine polynomial q(tau) = p(tau, 1) = sum coeffs[k] tau^k, split
    // into real and imaginary parts.
    UniPoly affine_real() const;
    UniPoly affine_imag() const;

    BinaryForm conjugate_coefficients() const;
    BinaryForm swapped() const; // p(t1, t0)

    // Substitute (t0, t1) <- M (t0', t1') with rational 2x2 matrix M given
    // row-major as {m00, m01, m10, m11}.
    BinaryForm reparametrized(const std::array<Rational, 4>& m) const;

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree == b.degree && a.coeffs == b.coeffs;
    }
};

// --- parsing and the pencil constructions ---

// Grammar: terms joined by + and -; a term is [coeff][*]monomial; monomials
// are products of x, y, z with optional ^k; coefficients are integers,
// fractions a/b, i, a/b*i or a parenthesized Gaussian rational (a/b+c/d*i).
// Whitespace never matters.
HomPoly parse_poly(const std::string& text, bool require_nonzero = false);

GaussianRational evaluate(const HomPoly& p, const std::array<GaussianRational, 3>& point);

std::array<HomPoly, 3> gradient(const HomPoly& p);

HomPoly pencil_member(const HomPoly& R, const HomPoly& S, const Rational& lambda,
                      const Rational& mu);

HomPoly complexify(const HomPoly& R, const HomPoly& S); // R + iS

std::pair<HomPoly, HomPoly> realify(const HomPoly& P); // (Re P, Im P)

HomPoly sum_of_squares(const HomPoly& R, const HomPoly& S); // R^2 + S^2

using Vec3Q = std::array<Rational, 3>;

Vec3Q cross(const Vec3Q& a, const Vec3Q& b);
bool is_zero(const Vec3Q& v);

// p(t0, t1) = P(t0 u + t1 v) for projectively independent rational points.
BinaryForm restrict_to_line(const HomPoly& P, const Vec3Q& u, const Vec3Q& v);

// Greatest common divisor of two homogeneous polynomials with real
// coefficients (monic-normalized); constant 1 when coprime.
HomPoly hom_gcd(const HomPoly& A, const HomPoly& B);

} // namespace caplink

#endif
