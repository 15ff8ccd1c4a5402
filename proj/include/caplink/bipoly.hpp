#ifndef CAPLINK_BIPOLY_HPP
#define CAPLINK_BIPOLY_HPP

#include "caplink/hompoly.hpp"
#include "caplink/interval.hpp"
#include "caplink/unipoly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace caplink {

// Affine charts of the projective plane in canonical ownership order.
// Chart coordinates (s, t): Z -> (x, y), Y -> (x, z), X -> (y, z).
enum class ChartId { Z = 0, Y = 1, X = 2 };

const char* chart_name(ChartId c);

// Bivariate polynomial over the rationals in chart coordinates (s, t).
struct BiPoly {
    std::map<std::pair<int, int>, Rational> terms; // (s-exp, t-exp) -> coeff

    static BiPoly constant(const Rational& v);
    static BiPoly var_s();
    static BiPoly var_t();

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    int degree_s() const;
    int degree_t() const;
    int total_degree() const;

    void add_term(int i, int j, const Rational& v);

    Rational eval(const Rational& s, const Rational& t) const;
    Interval eval(const Interval& s, const Interval& t) const;

    BiPoly partial_s() const;
    BiPoly partial_t() const;

    UniPoly specialize_s(const Rational& a) const; // UniPoly in t
    UniPoly specialize_t(const Rational& b) const; // UniPoly in s

    std::vector<UniPoly> as_poly_in_t() const; // index = t-exponent, coeff in Q[s]
    BiPoly transpose() const;                  // swap s and t

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& v, const BiPoly& p);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms == b.terms; }

    std::string str() const;
};

// Dehomogenization of a real form into chart coordinates.
BiPoly dehomogenize(const HomPoly& H, ChartId chart);

// Homogeneous (x, y, z) representative of a chart point, symbolically in
// the chart coordinates.
std::array<BiPoly, 3> chart_rep(ChartId chart);
std::array<Rational, 3> chart_rep_at(ChartId chart, const Rational& s, const Rational& t);

// Resultants eliminating one chart variable; exact, computed by evaluation
// and Lagrange interpolation at specializations that keep leading
// coefficients alive.
UniPoly resultant_t(const BiPoly& f, const BiPoly& g); // in Q[s]
UniPoly resultant_s(const BiPoly& f, const BiPoly& g); // in Q[t]

// Bivariate gcd (primitive PRS), normalized so the graded-lex leading
// coefficient is 1.
BiPoly bi_gcd(const BiPoly& f, const BiPoly& g);

// Winding number of (f, g) around the rectangle [s] x [t], traversed
// counterclockwise. Precondition: no common real zero of (f, g) on the
// boundary and g nonzero at the four corners; `ok` reports whether the
// precondition could be verified.
int winding_number(const BiPoly& f, const BiPoly& g, const Interval& s, const Interval& t,
                   bool& ok);

} // namespace caplink

#endif
