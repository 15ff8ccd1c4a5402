#ifndef CAPLINK_UNIPOLY_HPP
#define CAPLINK_UNIPOLY_HPP

#include "caplink/interval.hpp"
#include "caplink/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace caplink {

// Dense univariate polynomial over the rationals, coefficient of t^k at c[k].
// Normalized: no trailing zero coefficients; the zero polynomial has c empty.
struct UniPoly {
    std::vector<Rational> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& v);
    static UniPoly monomial(int k, const Rational& v);

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const Rational& leading() const { return c.back(); }
    Rational coeff(int k) const;

    Rational eval(const Rational& x) const;
    Interval eval(const Interval& x) const;
    int sign_at(const Rational& x) const { return sgn(eval(x)); }
    int sign_at_infinity(int dir) const; // dir = +1 or -1; 0 for the zero polynomial

    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly negated_variable() const; // p(-t)
    UniPoly reversed(int degree_bound) const; // t^degree_bound * p(1/t)

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, UniPoly p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }

    // Euclidean division by a nonzero divisor; returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly rem(const UniPoly& d) const { return divmod(d).second; }

    std::string str(const std::string& var = "t") const;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b); // monic, or zero if both zero
UniPoly squarefree_part(const UniPoly& f);

// Yun decomposition: f = lc * prod factor_k ^ mult_k with squarefree,
// pairwise-coprime factors.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

// Multiplicity of the root inside `loc` (an isolating interval for a root of
// squarefree_part(f)) as a root of f itself.
struct RootLoc;
int root_multiplicity(const UniPoly& f, const RootLoc& loc);

// Resultant of two polynomials, Sylvester-matrix convention
// res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over roots of f.
Rational resultant(const UniPoly& f, const UniPoly& g);

// All real roots lie in (-bound, bound).
Rational cauchy_root_bound(const UniPoly& f);

// Generalized Sturm sequence of (f, g): s0=f, s1=g, s_{k+1} = -rem(s_{k-1}, s_k).
struct SturmChain {
    std::vector<UniPoly> seq;

    static SturmChain of(const UniPoly& f) { return pair(f, f.derivative()); }
    static SturmChain pair(const UniPoly& f, const UniPoly& g);

    int variations_at(const Rational& x) const;
    int variations_at_infinity(int dir) const;

    // Number of distinct real roots of seq[0] in (a, b]; the classic count
    // when the chain is of(f) with f squarefree.
    int count_roots(const Rational& a, const Rational& b) const;
    int count_roots_real_line() const;

    // Cauchy index of g/f over (a, b): net number of -inf -> +inf jumps.
    // Requires f(a) != 0 and f(b) != 0.
    int cauchy_index(const Rational& a, const Rational& b) const;
    int cauchy_index_real_line() const;
};

// Isolating data for one real root: either an exact rational root
// (lo == hi) or an open interval (lo, hi) containing exactly one root of the
// defining squarefree polynomial, with sign change between the endpoints.
struct RootLoc {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    Interval interval() const { return {lo, hi}; }
};

struct IsolatedRoots {
    UniPoly squarefree;          // the defining polynomial of the locations
    std::vector<RootLoc> roots;  // sorted increasing, pairwise disjoint closures
};

// Complete real-root isolation via Sturm bisection. Exact rational roots hit
// by a bisection midpoint are reported as exact.
IsolatedRoots isolate_real_roots(const UniPoly& f);

// Shrink an isolating interval below `width` by sign bisection on the
// defining squarefree polynomial. No-op on exact roots.
void refine_root(const UniPoly& squarefree, RootLoc& loc, const Rational& width);

// Half the real-line refinement: keep shrinking until loc's closure is inside
// the open interval (excl_lo, excl_hi) is not needed; this narrows until the
// closure no longer contains `value`.
void refine_away_from(const UniPoly& squarefree, RootLoc& loc, const Rational& value);

} // namespace caplink

#endif
