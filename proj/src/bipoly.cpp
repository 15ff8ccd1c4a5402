#include "caplink/bipoly.hpp"

#include "caplink/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace caplink {

const char* chart_name(ChartId c) {
    switch (c) {
        case ChartId::Z: return "z";
        case ChartId::Y: return "y";
        default: return "x";
    }
}

BiPoly BiPoly::constant(const Rational& v) {
    BiPoly p;
    if (sgn(v) != 0) p.terms[{0, 0}] = v;
    return p;
}

BiPoly BiPoly::var_s() {
    BiPoly p;
    p.terms[{1, 0}] = 1;
    return p;
}

BiPoly BiPoly::var_t() {
    BiPoly p;
    p.terms[{0, 1}] = 1;
    return p;
}

bool BiPoly::is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first == std::pair<int, int>{0, 0});
}

int BiPoly::degree_s() const {
    int d = -1;
    for (const auto& [m, v] : terms) d = std::max(d, m.first);
    return d;
}

int BiPoly::degree_t() const {
    int d = -1;
    for (const auto& [m, v] : terms) d = std::max(d, m.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, v] : terms) d = std::max(d, m.first + m.second);
    return d;
}

void BiPoly::add_term(int i, int j, const Rational& v) {
    if (sgn(v) == 0) return;
    auto key = std::pair<int, int>{i, j};
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms[key] = v;
    } else {
        it->second += v;
        if (sgn(it->second) == 0) terms.erase(it);
    }
}

namespace {
Rational rpow(const Rational& b, int e) {
    Rational acc(1);
    for (int k = 0; k < e; ++k) acc *= b;
    return acc;
}
Interval ipow(const Interval& b, int e) {
    Interval acc = Interval::point(Rational(1));
    for (int k = 0; k < e; ++k) acc = acc * b;
    return acc;
}
} // namespace

Rational BiPoly::eval(const Rational& s, const Rational& t) const {
    Rational acc(0);
    for (const auto& [m, v] : terms) acc += v * rpow(s, m.first) * rpow(t, m.second);
    return acc;
}

Interval BiPoly::eval(const Interval& s, const Interval& t) const {
    Interval acc = Interval::point(Rational(0));
    for (const auto& [m, v] : terms) acc = acc + v * (ipow(s, m.first) * ipow(t, m.second));
    return acc;
}

BiPoly BiPoly::partial_s() const {
    BiPoly p;
    for (const auto& [m, v] : terms)
        if (m.first > 0) p.add_term(m.first - 1, m.second, Rational(m.first) * v);
    return p;
}

BiPoly BiPoly::partial_t() const {
    BiPoly p;
    for (const auto& [m, v] : terms)
        if (m.second > 0) p.add_term(m.first, m.second - 1, Rational(m.second) * v);
    return p;
}

UniPoly BiPoly::specialize_s(const Rational& a) const {
    std::vector<Rational> c(static_cast<size_t>(std::max(0, degree_t())) + 1, Rational(0));
    for (const auto& [m, v] : terms) c[static_cast<size_t>(m.second)] += v * rpow(a, m.first);
    return UniPoly(std::move(c));
}

UniPoly BiPoly::specialize_t(const Rational& b) const {
    std::vector<Rational> c(static_cast<size_t>(std::max(0, degree_s())) + 1, Rational(0));
    for (const auto& [m, v] : terms) c[static_cast<size_t>(m.first)] += v * rpow(b, m.second);
    return UniPoly(std::move(c));
}

std::vector<UniPoly> BiPoly::as_poly_in_t() const {
    std::vector<UniPoly> out(static_cast<size_t>(std::max(0, degree_t())) + 1);
    for (const auto& [m, v] : terms) {
        UniPoly& dst = out[static_cast<size_t>(m.second)];
        if (dst.c.size() <= static_cast<size_t>(m.first)) dst.c.resize(static_cast<size_t>(m.first) + 1, Rational(0));
        dst.c[static_cast<size_t>(m.first)] = v;
    }
    for (auto& p : out) p.trim();
    return out;
}

BiPoly BiPoly::transpose() const {
    BiPoly p;
    for (const auto& [m, v] : terms) p.terms[{m.second, m.first}] = v;
    return p;
}

BiPoly BiPoly::operator-() const {
    BiPoly p = *this;
    for (auto& [m, v] : p.terms) v = -v;
    return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [m, v] : o.terms) add_term(m.first, m.second, v);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [m, v] : o.terms) add_term(m.first, m.second, -v);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly p;
    for (const auto& [ma, va] : a.terms)
        for (const auto& [mb, vb] : b.terms)
            p.add_term(ma.first + mb.first, ma.second + mb.second, va * vb);
    return p;
}

BiPoly operator*(const Rational& v, const BiPoly& p) {
    BiPoly out;
    if (sgn(v) == 0) return out;
    for (const auto& [m, c] : p.terms) out.terms[m] = v * c;
    return out;
}

std::string BiPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : terms) {
        if (!first) os << " + ";
        first = false;
        os << v.get_str();
        if (m.first > 0) os << "*s^" << m.first;
        if (m.second > 0) os << "*t^" << m.second;
    }
    return os.str();
}

BiPoly dehomogenize(const HomPoly& H, ChartId chart) {
    BiPoly p;
    for (const auto& [m, v] : H.terms()) {
        if (!v.is_real())
            throw InternalError("solve", "dehomogenization of a non-real form");
        switch (chart) {
            case ChartId::Z: p.add_term(m[0], m[1], v.re); break;
            case ChartId::Y: p.add_term(m[0], m[2], v.re); break;
            case ChartId::X: p.add_term(m[1], m[2], v.re); break;
        }
    }
    return p;
}

std::array<BiPoly, 3> chart_rep(ChartId chart) {
    BiPoly s = BiPoly::var_s(), t = BiPoly::var_t(), one = BiPoly::constant(1);
    switch (chart) {
        case ChartId::Z: return {s, t, one};
        case ChartId::Y: return {s, one, t};
        default: return {one, s, t};
    }
}

std::array<Rational, 3> chart_rep_at(ChartId chart, const Rational& s, const Rational& t) {
    switch (chart) {
        case ChartId::Z: return {s, t, Rational(1)};
        case ChartId::Y: return {s, Rational(1), t};
        default: return {Rational(1), s, t};
    }
}

// ----------------------------------------------------------------- resultants

namespace {

UniPoly leading_coeff_in_t(const BiPoly& f) {
    auto rows = f.as_poly_in_t();
    return rows.back();
}

// exact univariate division; remainder must vanish
UniPoly exact_div(const UniPoly& f, const UniPoly& d) {
    auto [q, r] = f.divmod(d);
    if (!r.is_zero()) throw InternalError("solve", "inexact polynomial division");
    return q;
}

} // namespace

UniPoly resultant_t(const BiPoly& f, const BiPoly& g) {
    int mf = f.degree_t(), mg = g.degree_t();
    if (f.is_zero() || g.is_zero()) return UniPoly();
    if (mf == 0 && mg == 0) return UniPoly::constant(1);
    if (mf == 0) {
        // res(c(s), g) = c(s)^deg_t(g)
        UniPoly c = f.specialize_t(0);
        UniPoly acc = UniPoly::constant(1);
        for (int k = 0; k < mg; ++k) acc = acc * c;
        return acc;
    }
    if (mg == 0) {
        UniPoly c = g.specialize_t(0);
        UniPoly acc = UniPoly::constant(1);
        for (int k = 0; k < mf; ++k) acc = acc * c;
        return acc;
    }

    UniPoly lf = leading_coeff_in_t(f), lg = leading_coeff_in_t(g);
    // Sylvester rows give deg_s(Res) <= mg*deg_s(f) + mf*deg_s(g)
    int bound = mg * f.degree_s() + mf * g.degree_s();
    std::vector<Rational> xs, ys;
    long candidate = 0;
    while (static_cast<int>(xs.size()) < bound + 1) {
        Rational a(candidate);
        // alternate 0, 1, -1, 2, -2, ...
        candidate = candidate <= 0 ? -candidate + 1 : -candidate;
        if (lf.sign_at(a) == 0 || lg.sign_at(a) == 0) continue;
        xs.push_back(a);
        ys.push_back(resultant(f.specialize_s(a), g.specialize_s(a)));
    }

    // Newton-form interpolation
    size_t n = xs.size();
    std::vector<Rational> dd = ys; // divided differences, built in place
    for (size_t level = 1; level < n; ++level)
        for (size_t k = n - 1; k >= level; --k)
            dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
    UniPoly acc = UniPoly::constant(dd[n - 1]);
    for (size_t k = n - 1; k-- > 0;) {
        UniPoly shift({-xs[k], Rational(1)});
        acc = acc * shift;
        acc += UniPoly::constant(dd[k]);
    }
    return acc;
}

UniPoly resultant_s(const BiPoly& f, const BiPoly& g) {
    return resultant_t(f.transpose(), g.transpose());
}

// -------------------------------------------------------------- gcd machinery

namespace {

// contents and primitive parts of a poly in t over Q[s]
UniPoly content(const std::vector<UniPoly>& rows) {
    UniPoly c;
    for (const auto& r : rows) c = gcd(c, r);
    return c;
}

std::vector<UniPoly> divide_rows(const std::vector<UniPoly>& rows, const UniPoly& d) {
    std::vector<UniPoly> out(rows.size());
    for (size_t k = 0; k < rows.size(); ++k)
        out[k] = rows[k].is_zero() ? UniPoly() : exact_div(rows[k], d);
    return out;
}

int degree_in_t(const std::vector<UniPoly>& rows) {
    for (size_t k = rows.size(); k-- > 0;)
        if (!rows[k].is_zero()) return static_cast<int>(k);
    return -1;
}

void trim_rows(std::vector<UniPoly>& rows) {
    while (!rows.empty() && rows.back().is_zero()) rows.pop_back();
}

// pseudo-remainder of F by G as polynomials in t over Q[s]
std::vector<UniPoly> pseudo_rem(std::vector<UniPoly> F, const std::vector<UniPoly>& G) {
    int dg = degree_in_t(G);
    const UniPoly& lg = G[static_cast<size_t>(dg)];
    while (true) {
        int df = degree_in_t(F);
        if (df < dg) break;
        UniPoly lf = F[static_cast<size_t>(df)];
        // F <- lg * F - lf * t^(df-dg) * G
        std::vector<UniPoly> next(static_cast<size_t>(df) + 1);
        for (int k = 0; k <= df; ++k) {
            UniPoly v = F[static_cast<size_t>(k)] * lg;
            int j = k - (df - dg);
            if (j >= 0 && j <= dg) v -= lf * G[static_cast<size_t>(j)];
            next[static_cast<size_t>(k)] = std::move(v);
        }
        next[static_cast<size_t>(df)] = UniPoly(); // cancels by construction
        F = std::move(next);
        trim_rows(F);
        if (F.empty()) break;
    }
    return F;
}

BiPoly from_rows(const std::vector<UniPoly>& rows) {
    BiPoly p;
    for (size_t j = 0; j < rows.size(); ++j)
        for (size_t i = 0; i < rows[j].c.size(); ++i)
            p.add_term(static_cast<int>(i), static_cast<int>(j), rows[j].c[i]);
    return p;
}

Rational gradedlex_leading(const BiPoly& p) {
    // largest (total degree, s-exp, t-exp)
    const Rational* best = nullptr;
    std::tuple<int, int, int> bestkey{-1, -1, -1};
    for (const auto& [m, v] : p.terms) {
        std::tuple<int, int, int> key{m.first + m.second, m.first, m.second};
        if (key > bestkey) {
            bestkey = key;
            best = &v;
        }
    }
    return best ? *best : Rational(0);
}

} // namespace

BiPoly bi_gcd(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() && g.is_zero()) return BiPoly();
    if (f.is_zero()) return (1 / gradedlex_leading(g)) * g;
    if (g.is_zero()) return (1 / gradedlex_leading(f)) * f;

    auto F = f.as_poly_in_t();
    auto G = g.as_poly_in_t();
    UniPoly cf = content(F), cg = content(G);
    UniPoly cont_gcd = gcd(cf, cg);
    F = divide_rows(F, cf);
    G = divide_rows(G, cg);

    // primitive PRS in t
    if (degree_in_t(F) < degree_in_t(G)) std::swap(F, G);
    while (true) {
        int dg = degree_in_t(G);
        if (dg < 0) break;
        if (dg == 0) {
            // primitive constant-in-t: gcd of the primitive parts is 1
            G.clear();
            G.push_back(UniPoly::constant(1));
            break;
        }
        std::vector<UniPoly> R = pseudo_rem(F, G);
        if (degree_in_t(R) < 0) break;
        UniPoly cr = content(R);
        R = divide_rows(R, cr);
        F = std::move(G);
        G = std::move(R);
    }

    // result: cont_gcd * primitive gcd (in G)
    BiPoly prim = from_rows(G);
    BiPoly cont_poly;
    for (size_t i = 0; i < cont_gcd.c.size(); ++i) cont_poly.add_term(static_cast<int>(i), 0, cont_gcd.c[i]);
    BiPoly result = cont_poly * prim;
    Rational lead = gradedlex_leading(result);
    return (1 / lead) * result;
}

// ---------------------------------------------------------------- winding

namespace {

// Cauchy index of f/g over [a, b] (jumps at zeros of g), as needed for the
// boundary degree computation. Requires g(a) != 0 and g(b) != 0.
int edge_index(const UniPoly& f, const UniPoly& g, const Rational& a, const Rational& b) {
    if (g.is_zero()) return 0;
    SturmChain ch = SturmChain::pair(g, f);
    return ch.cauchy_index(a, b);
}

// true when f and g share a real zero on the closed segment
bool common_zero_on_edge(const UniPoly& f, const UniPoly& g, const Rational& a, const Rational& b) {
    if (f.is_zero() && g.is_zero()) return true;
    UniPoly h = f.is_zero() ? g : (g.is_zero() ? f : gcd(f, g));
    if (h.is_zero()) return true;
    if (h.degree() == 0) return false;
    UniPoly hs = squarefree_part(h);
    if (hs.sign_at(a) == 0 || hs.sign_at(b) == 0) return true;
    return SturmChain::of(hs).count_roots(a, b) > 0;
}

} // namespace

int winding_number(const BiPoly& f, const BiPoly& g, const Interval& s, const Interval& t,
                   bool& ok) {
    ok = false;
    UniPoly f_bot = f.specialize_t(t.lo), g_bot = g.specialize_t(t.lo);
    UniPoly f_top = f.specialize_t(t.hi), g_top = g.specialize_t(t.hi);
    UniPoly f_left = f.specialize_s(s.lo), g_left = g.specialize_s(s.lo);
    UniPoly f_right = f.specialize_s(s.hi), g_right = g.specialize_s(s.hi);

    // corner denominators must not vanish
    if (g_bot.sign_at(s.lo) == 0 || g_bot.sign_at(s.hi) == 0 || g_top.sign_at(s.lo) == 0 ||
        g_top.sign_at(s.hi) == 0)
        return 0;
    if (common_zero_on_edge(f_bot, g_bot, s.lo, s.hi) ||
        common_zero_on_edge(f_top, g_top, s.lo, s.hi) ||
        common_zero_on_edge(f_left, g_left, t.lo, t.hi) ||
        common_zero_on_edge(f_right, g_right, t.lo, t.hi))
        return 0;

    int total = edge_index(f_bot, g_bot, s.lo, s.hi)    // bottom, left to right
              + edge_index(f_right, g_right, t.lo, t.hi) // right, upward
              - edge_index(f_top, g_top, s.lo, s.hi)     // top, right to left
              - edge_index(f_left, g_left, t.lo, t.hi);  // left, downward
    if (total % 2 != 0)
        throw InternalError("solve", "odd boundary index in winding computation");
    ok = true;
    return total / 2;
}

// ------------------------------------------------------- homogeneous gcd

HomPoly hom_gcd(const HomPoly& A, const HomPoly& B) {
    if (!A.is_real() || !B.is_real())
        throw InternalError("poly", "hom_gcd expects real forms");
    if (A.is_zero() && B.is_zero()) return HomPoly(0);
    auto z_val = [](const HomPoly& H) {
        int k = H.degree();
        for (const auto& [m, v] : H.terms()) k = std::min(k, m[2]);
        return k;
    };
    auto strip_z = [](const HomPoly& H, int k) {
        HomPoly out(H.degree() - k);
        for (const auto& [m, v] : H.terms()) out.set_coeff({m[0], m[1], m[2] - k}, v);
        return out;
    };
    if (A.is_zero() || B.is_zero()) {
        const HomPoly& H = A.is_zero() ? B : A;
        GaussianRational lead = H.terms().begin()->second;
        return GaussianRational(Rational(1)) / lead * H;
    }
    int ka = z_val(A), kb = z_val(B);
    HomPoly A1 = strip_z(A, ka), B1 = strip_z(B, kb);
    // z does not divide A1 or B1, so (x, y)-degrees equal the form degrees
    BiPoly fa, fb;
    for (const auto& [m, v] : A1.terms()) fa.add_term(m[0], m[1], v.re);
    for (const auto& [m, v] : B1.terms()) fb.add_term(m[0], m[1], v.re);
    BiPoly g = bi_gcd(fa, fb);
    int dg = g.total_degree();
    int kz = std::min(ka, kb);
    HomPoly out(dg + kz);
    for (const auto& [m, v] : g.terms)
        out.set_coeff({m.first, m.second, dg - m.first - m.second + kz}, GaussianRational(v));
    return out;
}

} // namespace caplink
