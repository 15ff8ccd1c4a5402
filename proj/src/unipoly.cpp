#include "caplink/unipoly.hpp"

#include "caplink/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace caplink {

UniPoly UniPoly::constant(const Rational& v) {
    UniPoly p;
    if (sgn(v) != 0) p.c.push_back(v);
    return p;
}

UniPoly UniPoly::monomial(int k, const Rational& v) {
    UniPoly p;
    if (sgn(v) != 0) {
        p.c.assign(static_cast<size_t>(k) + 1, Rational(0));
        p.c.back() = v;
    }
    return p;
}

void UniPoly::trim() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return Rational(0);
    return c[static_cast<size_t>(k)];
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Interval UniPoly::eval(const Interval& x) const {
    Interval acc = Interval::point(Rational(0));
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int UniPoly::sign_at_infinity(int dir) const {
    if (is_zero()) return 0;
    int s = sgn(leading());
    if (dir < 0 && (degree() % 2 != 0)) s = -s;
    return s;
}

UniPoly UniPoly::derivative() const {
    UniPoly d;
    if (c.size() <= 1) return d;
    d.c.resize(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d.c[k - 1] = Rational(static_cast<long>(k)) * c[k];
    d.trim();
    return d;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    UniPoly m = *this;
    Rational inv = 1 / leading();
    for (auto& v : m.c) v *= inv;
    return m;
}

UniPoly UniPoly::negated_variable() const {
    UniPoly p = *this;
    for (size_t k = 1; k < p.c.size(); k += 2) p.c[k] = -p.c[k];
    return p;
}

UniPoly UniPoly::reversed(int degree_bound) const {
    assert(degree() <= degree_bound);
    UniPoly r;
    r.c.assign(static_cast<size_t>(degree_bound) + 1, Rational(0));
    for (size_t k = 0; k < c.size(); ++k) r.c[static_cast<size_t>(degree_bound) - k] = c[k];
    r.trim();
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Rational(0));
    for (size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Rational(0));
    for (size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UniPoly p;
    p.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (sgn(a.c[i]) == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
    }
    p.trim();
    return p;
}

UniPoly operator*(const Rational& s, UniPoly p) {
    if (sgn(s) == 0) return {};
    for (auto& v : p.c) v *= s;
    return p;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    assert(!d.is_zero());
    UniPoly q, r = *this;
    if (degree() < d.degree()) return {q, r};
    q.c.assign(static_cast<size_t>(degree() - d.degree()) + 1, Rational(0));
    Rational inv = 1 / d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational f = r.leading() * inv;
        q.c[static_cast<size_t>(k)] = f;
        for (size_t j = 0; j < d.c.size(); ++j) r.c[static_cast<size_t>(k) + j] -= f * d.c[j];
        r.trim();
    }
    q.trim();
    return {q, r};
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& v = c[static_cast<size_t>(k)];
        if (sgn(v) == 0) continue;
        Rational a = abs(v);
        if (first) {
            if (sgn(v) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(v) < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && k > 0;
        if (!unit) os << a.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f.rem(g);
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero() || f.degree() == 0) return f.monic();
    UniPoly g = gcd(f, f.derivative());
    return f.divmod(g).first.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    if (f.is_zero() || f.degree() == 0) return out;
    // Yun's algorithm
    UniPoly fp = f.derivative();
    UniPoly a = gcd(f, fp);
    UniPoly b = f.divmod(a).first;
    UniPoly cpart = fp.divmod(a).first;
    UniPoly d = cpart - b.derivative();
    int k = 1;
    while (b.degree() > 0) {
        UniPoly fac = gcd(b, d);
        if (fac.degree() > 0) out.emplace_back(fac, k);
        b = b.divmod(fac).first;
        cpart = d.divmod(fac).first;
        d = cpart - b.derivative();
        ++k;
    }
    return out;
}

int root_multiplicity(const UniPoly& f, const RootLoc& loc) {
    if (loc.exact()) {
        // direct: divide out (t - r) until nonzero
        UniPoly lin({-loc.lo, Rational(1)});
        UniPoly cur = f;
        int m = 0;
        while (!cur.is_zero()) {
            auto [q, r] = cur.divmod(lin);
            if (!r.is_zero()) break;
            ++m;
            cur = q;
        }
        return m;
    }
    for (const auto& [fac, mult] : squarefree_decomposition(f)) {
        if (fac.sign_at(loc.lo) * fac.sign_at(loc.hi) < 0) return mult;
    }
    return 0;
}

Rational resultant(const UniPoly& f, const UniPoly& g) {
    // res(f, g) = lc(g)^(m - deg r) * (-1)^(m n) * res(g, r), r = f mod g
    if (f.is_zero() || g.is_zero()) return Rational(0);
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return Rational(1);
    if (n == 0) {
        Rational v(1);
        for (int k = 0; k < m; ++k) v *= g.leading();
        return v;
    }
    if (m == 0) {
        Rational v(1);
        for (int k = 0; k < n; ++k) v *= f.leading();
        return v;
    }
    if (m < n) {
        Rational s = resultant(g, f);
        if ((m % 2) && (n % 2)) s = -s;
        return s;
    }
    UniPoly r = f.rem(g);
    if (r.is_zero()) return Rational(0);
    int p = r.degree();
    Rational lead(1);
    for (int k = 0; k < m - p; ++k) lead *= g.leading();
    Rational sub = resultant(g, r);
    Rational out = lead * sub;
    if ((m % 2) && (n % 2)) out = -out;
    return out;
}

Rational cauchy_root_bound(const UniPoly& f) {
    assert(!f.is_zero());
    Rational m(0);
    for (size_t k = 0; k + 1 < f.c.size(); ++k) m = std::max(m, Rational(abs(f.c[k])));
    return 1 + m / Rational(abs(f.leading()));
}

SturmChain SturmChain::pair(const UniPoly& f, const UniPoly& g) {
    SturmChain ch;
    ch.seq.push_back(f);
    if (!g.is_zero()) {
        ch.seq.push_back(g);
        while (true) {
            const UniPoly& p = ch.seq[ch.seq.size() - 2];
            const UniPoly& q = ch.seq.back();
            if (q.is_zero()) break;
            UniPoly r = p.rem(q);
            if (r.is_zero()) break;
            ch.seq.push_back(Rational(-1) * std::move(r));
        }
    }
    return ch;
}

namespace {
int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}
} // namespace

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& p : seq) signs.push_back(p.sign_at(x));
    return count_variations(signs);
}

int SturmChain::variations_at_infinity(int dir) const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& p : seq) signs.push_back(p.sign_at_infinity(dir));
    return count_variations(signs);
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_roots_real_line() const {
    return variations_at_infinity(-1) - variations_at_infinity(+1);
}

int SturmChain::cauchy_index(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmChain::cauchy_index_real_line() const {
    return variations_at_infinity(-1) - variations_at_infinity(+1);
}

namespace {

struct Isolator {
    const UniPoly& sf;
    SturmChain chain;
    std::vector<RootLoc> out;

    // both endpoints non-roots; `count` roots strictly inside (a, b)
    void split(const Rational& a, const Rational& b, int count) {
        if (count == 0) return;
        if (count == 1) {
            out.push_back({a, b});
            return;
        }
        Rational mid = (a + b) / 2;
        if (sf.sign_at(mid) == 0) {
            out.push_back({mid, mid});
            // find a margin around mid that isolates it
            Rational delta = (b - a) / 4;
            while (sf.sign_at(mid - delta) == 0 || sf.sign_at(mid + delta) == 0 ||
                   chain.count_roots(mid - delta, mid + delta) != 1) {
                delta /= 2;
            }
            split(a, mid - delta, chain.count_roots(a, mid - delta));
            split(mid + delta, b, chain.count_roots(mid + delta, b));
            return;
        }
        int left = chain.count_roots(a, mid);
        split(a, mid, left);
        split(mid, b, count - left);
    }
};

} // namespace

IsolatedRoots isolate_real_roots(const UniPoly& f) {
    if (f.is_zero()) throw InternalError("solve", "root isolation of the zero polynomial");
    IsolatedRoots res;
    res.squarefree = squarefree_part(f);
    if (res.squarefree.degree() <= 0) return res;
    if (res.squarefree.degree() == 1) {
        Rational r = -res.squarefree.c[0] / res.squarefree.c[1];
        res.roots.push_back({r, r});
        return res;
    }
    Isolator iso{res.squarefree, SturmChain::of(res.squarefree), {}};
    Rational bound = cauchy_root_bound(res.squarefree);
    iso.split(-bound, bound, iso.chain.count_roots(-bound, bound));
    std::sort(iso.out.begin(), iso.out.end(),
              [](const RootLoc& x, const RootLoc& y) { return x.lo < y.lo; });
    // make closures pairwise disjoint
    for (size_t i = 0; i + 1 < iso.out.size(); ++i) {
        while (iso.out[i].hi >= iso.out[i + 1].lo) {
            if (!iso.out[i].exact()) {
                refine_away_from(res.squarefree, iso.out[i], iso.out[i + 1].lo);
            } else {
                refine_away_from(res.squarefree, iso.out[i + 1], iso.out[i].hi);
            }
        }
    }
    res.roots = std::move(iso.out);
    return res;
}

namespace {
// one bisection step on a sign-changing bracket; collapses to exact on a hit
void bisect_step(const UniPoly& sf, RootLoc& loc) {
    Rational mid = loc.mid();
    int sm = sf.sign_at(mid);
    if (sm == 0) {
        loc.lo = mid;
        loc.hi = mid;
        return;
    }
    if (sf.sign_at(loc.lo) == sm) {
        loc.lo = mid;
    } else {
        loc.hi = mid;
    }
}
} // namespace

void refine_root(const UniPoly& squarefree, RootLoc& loc, const Rational& width) {
    while (!loc.exact() && loc.width() > width) bisect_step(squarefree, loc);
}

void refine_away_from(const UniPoly& squarefree, RootLoc& loc, const Rational& value) {
    if (loc.exact()) {
        if (loc.lo == value)
            throw InternalError("solve", "cannot separate a root from itself");
        return;
    }
    while (loc.lo <= value && value <= loc.hi) bisect_step(squarefree, loc);
}

} // namespace caplink
