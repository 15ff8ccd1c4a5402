#include "caplink/hompoly.hpp"

#include "caplink/errors.hpp"

#include <cassert>
#include <sstream>

namespace caplink {

std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return z.re.get_str();
    std::ostringstream os;
    if (sgn(z.re) == 0) {
        if (z.im == 1)
            os << "i";
        else if (z.im == -1)
            os << "-i";
        else
            os << z.im.get_str() << "*i";
        return os.str();
    }
    os << "(" << z.re.get_str() << (sgn(z.im) < 0 ? "-" : "+");
    Rational ai = abs(z.im);
    if (ai != 1) os << ai.get_str() << "*";
    os << "i)";
    return os.str();
}

HomPoly HomPoly::term(int degree, Mono m, const GaussianRational& coeff) {
    HomPoly p(degree);
    p.set_coeff(m, coeff);
    return p;
}

bool HomPoly::is_real() const {
    for (const auto& [m, v] : terms_)
        if (!v.is_real()) return false;
    return true;
}

GaussianRational HomPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void HomPoly::set_coeff(const Mono& m, const GaussianRational& v) {
    if (m[0] < 0 || m[1] < 0 || m[2] < 0 || m[0] + m[1] + m[2] != degree_)
        throw InternalError("poly", "exponent triple does not match the degree tag");
    if (v.is_zero())
        terms_.erase(m);
    else
        terms_[m] = v;
}

namespace {
GaussianRational power(const GaussianRational& base, int e) {
    GaussianRational acc(Rational(1));
    for (int k = 0; k < e; ++k) acc *= base;
    return acc;
}
Rational power(const Rational& base, int e) {
    Rational acc(1);
    for (int k = 0; k < e; ++k) acc *= base;
    return acc;
}
} // namespace

GaussianRational HomPoly::evaluate(const GaussianRational& x, const GaussianRational& y,
                                   const GaussianRational& z) const {
    GaussianRational acc;
    for (const auto& [m, v] : terms_) acc += v * power(x, m[0]) * power(y, m[1]) * power(z, m[2]);
    return acc;
}

Rational HomPoly::evaluate_real(const Rational& x, const Rational& y, const Rational& z) const {
    Rational acc(0);
    for (const auto& [m, v] : terms_) {
        assert(v.is_real());
        acc += v.re * power(x, m[0]) * power(y, m[1]) * power(z, m[2]);
    }
    return acc;
}

HomPoly HomPoly::real_part() const {
    HomPoly p(degree_);
    for (const auto& [m, v] : terms_)
        if (sgn(v.re) != 0) p.terms_[m] = GaussianRational(v.re);
    return p;
}

HomPoly HomPoly::imag_part() const {
    HomPoly p(degree_);
    for (const auto& [m, v] : terms_)
        if (sgn(v.im) != 0) p.terms_[m] = GaussianRational(v.im);
    return p;
}

HomPoly HomPoly::conjugate_coefficients() const {
    HomPoly p(degree_);
    for (const auto& [m, v] : terms_) p.terms_[m] = v.conj();
    return p;
}

std::array<HomPoly, 3> HomPoly::gradient() const {
    if (degree_ < 1) throw DegreeZero("gradient of a degree-0 form");
    std::array<HomPoly, 3> g{HomPoly(degree_ - 1), HomPoly(degree_ - 1), HomPoly(degree_ - 1)};
    for (const auto& [m, v] : terms_) {
        for (int k = 0; k < 3; ++k) {
            if (m[k] == 0) continue;
            Mono d = m;
            d[k] -= 1;
            GaussianRational add = GaussianRational(Rational(m[k])) * v;
            auto& dst = g[k];
            auto it = dst.terms_.find(d);
            if (it == dst.terms_.end())
                dst.terms_[d] = add;
            else {
                it->second += add;
                if (it->second.is_zero()) dst.terms_.erase(it);
            }
        }
    }
    return g;
}

HomPoly HomPoly::operator-() const {
    HomPoly p(degree_);
    for (const auto& [m, v] : terms_) p.terms_[m] = -v;
    return p;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    if (degree_ != o.degree_)
        throw DegreeMismatch("sum of forms of degrees " + std::to_string(degree_) + " and " +
                             std::to_string(o.degree_));
    for (const auto& [m, v] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) { return *this += -o; }

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly p(a.degree_ + b.degree_);
    for (const auto& [ma, va] : a.terms_) {
        for (const auto& [mb, vb] : b.terms_) {
            Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
            auto it = p.terms_.find(m);
            if (it == p.terms_.end()) {
                GaussianRational v = va * vb;
                if (!v.is_zero()) p.terms_[m] = v;
            } else {
                it->second += va * vb;
                if (it->second.is_zero()) p.terms_.erase(it);
            }
        }
    }
    return p;
}

HomPoly operator*(const GaussianRational& s, const HomPoly& p) {
    HomPoly out(p.degree_);
    if (s.is_zero()) return out;
    for (const auto& [m, v] : p.terms_) out.terms_[m] = s * v;
    return out;
}

std::string HomPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    static const char* names[3] = {"x", "y", "z"};
    bool first = true;
    for (const auto& [m, v] : terms_) {
        // display sign: real part first, imaginary as tiebreak
        GaussianRational shown = v;
        int ds;
        if (v.is_real())
            ds = sgn(v.re);
        else if (sgn(v.re) == 0)
            ds = sgn(v.im);
        else
            ds = 1; // mixed coefficients keep their signs inside parens
        if (ds < 0) shown = -v;
        if (first) {
            if (ds < 0) os << "-";
            first = false;
        } else {
            os << (ds < 0 ? " - " : " + ");
        }
        bool mono_empty = (m[0] == 0 && m[1] == 0 && m[2] == 0);
        bool unit = !mono_empty && shown == GaussianRational(Rational(1));
        if (!unit) os << to_string(shown);
        bool need_star = !unit;
        for (int k = 0; k < 3; ++k) {
            if (m[k] == 0) continue;
            if (need_star) os << "*";
            os << names[k];
            if (m[k] > 1) os << "^" << m[k];
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- BinaryForm

bool BinaryForm::is_zero() const {
    for (const auto& v : coeffs)
        if (!v.is_zero()) return false;
    return true;
}

GaussianRational BinaryForm::evaluate(const GaussianRational& t0, const GaussianRational& t1) const {
    GaussianRational acc;
    for (int k = 0; k <= degree; ++k)
        acc += coeffs[static_cast<size_t>(k)] * power(t0, k) * power(t1, degree - k);
    return acc;
}

UniPoly BinaryForm::affine_real() const {
    std::vector<Rational> c(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) c[k] = coeffs[k].re;
    return UniPoly(std::move(c));
}

UniPoly BinaryForm::affine_imag() const {
    std::vector<Rational> c(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) c[k] = coeffs[k].im;
    return UniPoly(std::move(c));
}

BinaryForm BinaryForm::conjugate_coefficients() const {
    BinaryForm b(degree);
    for (size_t k = 0; k < coeffs.size(); ++k) b.coeffs[k] = coeffs[k].conj();
    return b;
}

BinaryForm BinaryForm::swapped() const {
    BinaryForm b(degree);
    for (size_t k = 0; k < coeffs.size(); ++k) b.coeffs[coeffs.size() - 1 - k] = coeffs[k];
    return b;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm p(a.degree + b.degree);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return p;
}

BinaryForm BinaryForm::reparametrized(const std::array<Rational, 4>& m) const {
    // t0 = m00 t0' + m01 t1', t1 = m10 t0' + m11 t1'
    BinaryForm nt0(1), nt1(1);
    nt0.coeffs[1] = GaussianRational(m[0]);
    nt0.coeffs[0] = GaussianRational(m[1]);
    nt1.coeffs[1] = GaussianRational(m[2]);
    nt1.coeffs[0] = GaussianRational(m[3]);
    BinaryForm acc(degree);
    for (int k = 0; k <= degree; ++k) {
        if (coeffs[static_cast<size_t>(k)].is_zero()) continue;
        BinaryForm termf(0);
        termf.coeffs[0] = coeffs[static_cast<size_t>(k)];
        for (int j = 0; j < k; ++j) termf = termf * nt0;
        for (int j = 0; j < degree - k; ++j) termf = termf * nt1;
        for (size_t j = 0; j < acc.coeffs.size(); ++j) acc.coeffs[j] += termf.coeffs[j];
    }
    return acc;
}

// ------------------------------------------------------------------- parser

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        char c = peek();
        if (pos < s.size()) ++pos;
        return c;
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw MalformedInput(why + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }

    mpz_class integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected an integer");
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return mpz_class(s.substr(start, pos - start));
    }

    Rational rational() {
        mpz_class num = integer();
        if (eat('/')) {
            mpz_class den = integer();
            if (den == 0) fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    // [sign] rat [ [*] i ] | [sign] i  -- one signed summand of a Gaussian coefficient
    GaussianRational gauss_summand() {
        int sgn_mult = 1;
        while (true) {
            if (eat('-'))
                sgn_mult = -sgn_mult;
            else if (eat('+'))
                ;
            else
                break;
        }
        if (peek() == 'i') {
            take();
            return {Rational(0), Rational(sgn_mult)};
        }
        Rational r = rational();
        if (sgn_mult < 0) r = -r;
        skip_ws();
        size_t save = pos;
        if (eat('*')) {
            if (peek() == 'i') {
                take();
                return {Rational(0), r};
            }
            pos = save; // the '*' belongs to the term, not this coefficient
            return {r, Rational(0)};
        }
        if (peek() == 'i') {
            take();
            return {Rational(0), r};
        }
        return {r, Rational(0)};
    }

    GaussianRational parenthesized_gauss() {
        // caller consumed '('
        GaussianRational v = gauss_summand();
        while (true) {
            char c = peek();
            if (c == ')') {
                take();
                return v;
            }
            if (c == '+' || c == '-') {
                v += gauss_summand();
                continue;
            }
            fail("expected ')' in coefficient");
        }
    }
};

} // namespace

HomPoly parse_poly(const std::string& text, bool require_nonzero) {
    Lexer lx{text};
    std::map<Mono, GaussianRational, MonoOrder> acc;
    int term_degree = -1;
    bool any_term = false;

    int pending_sign = 1;
    if (lx.eat('-')) pending_sign = -1;
    else lx.eat('+');

    while (true) {
        // one term
        GaussianRational coeff{Rational(pending_sign), Rational(0)};
        Mono expo{0, 0, 0};
        bool saw_atom = false;
        bool last_was_star = false;
        while (true) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= GaussianRational(lx.rational());
                saw_atom = true;
                last_was_star = false;
                continue;
            }
            if (c == 'i') {
                lx.take();
                coeff *= imag_unit();
                saw_atom = true;
                last_was_star = false;
                continue;
            }
            if (c == 'x' || c == 'y' || c == 'z') {
                lx.take();
                int idx = (c == 'x') ? 0 : (c == 'y') ? 1 : 2;
                int e = 1;
                if (lx.eat('^')) {
                    mpz_class k = lx.integer();
                    if (!k.fits_sint_p()) lx.fail("exponent too large");
                    e = static_cast<int>(k.get_si());
                }
                expo[static_cast<size_t>(idx)] += e;
                saw_atom = true;
                last_was_star = false;
                continue;
            }
            if (c == '(') {
                lx.take();
                coeff *= lx.parenthesized_gauss();
                saw_atom = true;
                last_was_star = false;
                continue;
            }
            if (c == '*') {
                lx.take();
                if (!saw_atom) lx.fail("'*' without a preceding factor");
                last_was_star = true;
                continue;
            }
            break;
        }
        if (!saw_atom) lx.fail("empty term");
        if (last_was_star) lx.fail("dangling '*'");

        int d = expo[0] + expo[1] + expo[2];
        if (term_degree < 0)
            term_degree = d;
        else if (d != term_degree)
            throw NotHomogeneous("mixed total degrees " + std::to_string(term_degree) + " and " +
                                 std::to_string(d) + " in \"" + text + "\"");
        any_term = true;
        if (!coeff.is_zero()) {
            auto it = acc.find(expo);
            if (it == acc.end())
                acc[expo] = coeff;
            else {
                it->second += coeff;
                if (it->second.is_zero()) acc.erase(it);
            }
        }

        char c = lx.peek();
        if (c == '\0') break;
        if (c == '+') {
            lx.take();
            pending_sign = 1;
            continue;
        }
        if (c == '-') {
            lx.take();
            pending_sign = -1;
            continue;
        }
        lx.fail("unexpected character");
    }
    if (!any_term) throw MalformedInput("no terms in \"" + text + "\"");

    HomPoly p(term_degree);
    for (const auto& [m, v] : acc) p.set_coeff(m, v);
    if (require_nonzero && p.is_zero())
        throw ZeroPolynomial("input \"" + text + "\" simplifies to the zero polynomial");
    return p;
}

// ----------------------------------------------------- pencil constructions

GaussianRational evaluate(const HomPoly& p, const std::array<GaussianRational, 3>& point) {
    return p.evaluate(point[0], point[1], point[2]);
}

std::array<HomPoly, 3> gradient(const HomPoly& p) { return p.gradient(); }

namespace {
void require_real_pair(const HomPoly& R, const HomPoly& S, const char* op) {
    if (!R.is_real() || !S.is_real())
        throw InputError("poly", std::string(op) + ": both forms must have real coefficients");
    if (R.degree() != S.degree())
        throw DegreeMismatch(std::string(op) + ": degrees " + std::to_string(R.degree()) +
                             " and " + std::to_string(S.degree()));
}
} // namespace

HomPoly pencil_member(const HomPoly& R, const HomPoly& S, const Rational& lambda,
                      const Rational& mu) {
    require_real_pair(R, S, "pencil_member");
    if (sgn(lambda) == 0 && sgn(mu) == 0) throw BothZero("pencil_member: (0, 0) is not a pencil parameter");
    return GaussianRational(lambda) * R + GaussianRational(mu) * S;
}

HomPoly complexify(const HomPoly& R, const HomPoly& S) {
    require_real_pair(R, S, "complexify");
    return R + imag_unit() * S;
}

std::pair<HomPoly, HomPoly> realify(const HomPoly& P) {
    return {P.real_part(), P.imag_part()};
}

HomPoly sum_of_squares(const HomPoly& R, const HomPoly& S) {
    require_real_pair(R, S, "sum_of_squares");
    return R * R + S * S;
}

Vec3Q cross(const Vec3Q& a, const Vec3Q& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3Q& v) { return sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0; }

BinaryForm restrict_to_line(const HomPoly& P, const Vec3Q& u, const Vec3Q& v) {
    if (is_zero(cross(u, v))) throw DependentPoints("restrict_to_line: projectively dependent points");
    std::array<BinaryForm, 3> lin;
    for (int k = 0; k < 3; ++k) {
        lin[static_cast<size_t>(k)] = BinaryForm(1);
        lin[static_cast<size_t>(k)].coeffs[1] = GaussianRational(u[static_cast<size_t>(k)]);
        lin[static_cast<size_t>(k)].coeffs[0] = GaussianRational(v[static_cast<size_t>(k)]);
    }
    BinaryForm acc(P.degree());
    for (const auto& [m, coeff] : P.terms()) {
        BinaryForm t(0);
        t.coeffs[0] = coeff;
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < m[static_cast<size_t>(k)]; ++j) t = t * lin[static_cast<size_t>(k)];
        for (size_t j = 0; j < acc.coeffs.size(); ++j) acc.coeffs[j] += t.coeffs[j];
    }
    if (acc.is_zero())
        throw IdenticallyZero("restrict_to_line: the line lies inside the zero set");
    return acc;
}

} // namespace caplink
