#include "caplink/linking.hpp"

#include "caplink/bipoly.hpp"
#include "caplink/errors.hpp"
#include "caplink/rng.hpp"

#include <cassert>
#include <sstream>

namespace caplink {

namespace {

// build-time calibration constants: the chart orientation and the transport
// seed each carry one free global sign, pinned by the single-point pencil
// (x, y) against the line through (1:0:0), (0:1:0), which must link to +1/2
constexpr int kChartCalibration = +1;
constexpr int kTransportCalibration = +1;

long lattice_coord(uint64_t& state, long half_width) {
    return rand_range(state, -half_width, half_width);
}

HomPoly linear_form(const Vec3Q& n) {
    HomPoly h(1);
    h.set_coeff({1, 0, 0}, GaussianRational(n[0]));
    h.set_coeff({0, 1, 0}, GaussianRational(n[1]));
    h.set_coeff({0, 0, 1}, GaussianRational(n[2]));
    return h;
}

BiPoly dot_sym(const std::array<BiPoly, 3>& rep, const Vec3Q& c) {
    BiPoly acc;
    for (int k = 0; k < 3; ++k) acc += c[static_cast<size_t>(k)] * rep[static_cast<size_t>(k)];
    return acc;
}

std::array<BiPoly, 3> cross_sym(const std::array<BiPoly, 3>& a, const Vec3Q& b) {
    return {b[2] * a[1] - b[1] * a[2], b[0] * a[2] - b[2] * a[0], b[1] * a[0] - b[0] * a[1]};
}

std::array<Interval, 3> rep_box(const CertifiedBasePoint& p) {
    Interval one = Interval::point(Rational(1));
    switch (p.chart) {
        case ChartId::Z: return {p.box_s(), p.box_t(), one};
        case ChartId::Y: return {p.box_s(), one, p.box_t()};
        default: return {one, p.box_s(), p.box_t()};
    }
}

Interval det3_interval(const std::array<Interval, 3>& a, const std::array<Interval, 3>& b,
                       const std::array<Interval, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::array<Interval, 3> to_intervals(const Vec3Q& v) {
    return {Interval::point(v[0]), Interval::point(v[1]), Interval::point(v[2])};
}

// certified sign with one budget escalation; the quantity is provably
// nonzero at valid inputs
int certified_nonzero_sign(const BiPoly& F, CertifiedBasePoint& p, const char* what) {
    for (int esc = 0; esc < 2; ++esc) {
        auto s = certified_sign(F, p, 96 << esc);
        if (s.has_value()) {
            if (*s == 0)
                throw InternalError("linking", std::string(what) + " vanished unexpectedly");
            return *s;
        }
    }
    throw InternalError("linking", std::string(what) + " could not be certified");
}

} // namespace

OrientedLine::OrientedLine(Vec3Q uu, Vec3Q vv) : u(std::move(uu)), v(std::move(vv)) {
    if (is_zero(u) || is_zero(v) || is_zero(cross(u, v)))
        throw InputError("linking", "line points are projectively dependent");
}

std::string OrientedLine::describe() const {
    std::ostringstream os;
    os << "(" << u[0].get_str() << ":" << u[1].get_str() << ":" << u[2].get_str() << ") -> ("
       << v[0].get_str() << ":" << v[1].get_str() << ":" << v[2].get_str() << ")";
    return os.str();
}

HalfPlaneCount halfplane_root_count(const BinaryForm& p) {
    if (p.is_zero()) throw IdenticallyZero("halfplane_root_count: zero form");
    int deg = p.degree;
    if (p.coeffs[static_cast<size_t>(deg)].is_zero())
        throw RootAtInfinity("leading coefficient vanishes; reparametrize the line first");

    UniPoly A = p.affine_real();
    UniPoly B = p.affine_imag();

    // real roots are forbidden
    UniPoly g = gcd(A, B);
    if (g.degree() >= 1) {
        UniPoly gs = squarefree_part(g);
        if (SturmChain::of(gs).count_roots_real_line() > 0)
            throw RealRoot("the form has a real root");
    }

    int w = 0;
    if (!B.is_zero()) w = SturmChain::pair(B, A).cauchy_index_real_line();

    // crossing at the infinity point of the affine chart, in the reversed chart
    UniPoly Ar = A.reversed(deg);
    UniPoly Br = B.reversed(deg);
    int jump = 0;
    if (!Br.is_zero() && sgn(Br.coeff(0)) == 0) {
        int mu = 0;
        while (sgn(Br.coeff(mu)) == 0) ++mu;
        int right = sgn(Br.coeff(mu)); // sign of Br just right of 0
        int left = (mu % 2 == 0) ? right : -right;
        int a0 = sgn(Ar.coeff(0));
        if (a0 == 0)
            throw InternalError("linking", "vanishing value at infinity despite the degree check");
        int l = a0 * left, r = a0 * right;
        if (l < 0 && r > 0) jump = +1;
        if (l > 0 && r < 0) jump = -1;
    }
    w -= jump;

    if ((deg + w) % 2 != 0)
        throw InternalError("linking", "half-plane parity mismatch");
    HalfPlaneCount out;
    out.degree = deg;
    out.upper = (deg + w) / 2;
    out.lower = deg - out.upper;
    if (out.upper < 0 || out.lower < 0)
        throw InternalError("linking", "negative half-plane count");
    return out;
}

HalfPlaneCount halfplane_root_count_reparametrized(const BinaryForm& p) {
    if (p.is_zero()) throw IdenticallyZero("halfplane_root_count: zero form");
    if (!p.coeffs[static_cast<size_t>(p.degree)].is_zero()) return halfplane_root_count(p);
    // move the infinity point to a non-root: (t0, t1) = (k t0' - t1', t0')
    for (long k = 0;; ++k) {
        GaussianRational at_k = p.evaluate(GaussianRational(rat(k)), GaussianRational(Rational(1)));
        if (at_k.is_zero()) continue;
        std::array<Rational, 4> m{rat(k), rat(-1), rat(1), rat(0)}; // determinant +1
        return halfplane_root_count(p.reparametrized(m));
    }
}

namespace {

struct RestrictedPair {
    bool r_zero = false;
    bool s_zero = false;
    BinaryForm r{0};
    BinaryForm s{0};
};

RestrictedPair restrict_pencil(const OrientedLine& line, const PencilSpec& pencil) {
    RestrictedPair out;
    try {
        out.r = restrict_to_line(pencil.R, line.u, line.v);
    } catch (const IdenticallyZero&) {
        out.r_zero = true;
    }
    try {
        out.s = restrict_to_line(pencil.S, line.u, line.v);
    } catch (const IdenticallyZero&) {
        out.s_zero = true;
    }
    return out;
}

} // namespace

void require_disjoint(const OrientedLine& line, const PencilSpec& pencil) {
    RestrictedPair rp = restrict_pencil(line, pencil);
    if (rp.r_zero && rp.s_zero)
        throw LineMeetsBase("the line lies inside the base (common factor)");
    if (rp.r_zero || rp.s_zero) {
        const BinaryForm& only = rp.r_zero ? rp.s : rp.r;
        UniPoly f = only.affine_real();
        // one form vanishes on the whole line: base points on the line are
        // the real roots of the other restriction
        if (only.coeffs[static_cast<size_t>(only.degree)].is_zero())
            throw LineMeetsBase("the line meets the base at its first spanning point");
        if (!f.is_zero() && f.degree() >= 1 &&
            SturmChain::of(squarefree_part(f)).count_roots_real_line() > 0)
            throw LineMeetsBase("the line meets the base");
        return;
    }
    // meet at the point u <=> both leading coefficients vanish
    if (rp.r.coeffs[static_cast<size_t>(rp.r.degree)].is_zero() &&
        rp.s.coeffs[static_cast<size_t>(rp.s.degree)].is_zero())
        throw LineMeetsBase("the line meets the base at its first spanning point");
    UniPoly fr = rp.r.affine_real();
    UniPoly fs = rp.s.affine_real();
    UniPoly g = gcd(fr, fs);
    if (g.degree() >= 1 &&
        SturmChain::of(squarefree_part(g)).count_roots_real_line() > 0)
        throw LineMeetsBase("the line meets the base");
}

int h_circle_v(const OrientedLine& line, const CoorientedBase& base) {
    require_disjoint(line, base.pencil);
    HomPoly P = complexify(base.pencil.R, base.pencil.S);
    BinaryForm restricted = restrict_to_line(P, line.u, line.v);
    return halfplane_root_count(restricted).upper;
}

std::vector<int> lk_chart_signs(const OrientedLine& line, const CoorientedBase& base) {
    require_disjoint(line, base.pencil);
    auto gr = gradient(base.pencil.R);
    auto gs = gradient(base.pencil.S);

    std::vector<int> signs;
    signs.reserve(base.points.size());
    for (const auto& framed : base.points) {
        CertifiedBasePoint pt = framed.point;
        ChartId chart = pt.chart;
        BiPoly ru, rv, su, sv;
        for (int k = 0; k < 3; ++k) {
            BiPoly dr = dehomogenize(gr[static_cast<size_t>(k)], chart);
            BiPoly ds = dehomogenize(gs[static_cast<size_t>(k)], chart);
            ru += line.u[static_cast<size_t>(k)] * dr;
            rv += line.v[static_cast<size_t>(k)] * dr;
            su += line.u[static_cast<size_t>(k)] * ds;
            sv += line.v[static_cast<size_t>(k)] * ds;
        }
        BiPoly frame_det = ru * sv - rv * su;
        signs.push_back(kChartCalibration *
                        certified_nonzero_sign(frame_det, pt, "chart frame determinant"));
    }
    return signs;
}

Rational lk_chart(const OrientedLine& line, const CoorientedBase& base) {
    long sum = 0;
    for (int s : lk_chart_signs(line, base)) sum += s;
    return rat(sum, 2);
}

namespace {

struct TransportResult {
    long sum = 0;
    int retries = 0;
};

TransportResult lk_boundary_impl(const OrientedLine& line, const CoorientedBase& base,
                                 uint64_t aux_seed) {
    require_disjoint(line, base.pencil);
    auto gr = gradient(base.pencil.R);
    auto gs = gradient(base.pencil.S);
    Vec3Q normal = cross(line.u, line.v);
    HomPoly phi = linear_form(normal); // vanishes exactly on the line

    // a 2x2 minor of [u v] used to express points of the line in the basis (u, v)
    int i1 = -1, i2 = -1;
    Rational minor;
    for (int a = 0; a < 3 && i1 < 0; ++a)
        for (int b = a + 1; b < 3 && i1 < 0; ++b) {
            Rational mu = line.u[static_cast<size_t>(a)] * line.v[static_cast<size_t>(b)] -
                          line.u[static_cast<size_t>(b)] * line.v[static_cast<size_t>(a)];
            if (sgn(mu) != 0) {
                i1 = a;
                i2 = b;
                minor = mu;
            }
        }

    TransportResult result;
    uint64_t state = aux_seed ^ 0x5bf03635ULL;

    for (size_t idx = 0; idx < base.points.size(); ++idx) {
        bool done = false;
        for (int attempt = 0; attempt < 48 && !done; ++attempt) {
            CertifiedBasePoint pt = base.points[idx].point;
            ChartId chart = pt.chart;
            std::array<BiPoly, 3> rep = chart_rep(chart);

            Vec3Q m{rat(lattice_coord(state, 7)), rat(lattice_coord(state, 7)),
                    rat(lattice_coord(state, 7))};
            if (is_zero(m)) {
                ++result.retries;
                continue;
            }
            Rational phi_m = normal[0] * m[0] + normal[1] * m[1] + normal[2] * m[2];
            if (sgn(phi_m) == 0) { // m on the line itself
                ++result.retries;
                continue;
            }
            if (pt.s.exact() && pt.t.exact()) {
                auto xq = chart_rep_at(chart, pt.s.loc.lo, pt.t.loc.lo);
                if (is_zero(cross(xq, m))) { // auxiliary line undefined
                    ++result.retries;
                    continue;
                }
            }

            // the auxiliary line must avoid the other base points
            bool degenerate = false;
            for (size_t jdx = 0; jdx < base.points.size() && !degenerate; ++jdx) {
                if (jdx == idx) continue;
                CertifiedBasePoint other = base.points[jdx].point;
                bool decided = false;
                for (int round = 0; round < 28 && !decided; ++round) {
                    Interval d = det3_interval(rep_box(pt), to_intervals(m), rep_box(other));
                    if (d.certain_sign() != 0) {
                        decided = true;
                        break;
                    }
                    refine_point_in_place(pt, pt.s.loc.width() / 4);
                    refine_point_in_place(other, other.s.loc.width() / 4);
                }
                if (!decided) degenerate = true;
            }
            if (degenerate) {
                ++result.retries;
                continue;
            }

            // sign of the crossing parameter sigma_c = -phi(x_q)/phi(m)
            BiPoly phi_chart = dehomogenize(phi, chart);
            int sign_phi_q = certified_nonzero_sign(phi_chart, pt, "line functional at the point");
            int sign_sigma = -sign_phi_q * sgn(phi_m);

            // seed sign: the point's coorientation on the frame
            // (outgoing direction m, positive normal x_q x m)
            std::array<BiPoly, 3> xm = cross_sym(rep, m);
            BiPoly rm, rxm, sm, sxm;
            for (int k = 0; k < 3; ++k) {
                BiPoly dr = dehomogenize(gr[static_cast<size_t>(k)], chart);
                BiPoly ds = dehomogenize(gs[static_cast<size_t>(k)], chart);
                rm += m[static_cast<size_t>(k)] * dr;
                sm += m[static_cast<size_t>(k)] * ds;
                rxm += dr * xm[static_cast<size_t>(k)];
                sxm += ds * xm[static_cast<size_t>(k)];
            }
            BiPoly seed_det = rm * sxm - rxm * sm;
            int eta = certified_nonzero_sign(seed_det, pt, "transport seed determinant");

            // crossing point w = x_q - (phi(x_q)/phi(m)) m, written as alpha u + beta v
            std::array<BiPoly, 3> w;
            for (int k = 0; k < 3; ++k)
                w[static_cast<size_t>(k)] =
                    rep[static_cast<size_t>(k)] - (m[static_cast<size_t>(k)] / phi_m) * phi_chart;
            BiPoly alpha = (1 / minor) * (w[static_cast<size_t>(i1)] * BiPoly::constant(line.v[static_cast<size_t>(i2)]) -
                                          w[static_cast<size_t>(i2)] * BiPoly::constant(line.v[static_cast<size_t>(i1)]));
            BiPoly beta = (1 / minor) * (BiPoly::constant(line.u[static_cast<size_t>(i1)]) * w[static_cast<size_t>(i2)] -
                                         BiPoly::constant(line.u[static_cast<size_t>(i2)]) * w[static_cast<size_t>(i1)]);
            BiPoly psi_v = dot_sym(rep, cross(m, line.v)); // det[x_q, m, v]
            BiPoly psi_u = dot_sym(rep, cross(m, line.u));

            // tangent of the oriented line at the crossing against the
            // transported normal: alpha psi(v), or -beta psi(u) off the
            // alpha-chart; at least one is nonzero
            BiPoly f3a = alpha * psi_v;
            BiPoly f3b = -(beta * psi_u);
            int f3 = 0;
            for (int esc = 0; esc < 3 && f3 == 0; ++esc) {
                auto sa = certified_sign(f3a, pt, 48 << esc);
                if (sa.has_value() && *sa != 0) {
                    f3 = *sa;
                    break;
                }
                auto sb = certified_sign(f3b, pt, 48 << esc);
                if (sb.has_value() && *sb != 0) {
                    f3 = *sb;
                    break;
                }
            }
            if (f3 == 0)
                throw InternalError("linking", "crossing sign could not be certified");

            result.sum += static_cast<long>(eta) * sign_sigma * f3;
            done = true;
        }
        if (!done) {
            std::ostringstream os;
            os << "no valid auxiliary line found for point " << base.points[idx].point.describe()
               << " (seed " << aux_seed << ")";
            throw DegenerateAuxiliary(os.str());
        }
    }
    return result;
}

} // namespace

Rational lk_boundary(const OrientedLine& line, const CoorientedBase& base, uint64_t aux_seed) {
    TransportResult tr = lk_boundary_impl(line, base, aux_seed);
    return Rational(kTransportCalibration) * rat(tr.sum, 2);
}

LinkingReport verify_theorem5(const OrientedLine& line, const CoorientedBase& base,
                              uint64_t aux_seed) {
    LinkingReport rep;
    rep.degree = base.pencil.degree;
    rep.aux_seed = aux_seed;
    rep.lk_chart = lk_chart(line, base);
    TransportResult tr = lk_boundary_impl(line, base, aux_seed);
    rep.aux_retries = tr.retries;
    rep.lk_boundary = Rational(kTransportCalibration) * rat(tr.sum, 2);
    if (rep.lk_chart != rep.lk_boundary)
        throw InternalError("linking", "the two cap-linking algorithms disagree");
    rep.h_dot_v = h_circle_v(line, base);
    rep.residual = rat(rep.degree, 2) - rep.h_dot_v - rep.lk_chart;

    // the exact inequalities that come with the identity
    if (rep.h_dot_v < 0 || rep.h_dot_v > rep.degree)
        throw InternalError("linking", "half-plane count out of range");
    Rational twice = 2 * rep.lk_chart;
    if (twice.get_den() != 1)
        throw InternalError("linking", "linking number is not a half integer");
    if (abs(rep.lk_chart) > rat(rep.degree, 2))
        throw InternalError("linking", "linking number exceeds the degree bound");
    return rep;
}

} // namespace caplink
