#include "caplink/solve.hpp"

#include "caplink/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>

namespace caplink {

TransversalityDefect transversality_defect(int dim_u, int dim_v, int dim_w, int dim_int) {
    if (dim_u < 0 || dim_v < 0 || dim_w < 0 || dim_int < 0 || dim_v > dim_u || dim_w > dim_u ||
        dim_int > dim_u)
        throw InconsistentDims("transversality_defect: dimensions out of range");
    if (dim_int > dim_v || dim_int > dim_w)
        throw InconsistentDims("transversality_defect: intersection exceeds a subspace");
    TransversalityDefect d;
    d.dim_u = dim_u;
    d.dim_v = dim_v;
    d.dim_w = dim_w;
    d.dim_intersection = dim_int;
    d.defect = dim_u - (dim_v + dim_w) + dim_int;
    return d;
}

TransversalityDefect real_pair_defect(int dim_rx, int dim_ry) {
    // ambient complex points (2 dim_rx), its real points, the complexified
    // subvariety (2 dim_ry), intersecting in the real subvariety
    return transversality_defect(2 * dim_rx, dim_rx, 2 * dim_ry, dim_ry);
}

std::string CertifiedBasePoint::describe() const {
    std::ostringstream os;
    os << "chart " << chart_name(chart) << ": s in [" << s.loc.lo.get_str() << ", "
       << s.loc.hi.get_str() << "], t in [" << t.loc.lo.get_str() << ", " << t.loc.hi.get_str()
       << "]";
    return os.str();
}

ChartSystem chart_system(const HomPoly& R, const HomPoly& S, ChartId chart) {
    return {dehomogenize(R, chart), dehomogenize(S, chart)};
}

void refine_point_in_place(CertifiedBasePoint& p, const Rational& width) {
    refine_root(p.s.defining, p.s.loc, width);
    refine_root(p.t.defining, p.t.loc, width);
}

CertifiedBasePoint refine_point(const CertifiedBasePoint& p, const Rational& width) {
    if (sgn(width) <= 0) throw InputError("solve", "refine_point: width must be positive");
    CertifiedBasePoint q = p;
    refine_point_in_place(q, width);
    return q;
}

std::optional<int> certified_sign(const BiPoly& F, CertifiedBasePoint& p, int max_steps) {
    if (p.s.exact() && p.t.exact()) return sgn(F.eval(p.s.loc.lo, p.t.loc.lo));
    for (int step = 0; step < max_steps; ++step) {
        Interval v = F.eval(p.box_s(), p.box_t());
        int cs = v.certain_sign();
        if (cs != 0) return cs;
        Rational ws = p.s.loc.width(), wt = p.t.loc.width();
        refine_root(p.s.defining, p.s.loc, ws / 4);
        refine_root(p.t.defining, p.t.loc, wt / 4);
    }
    Interval v = F.eval(p.box_s(), p.box_t());
    int cs = v.certain_sign();
    if (cs != 0) return cs;
    return std::nullopt;
}

namespace {

constexpr int kPairingRounds = 64;

struct Candidate {
    RootLoc loc;
    bool alive = true;
    bool accepted = false;
};

// points found over one eliminant root
struct FiberResult {
    std::vector<CertifiedBasePoint> points;
};

FiberResult pair_exact_fiber(const ChartSystem& sys, ChartId chart, const UniPoly& sf_s,
                             const RootLoc& alpha, int mult_alpha) {
    FiberResult out;
    UniPoly fa = sys.f.specialize_s(alpha.lo);
    UniPoly ga = sys.g.specialize_s(alpha.lo);
    UniPoly h = gcd(fa, ga);
    if (h.is_zero())
        throw InternalError("solve", "identically zero fiber despite coprime forms");
    if (h.degree() == 0) return out;
    IsolatedRoots iso = isolate_real_roots(h);
    int k = static_cast<int>(iso.roots.size());
    for (const auto& beta : iso.roots) {
        CertifiedBasePoint p;
        p.chart = chart;
        p.s = {sf_s, alpha};
        p.t = {iso.squarefree, beta};
        p.multiplicity = (k == mult_alpha) ? 1 : mult_alpha - k + 1;
        out.points.push_back(std::move(p));
    }
    return out;
}

FiberResult pair_interval_fiber(const ChartSystem& sys, ChartId chart, const UniPoly& sf_s,
                                RootLoc alpha, int mult_alpha, const UniPoly& sf_t,
                                const std::vector<RootLoc>& betas) {
    FiberResult out;
    std::vector<Candidate> cand;
    cand.reserve(betas.size());
    for (const auto& b : betas) cand.push_back({b, true, false});

    int accepted = 0;
    for (int round = 0; round < kPairingRounds; ++round) {
        int alive = 0;
        for (auto& c : cand) {
            if (!c.alive || c.accepted) continue;
            Interval box_s = alpha.interval(), box_t = c.loc.interval();
            if (sys.f.eval(box_s, box_t).certain_sign() != 0 ||
                sys.g.eval(box_s, box_t).certain_sign() != 0) {
                c.alive = false;
                continue;
            }
            ++alive;
        }
        if (alive == 0) break;
        if (mult_alpha == 1) {
            if (alive == 1) {
                for (auto& c : cand)
                    if (c.alive && !c.accepted) {
                        c.accepted = true;
                        ++accepted;
                    }
                break;
            }
        } else {
            for (auto& c : cand) {
                if (!c.alive || c.accepted) continue;
                bool ok = false;
                int w = winding_number(sys.f, sys.g, alpha.interval(), c.loc.interval(), ok);
                if (ok && w != 0) {
                    c.accepted = true;
                    ++accepted;
                }
            }
            if (accepted == mult_alpha) {
                // the fiber multiplicity is exhausted by simple points
                for (auto& c : cand)
                    if (!c.accepted) c.alive = false;
                break;
            }
            int undecided = 0;
            for (auto& c : cand)
                if (c.alive && !c.accepted) ++undecided;
            if (undecided == 0) break;
        }
        // refine the fiber abscissa and the undecided ordinates
        refine_root(sf_s, alpha, alpha.width() / 4);
        for (auto& c : cand)
            if (c.alive && !c.accepted) refine_root(sf_t, c.loc, c.loc.width() / 4);
    }

    int undecided = 0;
    for (auto& c : cand)
        if (c.alive && !c.accepted) ++undecided;
    if (undecided > 0) {
        std::ostringstream os;
        os << "cannot certify the pairing over s in [" << alpha.lo.get_str() << ", "
           << alpha.hi.get_str() << "] (chart " << chart_name(chart)
           << "); the instance looks tangential";
        throw SingularOrTangent(os.str(), os.str());
    }

    int npts = 0;
    for (const auto& c : cand)
        if (c.accepted) ++npts;
    for (const auto& c : cand) {
        if (!c.accepted) continue;
        CertifiedBasePoint p;
        p.chart = chart;
        p.s = {sf_s, alpha};
        p.t = {sf_t, c.loc};
        p.multiplicity = (npts == mult_alpha) ? 1 : mult_alpha - npts + 1;
        out.points.push_back(std::move(p));
    }
    return out;
}

std::vector<CertifiedBasePoint> solve_affine_chart(const ChartSystem& sys, ChartId chart) {
    std::vector<CertifiedBasePoint> pts;
    if (sys.f.is_constant() || sys.g.is_constant()) return pts; // nonzero constants: empty chart

    UniPoly elim_s = resultant_t(sys.f, sys.g); // roots: s-coordinates
    UniPoly elim_t = resultant_s(sys.f, sys.g); // roots: t-coordinates
    if (elim_s.is_zero() || elim_t.is_zero())
        throw Degenerate("zero resultant in chart elimination");
    if (elim_s.degree() == 0 || elim_t.degree() == 0) return pts;

    IsolatedRoots iso_s = isolate_real_roots(elim_s);
    IsolatedRoots iso_t = isolate_real_roots(elim_t);
    if (iso_s.roots.empty() || iso_t.roots.empty()) return pts;

    for (const auto& alpha : iso_s.roots) {
        int mult = root_multiplicity(elim_s, alpha);
        FiberResult fiber =
            alpha.exact()
                ? pair_exact_fiber(sys, chart, iso_s.squarefree, alpha, mult)
                : pair_interval_fiber(sys, chart, iso_s.squarefree, alpha, mult, iso_t.squarefree,
                                      iso_t.roots);
        for (auto& p : fiber.points) pts.push_back(std::move(p));
    }
    return pts;
}

UniPoly restrict_infinity_line(const HomPoly& H) {
    // H(x, 1, 0) as a polynomial in x
    UniPoly p;
    for (const auto& [m, v] : H.terms()) {
        if (m[2] != 0) continue;
        if (p.c.size() <= static_cast<size_t>(m[0])) p.c.resize(static_cast<size_t>(m[0]) + 1, Rational(0));
        p.c[static_cast<size_t>(m[0])] += v.re;
    }
    p.trim();
    return p;
}

UniPoly coordinate_poly() {
    // the identity polynomial t, defining an exact zero coordinate
    return UniPoly({Rational(0), Rational(1)});
}

} // namespace

std::vector<CertifiedBasePoint> real_base_points(const HomPoly& R, const HomPoly& S) {
    if (!R.is_real() || !S.is_real())
        throw InputError("solve", "real_base_points: forms must be real");
    if (R.degree() != S.degree())
        throw DegreeMismatch("real_base_points: degrees differ");
    if (R.is_zero() || S.is_zero())
        throw InputError("solve", "real_base_points: zero form");
    if (R.degree() < 1)
        throw InputError("solve", "real_base_points: degree must be at least 1");

    HomPoly common = hom_gcd(R, S);
    if (common.degree() >= 1)
        throw CommonFactor("the forms share the factor " + common.str(), common.str());

    std::vector<CertifiedBasePoint> pts;

    // chart z = 1 finds every point with nonzero last coordinate
    pts = solve_affine_chart(chart_system(R, S, ChartId::Z), ChartId::Z);

    // the line z = 0, points (alpha : 1 : 0), owned by chart y
    UniPoly rz = restrict_infinity_line(R);
    UniPoly sz = restrict_infinity_line(S);
    if (rz.is_zero() && sz.is_zero())
        throw InternalError("solve", "z divides both forms despite the gcd check");
    UniPoly h = gcd(rz, sz);
    if (h.degree() >= 1) {
        UniPoly h_full = rz.is_zero() ? sz : (sz.is_zero() ? rz : h);
        IsolatedRoots iso = isolate_real_roots(h_full);
        for (const auto& alpha : iso.roots) {
            CertifiedBasePoint p;
            p.chart = ChartId::Y;
            p.s = {iso.squarefree, alpha};
            p.t = {coordinate_poly(), RootLoc{Rational(0), Rational(0)}};
            p.multiplicity = root_multiplicity(h_full, alpha);
            pts.push_back(std::move(p));
        }
    }

    // the single remaining point (1 : 0 : 0), owned by chart x
    Mono lead{R.degree(), 0, 0};
    if (R.coeff(lead).is_zero() && S.coeff(lead).is_zero()) {
        CertifiedBasePoint p;
        p.chart = ChartId::X;
        p.s = {coordinate_poly(), RootLoc{Rational(0), Rational(0)}};
        p.t = {coordinate_poly(), RootLoc{Rational(0), Rational(0)}};
        p.multiplicity = 1;
        pts.push_back(std::move(p));
    }

    int bezout = R.degree() * S.degree();
    if (static_cast<int>(pts.size()) > bezout)
        throw InternalError("solve", "more certified points than the degree bound allows");
    return pts;
}

int jacobian_certificate(const HomPoly& R, const HomPoly& S, CertifiedBasePoint& p) {
    ChartSystem sys = chart_system(R, S, p.chart);
    BiPoly jac = sys.f.partial_s() * sys.g.partial_t() - sys.f.partial_t() * sys.g.partial_s();

    auto throw_singular = [&]() {
        throw SingularOrTangent("vanishing Jacobian at " + p.describe(), p.describe());
    };

    if (p.s.exact() && p.t.exact()) {
        int s = sgn(jac.eval(p.s.loc.lo, p.t.loc.lo));
        if (s == 0) throw_singular();
        p.multiplicity = 1;
        return s;
    }

    for (int escalation = 0; escalation < 3; ++escalation) {
        auto res = certified_sign(jac, p, 64 << escalation);
        if (res.has_value()) {
            if (*res == 0) throw_singular();
            p.multiplicity = 1;
            return *res;
        }
        // exact exclusion attempts
        if (p.s.exact()) {
            // the t-coordinate: does the Jacobian vanish there exactly?
            UniPoly jfib = jac.specialize_s(p.s.loc.lo);
            if (jfib.is_zero()) throw_singular();
            UniPoly common = gcd(p.t.defining, jfib);
            if (common.degree() >= 1) {
                UniPoly csf = squarefree_part(common);
                bool hit = csf.sign_at(p.t.loc.lo) == 0 || csf.sign_at(p.t.loc.hi) == 0 ||
                           SturmChain::of(csf).count_roots(p.t.loc.lo, p.t.loc.hi) > 0;
                if (hit) throw_singular();
            }
            continue; // certified nonzero, refine further
        }
        if (p.multiplicity == 1) continue; // provably simple, keep refining
        // necessary condition: the abscissa must be a shared root of the
        // Jacobian eliminants as well
        UniPoly u1 = resultant_t(sys.f, jac);
        UniPoly u2 = resultant_t(sys.g, jac);
        UniPoly shared = gcd(gcd(squarefree_part(u1), squarefree_part(u2)), p.s.defining);
        bool possible = shared.degree() >= 1 &&
                        SturmChain::of(shared).count_roots(p.s.loc.lo, p.s.loc.hi) > 0;
        if (!possible) continue; // cannot vanish, refinement will resolve
        throw_singular();
    }
    throw SingularOrTangent("cannot certify the Jacobian sign at " + p.describe(), p.describe());
}

std::vector<OracleCluster> brute_force_base_oracle(const HomPoly& R, const HomPoly& S,
                                                   int resolution) {
    if (resolution < 8) throw InputError("solve", "oracle resolution must be at least 8");
    std::vector<OracleCluster> out;
    const Rational lim = rat(9, 8);
    const Rational zone_in = rat(17, 16);
    const Rational zone_out = rat(16, 17);

    for (ChartId chart : {ChartId::Z, ChartId::Y, ChartId::X}) {
        ChartSystem sys = chart_system(R, S, chart);
        if (sys.f.is_constant() || sys.g.is_constant()) continue;

        Rational step = 2 * lim / resolution;
        auto cell_lo = [&](int i) { return -lim + Rational(i) * step; };

        std::vector<std::pair<int, int>> cells;
        std::vector<int> id(static_cast<size_t>(resolution) * static_cast<size_t>(resolution), -1);
        for (int i = 0; i < resolution; ++i) {
            for (int j = 0; j < resolution; ++j) {
                Rational cs = cell_lo(i) + step / 2;
                Rational ct = cell_lo(j) + step / 2;
                Rational as = abs(cs), at = abs(ct);
                bool inside = false;
                switch (chart) {
                    case ChartId::Z: inside = as <= zone_in && at <= zone_in; break;
                    case ChartId::Y: inside = as <= zone_in && at < zone_out; break;
                    case ChartId::X: inside = as < zone_out && at < zone_out; break;
                }
                if (!inside) continue;
                Interval bs{cell_lo(i), cell_lo(i + 1)};
                Interval bt{cell_lo(j), cell_lo(j + 1)};
                if (!sys.f.eval(bs, bt).contains_zero()) continue;
                if (!sys.g.eval(bs, bt).contains_zero()) continue;
                id[static_cast<size_t>(i) * static_cast<size_t>(resolution) + static_cast<size_t>(j)] =
                    static_cast<int>(cells.size());
                cells.emplace_back(i, j);
            }
        }

        // merge adjacent candidate cells into clusters (8-connectivity)
        std::vector<int> parent(cells.size());
        for (size_t k = 0; k < parent.size(); ++k) parent[k] = static_cast<int>(k);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
        auto cell_id = [&](int i, int j) -> int {
            if (i < 0 || j < 0 || i >= resolution || j >= resolution) return -1;
            return id[static_cast<size_t>(i) * static_cast<size_t>(resolution) + static_cast<size_t>(j)];
        };
        for (size_t k = 0; k < cells.size(); ++k) {
            auto [i, j] = cells[k];
            for (int di = -1; di <= 1; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    int other = cell_id(i + di, j + dj);
                    if (other >= 0) unite(static_cast<int>(k), other);
                }
        }
        std::map<int, OracleCluster> clusters;
        for (size_t k = 0; k < cells.size(); ++k) {
            auto [i, j] = cells[k];
            Interval bs{cell_lo(i), cell_lo(i + 1)};
            Interval bt{cell_lo(j), cell_lo(j + 1)};
            int root = find(static_cast<int>(k));
            auto it = clusters.find(root);
            if (it == clusters.end()) {
                clusters[root] = {chart, bs, bt};
            } else {
                it->second.s.lo = std::min(it->second.s.lo, bs.lo);
                it->second.s.hi = std::max(it->second.s.hi, bs.hi);
                it->second.t.lo = std::min(it->second.t.lo, bt.lo);
                it->second.t.hi = std::max(it->second.t.hi, bt.hi);
            }
        }
        for (auto& [root, cl] : clusters) out.push_back(cl);
    }
    return out;
}

} // namespace caplink
