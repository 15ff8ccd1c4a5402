#include "caplink/svg.hpp"

#include "caplink/bipoly.hpp"
#include "caplink/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace caplink {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

struct Mapper {
    const PlotWindow& w;
    double px(double x) const { return (x - w.x0) / (w.x1 - w.x0) * w.size_px; }
    double py(double y) const { return (w.y1 - y) / (w.y1 - w.y0) * w.size_px; }
};

double eval_double(const BiPoly& p, double s, double t) {
    double acc = 0.0;
    for (const auto& [m, v] : p.terms)
        acc += v.get_d() * std::pow(s, m.first) * std::pow(t, m.second);
    return acc;
}

// marching squares: emit one or two segments per cell from the sign pattern
void contour_segments(const BiPoly& f, const PlotWindow& w, const Mapper& map,
                      std::ostringstream& os, const char* color) {
    int n = w.grid;
    std::vector<std::vector<double>> val(static_cast<size_t>(n) + 1,
                                         std::vector<double>(static_cast<size_t>(n) + 1));
    double dx = (w.x1 - w.x0) / n, dy = (w.y1 - w.y0) / n;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            val[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                eval_double(f, w.x0 + i * dx, w.y0 + j * dy);

    os << "<path fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" d=\"";
    auto interp = [](double a, double b) { return a / (a - b); };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v00 = val[static_cast<size_t>(i)][static_cast<size_t>(j)];
            double v10 = val[static_cast<size_t>(i) + 1][static_cast<size_t>(j)];
            double v01 = val[static_cast<size_t>(i)][static_cast<size_t>(j) + 1];
            double v11 = val[static_cast<size_t>(i) + 1][static_cast<size_t>(j) + 1];
            double x0 = w.x0 + i * dx, y0c = w.y0 + j * dy;
            // crossing points on the four edges
            std::vector<std::pair<double, double>> pts;
            if ((v00 < 0) != (v10 < 0)) pts.push_back({x0 + dx * interp(v00, v10), y0c});
            if ((v10 < 0) != (v11 < 0)) pts.push_back({x0 + dx, y0c + dy * interp(v10, v11)});
            if ((v01 < 0) != (v11 < 0)) pts.push_back({x0 + dx * interp(v01, v11), y0c + dy});
            if ((v00 < 0) != (v01 < 0)) pts.push_back({x0, y0c + dy * interp(v00, v01)});
            if (pts.size() >= 2) {
                for (size_t k = 0; k + 1 < pts.size(); k += 2) {
                    os << "M" << num(map.px(pts[k].first)) << " " << num(map.py(pts[k].second))
                       << "L" << num(map.px(pts[k + 1].first)) << " "
                       << num(map.py(pts[k + 1].second));
                }
            }
        }
    }
    os << "\"/>\n";
}

// small circular arrow showing a rotation sense
void rotation_arrow(std::ostringstream& os, double cx, double cy, int sign) {
    const double r = 9.0;
    int sweep = sign > 0 ? 0 : 1; // svg y-axis points down: sweep 0 is counterclockwise in math coords
    os << "<path fill=\"none\" stroke=\"" << (sign > 0 ? "#2a7e2a" : "#8431a8")
       << "\" stroke-width=\"1.4\" marker-end=\"url(#arrow)\" d=\"M" << num(cx + r) << " "
       << num(cy) << " A" << num(r) << " " << num(r) << " 0 1 " << sweep << " " << num(cx) << " "
       << num(cy - (sign > 0 ? r : -r)) << "\"/>\n";
}

} // namespace

std::string emit_svg(const CoorientedBase& base, const OrientedLine* line,
                     const LinkingReport* linking, const PlotWindow& window) {
    if (!(window.x0 < window.x1) || !(window.y0 < window.y1) || window.grid < 8)
        throw EmptyWindow("plot window is empty or degenerate");

    Mapper map{window};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << window.size_px << "\" height=\""
       << window.size_px << "\" viewBox=\"0 0 " << window.size_px << " " << window.size_px
       << "\">\n";
    os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" "
          "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
          "<path d=\"M0 0L10 5L0 10z\"/></marker></defs>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    BiPoly fr = dehomogenize(base.pencil.R, ChartId::Z);
    BiPoly fs = dehomogenize(base.pencil.S, ChartId::Z);
    contour_segments(fr, window, map, os, "#1f77b4");
    contour_segments(fs, window, map, os, "#d62728");

    // the oriented line in the chart (nothing to draw when it is z = 0)
    bool line_at_infinity = false;
    if (line) {
        Vec3Q n = cross(line->u, line->v);
        double n0 = n[0].get_d(), n1 = n[1].get_d(), n2 = n[2].get_d();
        if (std::abs(n0) < 1e-12 && std::abs(n1) < 1e-12) {
            line_at_infinity = true;
        } else {
            // clip n0 x + n1 y + n2 = 0 against the window rectangle
            std::vector<std::pair<double, double>> hits;
            auto push = [&](double x, double y) {
                if (x >= window.x0 - 1e-9 && x <= window.x1 + 1e-9 && y >= window.y0 - 1e-9 &&
                    y <= window.y1 + 1e-9)
                    hits.push_back({x, y});
            };
            if (std::abs(n1) > 1e-12) {
                push(window.x0, (-n2 - n0 * window.x0) / n1);
                push(window.x1, (-n2 - n0 * window.x1) / n1);
            }
            if (std::abs(n0) > 1e-12) {
                push((-n2 - n1 * window.y0) / n0, window.y0);
                push((-n2 - n1 * window.y1) / n0, window.y1);
            }
            if (hits.size() >= 2) {
                auto [xa, ya] = hits[0];
                auto [xb, yb] = hits[1];
                // orient the segment by increasing t: at the chart point
                // c(t) = ((u0 + t v0)/Z, (u1 + t v1)/Z) with Z = u2 + t v2,
                // the velocity is ((v0 Z - W0 v2)/Z^2, (v1 Z - W1 v2)/Z^2)
                double ux = line->u[0].get_d(), uy = line->u[1].get_d(), uz = line->u[2].get_d();
                double vx = line->v[0].get_d(), vy = line->v[1].get_d(), vz = line->v[2].get_d();
                double mx = 0.5 * (xa + xb), my = 0.5 * (ya + yb);
                double t;
                if (std::abs(mx * vz - vx) > std::abs(my * vz - vy))
                    t = (ux - mx * uz) / (mx * vz - vx);
                else
                    t = (uy - my * uz) / (my * vz - vy);
                double Z = uz + t * vz;
                double W0 = ux + t * vx, W1 = uy + t * vy;
                double dxdt = (vx * Z - W0 * vz) / (Z * Z);
                double dydt = (vy * Z - W1 * vz) / (Z * Z);
                if ((xb - xa) * dxdt + (yb - ya) * dydt < 0) {
                    std::swap(xa, xb);
                    std::swap(ya, yb);
                }
                os << "<line x1=\"" << num(map.px(xa)) << "\" y1=\"" << num(map.py(ya))
                   << "\" x2=\"" << num(map.px(xb)) << "\" y2=\"" << num(map.py(yb))
                   << "\" stroke=\"black\" stroke-width=\"1.6\" marker-end=\"url(#arrow)\"/>\n";
            }
        }
    }

    // base points: draw the ones visible in the chart
    int hidden = 0, shown_in_window = 0;
    for (size_t i = 0; i < base.points.size(); ++i) {
        const auto& fr_pt = base.points[i];
        CertifiedBasePoint p = refine_point(fr_pt.point, rat(1, 1 << 20));
        if (p.chart != ChartId::Z) {
            ++hidden; // on the line z = 0, invisible in this chart
            continue;
        }
        double x = p.s.loc.mid().get_d(), y = p.t.loc.mid().get_d();
        if (x < window.x0 || x > window.x1 || y < window.y0 || y > window.y1) continue;
        ++shown_in_window;
        double cx = map.px(x), cy = map.py(y);
        os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy)
           << "\" r=\"3\" fill=\"black\"/>\n";
        rotation_arrow(os, cx, cy, fr_pt.det_sign);
    }

    // legend
    double ly = 16;
    auto text = [&](const std::string& s) {
        os << "<text x=\"8\" y=\"" << num(ly) << "\" font-family=\"monospace\" font-size=\"12\">"
           << s << "</text>\n";
        ly += 15;
    };
    text("degree " + std::to_string(base.pencil.degree) + ", " +
         std::to_string(base.points.size()) + " base point(s)");
    if (line_at_infinity) text("line at infinity of this chart");
    if (hidden > 0) text(std::to_string(hidden) + " point(s) on z = 0, outside this chart");
    if (shown_in_window == 0 && base.points.size() > static_cast<size_t>(hidden))
        text("warning: no base point inside the window");
    if (linking) {
        text("lk = " + linking->lk_chart.get_str() + ", H o V = " +
             std::to_string(linking->h_dot_v));
        text("residual = " + linking->residual.get_str());
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace caplink
