#include "caplink/report.hpp"

#include <sstream>

namespace caplink {

namespace {
constexpr const char* kVersionLine = "caplink-report/1";

std::string loc_str(const RootLoc& loc) {
    if (loc.exact()) return loc.lo.get_str();
    return "[" + loc.lo.get_str() + ", " + loc.hi.get_str() + "]";
}

// display copies are narrowed so the printed boxes do not depend on how much
// refinement earlier computations happened to perform
CertifiedBasePoint display_copy(const CertifiedBasePoint& p) {
    return refine_point(p, rat(1, 1000000000000L));
}
} // namespace

void ReportDocument::section(const std::string& name) { lines.push_back("[" + name + "]"); }

void ReportDocument::kv(const std::string& key, const std::string& value) {
    lines.push_back(key + " = " + value);
}

void ReportDocument::kv(const std::string& key, long value) {
    kv(key, std::to_string(value));
}

void ReportDocument::kv(const std::string& key, const Rational& value) {
    kv(key, value.get_str());
}

std::string ReportDocument::serialize() const {
    std::ostringstream os;
    os << kVersionLine << "\n";
    for (const auto& l : lines) os << l << "\n";
    return os.str();
}

std::string ReportDocument::serialize_without_timings() const {
    std::ostringstream os;
    os << kVersionLine << "\n";
    for (const auto& l : lines)
        if (l.rfind("timing.", 0) != 0) os << l << "\n";
    return os.str();
}

void describe_points(ReportDocument& doc, const std::vector<CertifiedBasePoint>& pts) {
    doc.section("points");
    doc.kv("points.count", static_cast<long>(pts.size()));
    for (size_t i = 0; i < pts.size(); ++i) {
        CertifiedBasePoint p = display_copy(pts[i]);
        std::string prefix = "point." + std::to_string(i + 1);
        doc.kv(prefix + ".chart", chart_name(p.chart));
        doc.kv(prefix + ".s", loc_str(p.s.loc));
        doc.kv(prefix + ".t", loc_str(p.t.loc));
        doc.kv(prefix + ".multiplicity", static_cast<long>(p.multiplicity));
    }
}

void describe_base(ReportDocument& doc, const CoorientedBase& base,
                   const std::vector<int>* eps_signs) {
    doc.section("points");
    doc.kv("points.count", static_cast<long>(base.points.size()));
    for (size_t i = 0; i < base.points.size(); ++i) {
        const auto& fr = base.points[i];
        CertifiedBasePoint p = display_copy(fr.point);
        std::string prefix = "point." + std::to_string(i + 1);
        doc.kv(prefix + ".chart", chart_name(p.chart));
        doc.kv(prefix + ".s", loc_str(p.s.loc));
        doc.kv(prefix + ".t", loc_str(p.t.loc));
        doc.kv(prefix + ".multiplicity", static_cast<long>(p.multiplicity));
        doc.kv(prefix + ".det_sign", fr.det_sign > 0 ? "+1" : "-1");
        if (eps_signs && i < eps_signs->size())
            doc.kv(prefix + ".eps", (*eps_signs)[i] > 0 ? "+1" : "-1");
    }
}

void describe_linking(ReportDocument& doc, const LinkingReport& rep) {
    doc.section("linking");
    doc.kv("lk.chart", rep.lk_chart);
    doc.kv("lk.boundary", rep.lk_boundary);
    doc.kv("h_dot_v", static_cast<long>(rep.h_dot_v));
    doc.kv("degree", static_cast<long>(rep.degree));
    doc.kv("residual", rep.residual);
    doc.kv("corollary_bound_ok", abs(rep.lk_chart) <= rat(rep.degree, 2) ? "1" : "0");
    doc.kv("aux.seed", static_cast<long>(rep.aux_seed));
    doc.kv("aux.retries", static_cast<long>(rep.aux_retries));
}

} // namespace caplink
