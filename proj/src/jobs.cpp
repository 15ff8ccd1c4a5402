#include "caplink/jobs.hpp"

#include "caplink/errors.hpp"
#include "caplink/randgen.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

namespace caplink {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Vec3Q parse_point(const std::string& text) {
    std::string norm = text;
    for (auto& c : norm)
        if (c == ',' || c == ':') c = ' ';
    std::istringstream is(norm);
    std::string a, b, c;
    if (!(is >> a >> b >> c)) throw InputError("cli", "expected three rationals in \"" + text + "\"");
    std::string rest;
    if (is >> rest) throw InputError("cli", "too many coordinates in \"" + text + "\"");
    try {
        return {rat_from_string(a), rat_from_string(b), rat_from_string(c)};
    } catch (const std::exception&) {
        throw InputError("cli", "bad rational in \"" + text + "\"");
    }
}

OrientedLine line_from_job(const JobSpec& job) {
    if (job.line_u.empty() || job.line_v.empty())
        throw InputError("cli", "this command needs a line (--line or line.u/line.v)");
    Vec3Q u = parse_point(job.line_u);
    Vec3Q v = parse_point(job.line_v);
    if (job.reverse_orientation) std::swap(u, v);
    return OrientedLine(u, v);
}

std::pair<HomPoly, HomPoly> pencil_from_job(const JobSpec& job) {
    if (job.pencil_r.empty() || job.pencil_s.empty())
        throw InputError("cli", "this command needs a pencil (--pencil or pencil.R/pencil.S)");
    HomPoly R = parse_poly(job.pencil_r, true);
    HomPoly S = parse_poly(job.pencil_s, true);
    return {std::move(R), std::move(S)};
}

void echo_inputs(ReportDocument& doc, const JobSpec& job) {
    doc.section("inputs");
    doc.kv("command", job.command);
    if (!job.pencil_r.empty()) {
        doc.kv("pencil.R", parse_poly(job.pencil_r).str());
        doc.kv("pencil.S", parse_poly(job.pencil_s).str());
    }
    if (!job.line_u.empty()) {
        doc.kv("line.u", job.line_u);
        doc.kv("line.v", job.line_v);
        doc.kv("line.orient", job.reverse_orientation ? "-" : "+");
    }
}

struct BatchRow {
    bool ok = false;
    int degree = 0;
    size_t points = 0;
    int attempts = 0;
    std::string lk;
    std::string residual;
    std::string error;
};

BatchRow run_batch_instance(uint64_t seed, int deg_lo, int deg_hi) {
    BatchRow row;
    try {
        GeneratedInstance inst = gen_random(seed, deg_lo, deg_hi);
        LinkingReport rep = verify_theorem5(inst.line, inst.base, seed);
        row.ok = sgn(rep.residual) == 0;
        row.degree = inst.base.pencil.degree;
        row.points = inst.base.points.size();
        row.attempts = inst.attempts;
        row.lk = rep.lk_chart.get_str();
        row.residual = rep.residual.get_str();
    } catch (const Error& e) {
        row.error = e.what();
    }
    return row;
}

long elapsed_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

} // namespace

JobSpec parse_job_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cli", "cannot open job file " + path);
    JobSpec job;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw InputError("cli", path + ":" + std::to_string(lineno) + ": expected key = value");
        apply_job_line(job, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return job;
}

void apply_job_line(JobSpec& job, const std::string& key, const std::string& value) {
    if (key == "command") job.command = value;
    else if (key == "pencil.R") job.pencil_r = value;
    else if (key == "pencil.S") job.pencil_s = value;
    else if (key == "line.u") job.line_u = value;
    else if (key == "line.v") job.line_v = value;
    else if (key == "line.orient") job.reverse_orientation = (value == "-");
    else if (key == "seed") job.seed = std::stoull(value);
    else if (key == "count") job.count = std::stoi(value);
    else if (key == "degrees") {
        size_t colon = value.find(':');
        if (colon == std::string::npos) {
            job.deg_lo = job.deg_hi = std::stoi(value);
        } else {
            job.deg_lo = std::stoi(value.substr(0, colon));
            job.deg_hi = std::stoi(value.substr(colon + 1));
        }
    } else if (key == "out") job.out_path = value;
    else if (key == "svg") job.svg_path = value;
    else if (key == "window") {
        std::string norm = value;
        for (auto& c : norm)
            if (c == ',') c = ' ';
        std::istringstream is(norm);
        if (!(is >> job.window.x0 >> job.window.x1 >> job.window.y0 >> job.window.y1))
            throw InputError("cli", "window needs four numbers: x0 x1 y0 y1");
    } else {
        throw InputError("cli", "unknown job key \"" + key + "\"");
    }
}

ReportDocument run_job(const JobSpec& job) {
    auto start = std::chrono::steady_clock::now();
    ReportDocument doc;
    echo_inputs(doc, job);

    if (job.command == "solve") {
        auto [R, S] = pencil_from_job(job);
        std::vector<CertifiedBasePoint> pts = real_base_points(R, S);
        doc.kv("degree", static_cast<long>(R.degree()));
        describe_points(doc, pts);
    } else if (job.command == "certify") {
        auto [R, S] = pencil_from_job(job);
        CoorientedBase base = certify_slice(R, S);
        doc.kv("degree", static_cast<long>(base.pencil.degree));
        describe_base(doc, base);
    } else if (job.command == "link") {
        auto [R, S] = pencil_from_job(job);
        CoorientedBase base = certify_slice(R, S);
        OrientedLine line = line_from_job(job);
        std::vector<int> eps = lk_chart_signs(line, base);
        describe_base(doc, base, &eps);
        LinkingReport rep = verify_theorem5(line, base, job.seed);
        describe_linking(doc, rep);
    } else if (job.command == "verify") {
        auto [R, S] = pencil_from_job(job);
        CoorientedBase base = certify_slice(R, S);
        OrientedLine line = line_from_job(job);
        std::vector<int> eps = lk_chart_signs(line, base);
        describe_base(doc, base, &eps);
        LinkingReport rep = verify_theorem5(line, base, job.seed);
        describe_linking(doc, rep);
        doc.kv("theorem5.exact", sgn(rep.residual) == 0 ? "1" : "0");
    } else if (job.command == "plot") {
        auto [R, S] = pencil_from_job(job);
        CoorientedBase base = certify_slice(R, S);
        std::string svg;
        if (!job.line_u.empty()) {
            OrientedLine line = line_from_job(job);
            LinkingReport rep = verify_theorem5(line, base, job.seed);
            describe_linking(doc, rep);
            svg = emit_svg(base, &line, &rep, job.window);
        } else {
            svg = emit_svg(base, nullptr, nullptr, job.window);
        }
        std::string path = job.svg_path.empty() ? "plot.svg" : job.svg_path;
        std::ofstream out(path);
        if (!out) throw InputError("cli", "cannot write " + path);
        out << svg;
        doc.section("plot");
        doc.kv("plot.svg", path);
        doc.kv("plot.bytes", static_cast<long>(svg.size()));
    } else if (job.command == "batch") {
        if (job.count < 1) throw InputError("cli", "batch count must be positive");
        doc.section("batch");
        doc.kv("batch.count", static_cast<long>(job.count));
        doc.kv("batch.seed", static_cast<long>(job.seed));
        doc.kv("batch.degrees", std::to_string(job.deg_lo) + ":" + std::to_string(job.deg_hi));

        std::vector<BatchRow> rows(static_cast<size_t>(job.count));
        unsigned workers = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
        std::vector<std::future<void>> futs;
        for (unsigned w = 0; w < workers; ++w) {
            futs.push_back(std::async(std::launch::async, [&, w]() {
                for (int i = static_cast<int>(w); i < job.count; i += static_cast<int>(workers))
                    rows[static_cast<size_t>(i)] =
                        run_batch_instance(job.seed + static_cast<uint64_t>(i), job.deg_lo, job.deg_hi);
            }));
        }
        for (auto& f : futs) f.get();

        int fails = 0;
        for (int i = 0; i < job.count; ++i) {
            const BatchRow& row = rows[static_cast<size_t>(i)];
            std::string prefix = "instance." + std::to_string(i + 1);
            if (!row.error.empty()) {
                doc.kv(prefix + ".error", row.error);
                ++fails;
                continue;
            }
            std::ostringstream line;
            line << "degree=" << row.degree << " points=" << row.points << " lk=" << row.lk
                 << " residual=" << row.residual << " attempts=" << row.attempts;
            doc.kv(prefix, line.str());
            if (!row.ok) ++fails;
        }
        doc.kv("batch.failures", static_cast<long>(fails));
        if (fails > 0)
            throw InternalError("cli", "batch found a nonzero residual or a failing instance");
    } else if (job.command == "selftest") {
        doc.section("selftest");
        // the calibration instance and the two worked examples
        {
            CoorientedBase base = certify_slice(parse_poly("x"), parse_poly("y"));
            OrientedLine line({rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)});
            LinkingReport rep = verify_theorem5(line, base, 1);
            bool ok = rep.lk_chart == rat(1, 2) && rep.h_dot_v == 0 && sgn(rep.residual) == 0;
            doc.kv("selftest.calibration", ok ? "pass" : "fail");
            if (!ok) throw InternalError("cli", "calibration selftest failed");
        }
        {
            CoorientedBase base =
                certify_slice(parse_poly("x^2+y^2-z^2"), parse_poly("x*y"));
            OrientedLine line({rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)});
            LinkingReport rep = verify_theorem5(line, base, 1);
            bool ok = base.points.size() == 4 && sgn(rep.lk_chart) == 0 && rep.h_dot_v == 1 &&
                      sgn(rep.residual) == 0;
            doc.kv("selftest.conic_pencil", ok ? "pass" : "fail");
            if (!ok) throw InternalError("cli", "conic selftest failed");
        }
        for (uint64_t s = 1; s <= 4; ++s) {
            GeneratedInstance inst = gen_random(900 + s, 1, 3);
            LinkingReport rep = verify_theorem5(inst.line, inst.base, s);
            bool ok = sgn(rep.residual) == 0;
            doc.kv("selftest.random." + std::to_string(s), ok ? "pass" : "fail");
            if (!ok) throw InternalError("cli", "random selftest failed");
        }
        doc.kv("selftest.ok", "1");
    } else {
        throw InputError("cli", "unknown command \"" + job.command + "\"");
    }

    doc.section("timing");
    doc.kv("timing.total_ms", elapsed_ms(start));
    return doc;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"certified pencil bases, coorientations and cap-linking on the projective plane"};
    app.require_subcommand(1);

    JobSpec job;
    std::string job_file, pencil_text, line_text, orient_text = "+", degrees_text, window_text;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--job", job_file, "job file with key = value lines");
        cmd->add_option("--pencil", pencil_text, "pencil as \"R ; S\" in x, y, z");
        cmd->add_option("--line", line_text, "line as \"u0 u1 u2 ; v0 v1 v2\"");
        cmd->add_option("--orient", orient_text, "line orientation + or -");
        cmd->add_option("--seed", job.seed, "deterministic seed");
        cmd->add_option("--count", job.count, "batch instance count");
        cmd->add_option("--degrees", degrees_text, "degree range lo:hi");
        cmd->add_option("--out", job.out_path, "report output path (default stdout)");
        cmd->add_option("--svg", job.svg_path, "svg output path");
        cmd->add_option("--window", window_text, "plot window x0,x1,y0,y1");
    };
    for (const char* name : {"solve", "certify", "link", "verify", "plot", "batch", "selftest"})
        add_common(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!job_file.empty()) {
            JobSpec from_file = parse_job_file(job_file);
            from_file.seed = job.seed != 1 ? job.seed : from_file.seed;
            std::swap(job, from_file);
        }
        job.command = app.get_subcommands().front()->get_name();
        if (!pencil_text.empty()) {
            size_t semi = pencil_text.find(';');
            if (semi == std::string::npos)
                throw InputError("cli", "--pencil needs \"R ; S\"");
            job.pencil_r = trim(pencil_text.substr(0, semi));
            job.pencil_s = trim(pencil_text.substr(semi + 1));
        }
        if (!line_text.empty()) {
            size_t semi = line_text.find(';');
            if (semi == std::string::npos)
                throw InputError("cli", "--line needs \"u0 u1 u2 ; v0 v1 v2\"");
            job.line_u = trim(line_text.substr(0, semi));
            job.line_v = trim(line_text.substr(semi + 1));
        }
        if (orient_text == "-") job.reverse_orientation = true;
        else if (orient_text != "+") throw InputError("cli", "--orient must be + or -");
        if (!degrees_text.empty()) apply_job_line(job, "degrees", degrees_text);
        if (!window_text.empty()) apply_job_line(job, "window", window_text);

        ReportDocument doc = run_job(job);
        if (job.out_path.empty()) {
            std::cout << doc.serialize();
        } else {
            std::ofstream out(job.out_path);
            if (!out) throw InputError("cli", "cannot write " + job.out_path);
            out << doc.serialize();
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error.module = " << e.module() << "\n";
        std::cerr << "error.what = " << e.what() << "\n";
        return static_cast<int>(e.error_class());
    } catch (const std::exception& e) {
        std::cerr << "error.module = internal\n";
        std::cerr << "error.what = " << e.what() << "\n";
        return 4;
    }
}

} // namespace caplink
