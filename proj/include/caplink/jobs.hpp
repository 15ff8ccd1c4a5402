#ifndef CAPLINK_JOBS_HPP
#define CAPLINK_JOBS_HPP

#include "caplink/report.hpp"
#include "caplink/svg.hpp"

#include <cstdint>
#include <string>

namespace caplink {

// One CLI invocation: a command plus its inputs. Values can come from a job
// file (key = value lines) with command-line flags taking precedence.
struct JobSpec {
    std::string command; // solve | certify | link | verify | plot | batch | selftest

    std::string pencil_r;
    std::string pencil_s;
    std::string line_u;
    std::string line_v;
    bool reverse_orientation = false;

    uint64_t seed = 1;
    int count = 50;
    int deg_lo = 1;
    int deg_hi = 4;

    std::string out_path; // report destination; empty writes to stdout
    std::string svg_path;
    PlotWindow window;
};

JobSpec parse_job_file(const std::string& path);
void apply_job_line(JobSpec& job, const std::string& key, const std::string& value);

ReportDocument run_job(const JobSpec& job);

// Full command-line entry point used by the binary; maps errors to exit
// codes 2 (input), 3 (non-generic domain), 4 (internal invariant).
int run_cli(int argc, const char* const* argv);

} // namespace caplink

#endif
