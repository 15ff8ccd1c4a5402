#ifndef CAPLINK_REPORT_HPP
#define CAPLINK_REPORT_HPP

#include "caplink/linking.hpp"
#include "caplink/slice.hpp"

#include <string>
#include <vector>

namespace caplink {

// Versioned line-oriented report: "key = value" entries under [sections].
// Rerunning a job with the same seed reproduces the document byte for byte
// except for "timing." keys.
struct ReportDocument {
    std::vector<std::string> lines;

    void section(const std::string& name);
    void kv(const std::string& key, const std::string& value);
    void kv(const std::string& key, long value);
    void kv(const std::string& key, const Rational& value);

    std::string serialize() const;
    std::string serialize_without_timings() const;
};

void describe_points(ReportDocument& doc, const std::vector<CertifiedBasePoint>& pts);
void describe_base(ReportDocument& doc, const CoorientedBase& base,
                   const std::vector<int>* eps_signs = nullptr);
void describe_linking(ReportDocument& doc, const LinkingReport& rep);

} // namespace caplink

#endif
