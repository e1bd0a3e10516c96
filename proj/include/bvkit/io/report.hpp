#pragma once

#include "bvkit/opexpr/relation.hpp"

#include <string>
#include <vector>

namespace bvkit {

inline constexpr const char* kEngineVersion = "bvkit 1.0.0";

/// A titled group of reports, e.g. "suite bvui" or "lie bialgebra".
struct ReportSection {
  std::string title;
  std::vector<CheckReport> reports;
};

struct ReportDocument {
  std::string command;
  std::string instance;
  std::string field;
  std::string window;
  std::vector<ReportSection> sections;
  std::vector<std::string> notes;
};

/// Machine-readable rendering; byte-identical for identical documents.
std::string render_json(const ReportDocument& doc);
/// Human-readable rendering, one line per relation plus a summary.
std::string render_text(const ReportDocument& doc);

struct Tally {
  std::size_t pass = 0, fail = 0, skipped = 0;
};
Tally tally(const ReportDocument& doc);

}  // namespace bvkit
