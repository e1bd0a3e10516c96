#include "bvkit/io/report.hpp"

#include "bvkit/structures/catalog.hpp"

#include <json.hpp>

namespace bvkit {

using nlohmann::ordered_json;

Tally tally(const ReportDocument& doc) {
  Tally t;
  for (const auto& s : doc.sections) {
    for (const auto& r : s.reports) {
      switch (r.status) {
        case CheckReport::Status::pass:
          ++t.pass;
          break;
        case CheckReport::Status::fail:
          ++t.fail;
          break;
        case CheckReport::Status::skipped:
          ++t.skipped;
          break;
      }
    }
  }
  return t;
}

std::string render_json(const ReportDocument& doc) {
  ordered_json out;
  out["engine"] = kEngineVersion;
  out["command"] = doc.command;
  out["instance"] = doc.instance;
  out["field"] = doc.field;
  out["window"] = doc.window;
  ordered_json sections = ordered_json::array();
  for (const auto& s : doc.sections) {
    ordered_json reports = ordered_json::array();
    for (const auto& r : s.reports) {
      ordered_json j;
      j["relation"] = r.relation;
      j["instance"] = r.instance;
      j["window"] = r.window;
      j["status"] = to_string(r.status);
      j["tuples"] = r.tuples;
      j["failing_tuples"] = r.failing_tuples;
      if (auto id = relation_from_name(r.relation)) j["statement"] = builtin_relation(*id).texts();
      ordered_json witnesses = ordered_json::array();
      for (const auto& w : r.witnesses) {
        witnesses.push_back({{"input", key_to_string(w.input)},
                             {"equation", w.equation + 1},
                             {"residual", w.residual.to_string()}});
      }
      j["witnesses"] = witnesses;
      if (!r.note.empty()) j["note"] = r.note;
      reports.push_back(std::move(j));
    }
    sections.push_back({{"title", s.title}, {"reports", reports}});
  }
  out["sections"] = sections;
  if (!doc.notes.empty()) out["notes"] = doc.notes;
  const Tally t = tally(doc);
  out["summary"] = {{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}};
  return out.dump(2) + "\n";
}

std::string render_text(const ReportDocument& doc) {
  std::string out = std::string(kEngineVersion) + "  " + doc.command + "  " + doc.instance + "  field " + doc.field +
                    "  window " + doc.window + "\n";
  for (const auto& s : doc.sections) {
    out += "\n== " + s.title + "\n";
    for (const auto& r : s.reports) {
      std::string line = "  [" + std::string(to_string(r.status)) + "] " + r.relation + " (" +
                         std::to_string(r.tuples) + " tuples)";
      if (!r.witnesses.empty()) {
        const auto& w = r.witnesses.front();
        line += "  first witness " + key_to_string(w.input);
        if (w.equation > 0) line += " (equation " + std::to_string(w.equation + 1) + ")";
        line += " -> " + w.residual.to_string() + "  [" + std::to_string(r.failing_tuples) + " failing]";
      }
      if (!r.note.empty()) line += "  (" + r.note + ")";
      out += line + "\n";
    }
  }
  for (const auto& n : doc.notes) out += "\nnote: " + n + "\n";
  const Tally t = tally(doc);
  out += "\n" + std::to_string(t.pass) + " passed, " + std::to_string(t.fail) + " failed, " +
         std::to_string(t.skipped) + " skipped\n";
  return out;
}

}  // namespace bvkit
