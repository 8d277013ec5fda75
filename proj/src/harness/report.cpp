#include "liftkit/harness/report.hpp"

#include <sstream>

namespace liftkit::harness {

std::string_view to_string(LawStatus s) {
  switch (s) {
    case LawStatus::Pass: return "pass";
    case LawStatus::Fail: return "fail";
    case LawStatus::Experimental: return "experimental";
  }
  return "?";
}

bool Report::passed() const {
  for (const auto& l : laws)
    if (l.status == LawStatus::Fail) return false;
  return true;
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["bound"] = report.bound;
  j["laws"] = nlohmann::ordered_json::array();
  for (const auto& l : report.laws) {
    nlohmann::ordered_json law;
    law["id"] = l.id;
    law["citation"] = l.citation;
    law["status"] = to_string(l.status);
    law["checked"] = l.checked;
    if (l.counterexample) {
      law["counterexample"] = {{"left", l.counterexample->left}, {"right", l.counterexample->right}};
    } else {
      law["counterexample"] = nullptr;
    }
    law["description"] = l.description;
    law["notes"] = l.notes;
    j["laws"].push_back(std::move(law));
  }
  j["engine"] = {{"name", "liftkit"},
                 {"version", LIFTKIT_VERSION},
                 {"inner_bound", report.inner_bound ? nlohmann::ordered_json(*report.inner_bound) : nullptr},
                 {"extended", report.extended}};
  return j;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "suite " << report.suite << ", bound " << report.bound;
  if (report.inner_bound) out << ", inner bound " << *report.inner_bound;
  out << "\n";
  std::size_t pass = 0, fail = 0, exp = 0;
  for (const auto& l : report.laws) {
    out << "[" << to_string(l.status) << "] " << l.id << "  (" << l.checked << " checked)\n";
    out << "    " << l.citation << "\n";
    if (l.counterexample)
      out << "    counterexample: " << l.counterexample->left << "  vs  " << l.counterexample->right << "\n";
    for (const auto& n : l.notes) out << "    - " << n << "\n";
    (l.status == LawStatus::Pass ? pass : l.status == LawStatus::Fail ? fail : exp) += 1;
  }
  out << pass << " passed, " << fail << " failed, " << exp << " experimental\n";
  return out.str();
}

}  // namespace liftkit::harness
