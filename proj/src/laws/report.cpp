#include "camplet/cat/report.hpp"

namespace camplet::cat {

nlohmann::json LawReport::to_json() const {
  nlohmann::json j{{"law", law},
                   {"instance", instance},
                   {"cases", cases},
                   {"status", passed ? "pass" : "fail"}};
  if (counterexample) {
    j["counterexample"] = {{"at", counterexample->at},
                           {"lhs", counterexample->lhs},
                           {"rhs", counterexample->rhs}};
  }
  if (!note.empty()) j["note"] = note;
  return j;
}

std::string LawReport::render() const {
  std::string line = (passed ? "pass  " : "FAIL  ");
  line += instance + "  " + law + "  cases=" + std::to_string(cases);
  if (!note.empty()) line += "  (" + note + ")";
  if (counterexample) {
    line += "\n      at:  " + counterexample->at;
    line += "\n      lhs: " + counterexample->lhs;
    line += "\n      rhs: " + counterexample->rhs;
  }
  return line;
}

void LawSuite::run(const std::string& law_name,
                   const std::function<void(Law&)>& body) {
  LawReport report;
  report.law = law_name;
  report.instance = instance_;
  Law law(&report);
  try {
    body(law);
  } catch (const std::exception& e) {
    report.passed = false;
    if (!report.counterexample)
      report.counterexample = Counterexample{"structural error", e.what(), ""};
    if (report.cases == 0) report.cases = 1;
  }
  reports_.push_back(std::move(report));
}

bool LawSuite::all_passed() const {
  for (const auto& r : reports_)
    if (!r.passed) return false;
  return true;
}

void LawSuite::append_all(const std::vector<LawReport>& reports) {
  for (const auto& r : reports) reports_.push_back(r);
}

}  // namespace camplet::cat
