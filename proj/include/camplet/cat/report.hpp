#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace camplet::cat {

/// The first failing case of a law: which objects/morphisms were involved
/// and how the two sides of the equation rendered.
struct Counterexample {
  std::string at;   // objects and morphisms of the failing instance
  std::string lhs;  // rendered left-hand side
  std::string rhs;  // rendered right-hand side
};

/// Outcome of checking one equational law on one model instance.
struct LawReport {
  std::string law;
  std::string instance;
  long long cases = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::string note;

  nlohmann::json to_json() const;
  std::string render() const;  // one human-readable line
};

/// Case accounting for a single law. A law stops at its first
/// counterexample; `check` returns false once that happened so loops can
/// bail out early.
class Law {
 public:
  explicit Law(LawReport* report) : report_(report) {}

  bool check(bool ok, const std::function<Counterexample()>& witness) {
    if (!report_->passed) return false;
    ++report_->cases;
    if (!ok) {
      report_->passed = false;
      report_->counterexample = witness();
    }
    return report_->passed;
  }

  bool ok() const { return report_->passed; }
  void note(std::string text) { report_->note = std::move(text); }

 private:
  LawReport* report_;
};

/// Ordered collection of law reports for one model instance. A failing
/// law never aborts the rest of the suite. Exceptions escaping a law body
/// (e.g. structural errors from malformed tables) are converted into a
/// failed report carrying the error text.
class LawSuite {
 public:
  explicit LawSuite(std::string instance) : instance_(std::move(instance)) {}

  void run(const std::string& law_name,
           const std::function<void(Law&)>& body);

  const std::vector<LawReport>& reports() const { return reports_; }
  std::vector<LawReport> take() { return std::move(reports_); }
  bool all_passed() const;
  const std::string& instance() const { return instance_; }

  void append(LawReport report) { reports_.push_back(std::move(report)); }
  void append_all(const std::vector<LawReport>& reports);

 private:
  std::string instance_;
  std::vector<LawReport> reports_;
};

}  // namespace camplet::cat
