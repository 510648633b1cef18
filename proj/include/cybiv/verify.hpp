#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cybiv/json_io.hpp"

namespace cybiv {

enum class CaseStatus { Pass, Fail, DiscrepancyNoted };
std::string to_string(CaseStatus s);

/// One comparison inside a case.  A failed check with a non-empty
/// discrepancy note is a documented disagreement with the displayed data.
struct SubCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  std::string discrepancy;
};

struct CaseResult {
  std::string id;
  std::string title;
  std::vector<SubCheck> checks;
  CaseStatus status = CaseStatus::Pass;
  double seconds = 0.0;
};

/// Pass if every check passed; discrepancy-noted if every failure is documented; fail otherwise.
CaseStatus case_status(const std::vector<SubCheck>& checks);

struct RunReport {
  std::vector<CaseResult> cases;
  [[nodiscard]] size_t count(CaseStatus s) const;
  [[nodiscard]] bool ok() const { return count(CaseStatus::Fail) == 0; }
  [[nodiscard]] Json to_json() const;
  [[nodiscard]] std::string to_text() const;
};

struct VerificationCase {
  std::string id;
  std::string title;
  std::function<std::vector<SubCheck>()> run;
};

/// All cases in report order.
const std::vector<VerificationCase>& verification_cases();

/// Runs every case whose id contains filter (all when empty), concurrently,
/// and merges results in registry order.
RunReport run_verify_paper(const std::string& filter = "");

class NonGlobalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "q0,q1,q2" in the given chart's variables.  Throws ParseError (with
/// the offset in the whole text) on malformed input and NonGlobalError naming
/// the offending term if the field is not holomorphic on both charts.
BivectorField parse_bivector(std::string_view text, const ThreefoldSpec& spec, Chart chart = Chart::U,
                             std::string label = {});

}  // namespace cybiv
