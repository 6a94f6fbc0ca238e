#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vwc {

/// One failed clause of a criterion, re-checkable against the input on its own.
///
/// `clause` names the condition ("(i)", "(ii)", "(**)", "structural", "reisner",
/// "serre", "mixed-heights", ...). Pair indices in `indices` are 1-based, the
/// way x_1..x_h are numbered; homology witnesses use `degree` and `rank`.
struct Violation {
  std::string clause;
  std::vector<int> indices;
  std::vector<std::string> vertices;
  std::vector<long> weights;
  std::vector<std::vector<std::string>> sets;
  std::optional<int> degree;
  std::optional<long> rank;
  std::string note;

  bool operator==(const Violation&) const = default;
};

/// Verdict plus witnesses. `verdict` is true exactly when `violations` is empty.
class CriterionReport {
 public:
  CriterionReport() = default;
  explicit CriterionReport(std::vector<Violation> violations)
      : violations_(std::move(violations)) {}

  static CriterionReport pass() { return CriterionReport{}; }

  bool verdict() const { return violations_.empty(); }
  explicit operator bool() const { return verdict(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(Violation v) { violations_.push_back(std::move(v)); }

 private:
  std::vector<Violation> violations_;
};

}  // namespace vwc
