#pragma once

#include <string>
#include <utility>
#include <vector>

namespace vglab {

enum class Overall { Pass, Fail, Inconclusive };

struct Check {
  std::string name;
  double lhs = 0, rhs = 0, slack = 0;
  bool pass = false;
  bool indeterminate = false;
};

// Machine-checkable record of one certificate run. Serialization is
// deterministic: fixed key order, every float printed as %.12e.
struct VerificationReport {
  std::string certificate_id;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> constants_used;
  std::vector<std::pair<std::string, double>> tolerances;

  // lhs >= rhs - tol, slack = lhs - rhs
  void require_ge(const std::string& name, double lhs, double rhs, double tol);
  // lhs <= rhs + tol, slack = rhs - lhs
  void require_le(const std::string& name, double lhs, double rhs, double tol);
  void require_true(const std::string& name, bool ok);
  void note_indeterminate(const std::string& name, double lhs, double rhs);

  void input(const std::string& key, const std::string& value);
  void input(const std::string& key, double value);
  void constant(const std::string& key, double value);
  void tolerance(const std::string& key, double value);

  Overall overall() const;
  bool passed() const { return overall() == Overall::Pass; }
  std::string to_json() const;
};

const char* overall_name(Overall o);

// %.12e rendering used across every serialized artifact
std::string format_float(double v);

// CSV with a fixed header row; row order is input order
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows);

}  // namespace vglab
