#pragma once

#include <stdexcept>
#include <string>

namespace vglab {

// Error taxonomy shared by every module. All of them derive from
// std::runtime_error so callers can catch coarsely or precisely.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};
struct OrderError : std::runtime_error {
  explicit OrderError(const std::string& msg) : std::runtime_error(msg) {}
};
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};
struct BracketError : std::runtime_error {
  explicit BracketError(const std::string& msg) : std::runtime_error(msg) {}
};
struct StepError : std::runtime_error {
  explicit StepError(const std::string& msg) : std::runtime_error(msg) {}
};
struct ParamError : std::runtime_error {
  explicit ParamError(const std::string& msg) : std::runtime_error(msg) {}
};
struct PackingError : std::runtime_error {
  explicit PackingError(const std::string& msg) : std::runtime_error(msg) {}
};
struct KinkError : std::runtime_error {
  explicit KinkError(const std::string& msg) : std::runtime_error(msg) {}
};
struct HypothesisError : std::runtime_error {
  explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};
struct BlowupError : std::runtime_error {
  explicit BlowupError(const std::string& msg) : std::runtime_error(msg) {}
};
struct PunctureError : std::runtime_error {
  explicit PunctureError(const std::string& msg) : std::runtime_error(msg) {}
};
struct OverflowGuard : std::runtime_error {
  explicit OverflowGuard(const std::string& msg) : std::runtime_error(msg) {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};
struct IOError : std::runtime_error {
  explicit IOError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vglab
