#ifndef COXCOMB_ERRORS_HPP
#define COXCOMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxcomb {

/// Failure classes, aligned with the CLI exit-code contract:
/// Schema -> 2, Precondition -> 3, Hypotheses -> 4.
enum class ErrorKind { Schema, Precondition, Hypotheses };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message),
        kind_(kind),
        code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error schema_error(const std::string& message) {
  return Error(ErrorKind::Schema, "InvalidDocument", message);
}

inline Error precondition_error(const std::string& code, const std::string& message) {
  return Error(ErrorKind::Precondition, code, message);
}

inline Error hypotheses_error(const std::string& message) {
  return Error(ErrorKind::Hypotheses, "HypothesesNotMet", message);
}

}  // namespace coxcomb

#endif
