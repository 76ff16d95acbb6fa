#ifndef QORBITAL_COMMON_HPP
#define QORBITAL_COMMON_HPP

#include <stdexcept>
#include <string>

namespace qorbital {

// Error taxonomy shared by the library and the CLI exit codes:
// Domain -> 1, Usage -> 2, TheoremViolation -> 3.
enum class ErrorKind { Domain, Usage, TheoremViolation };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error domain_error(std::string msg) {
  return Error(ErrorKind::Domain, std::move(msg));
}
inline Error usage_error(std::string msg) {
  return Error(ErrorKind::Usage, std::move(msg));
}
// Signals an engine bug: a statement the engine relies on failed to verify.
inline Error theorem_violation(std::string msg) {
  return Error(ErrorKind::TheoremViolation, std::move(msg));
}

}  // namespace qorbital

#endif  // QORBITAL_COMMON_HPP
