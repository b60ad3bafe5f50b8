#ifndef ZDG_ERRORS_HPP
#define ZDG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zdg {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  BudgetExceeded,
  Domain,
  Disconnected,
  NoConvergence,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace zdg

#endif
