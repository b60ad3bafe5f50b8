#ifndef ZDG_VERIFY_HPP
#define ZDG_VERIFY_HPP

#include <string>
#include <vector>

#include "zdg/numeric.hpp"
#include "zdg/ring.hpp"
#include "zdg/structure.hpp"

namespace zdg {

// Documented fault injection for the negative-control path: the verifier
// must notice a corrupted quotient entry through its own checks.
enum class Fault {
  None,
  CorruptQuotient,
};

struct VerifyOptions {
  double tol = 1e-8;
  uint64_t dense_budget = kDenseBudgetDefault;
  Fault fault = Fault::None;
  std::vector<Rat> alphas = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
  StructureOptions structure;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  int64_t p = 0;
  int64_t c = 0;
  Int order;
  std::string fault;  // "none" or the injected fault's name
  std::vector<CheckResult> checks;
  bool all_passed = false;
};

// Runs every cross-check on one instance: dual-route graph construction,
// degrees, handshake, equitability against the quotient, all five spectra
// closed vs dense, exact eigenvector residuals, exact characteristic
// polynomial roots, trace identities, structural brute force. Throws
// BudgetExceeded when the instance cannot be built and eigensolved.
VerifyReport run_verification(const RingParams& rp, const VerifyOptions& opt = {});

}  // namespace zdg

#endif
