#include "zdg/ring.hpp"

#include <algorithm>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

RingParams::RingParams(int64_t p, int64_t c) : p_(p), c_(c) {
  if (c < 2) fail(ErrorCode::InvalidArgument, "truncation exponent c must be >= 2, got " + std::to_string(c));
  if (c > 100000) fail(ErrorCode::InvalidArgument, "truncation exponent c too large: " + std::to_string(c));
  if (p < 2) fail(ErrorCode::InvalidArgument, "p must be a prime >= 2, got " + std::to_string(p));
  if (p > (int64_t(1) << 31)) fail(ErrorCode::InvalidArgument, "p too large: " + std::to_string(p));
  if (!is_prime(p)) fail(ErrorCode::NotPrime, "p must be prime, got " + std::to_string(p));
  graph_order_ = ipow(p, c - 1) - 1;
}

bool RingParams::enumeration_within(uint64_t limit) const {
  return graph_order_ + 1 <= Int(limit);
}

RingElement ring_zero(const RingParams& rp) {
  return RingElement{std::vector<uint32_t>(static_cast<size_t>(rp.c()), 0)};
}

RingElement ring_element(const RingParams& rp, std::vector<uint32_t> coeffs) {
  if (coeffs.size() != static_cast<size_t>(rp.c()))
    fail(ErrorCode::InvalidArgument, "coefficient vector must have length c");
  for (uint32_t a : coeffs) {
    if (a >= rp.p()) fail(ErrorCode::InvalidArgument, "coefficient out of range [0, p)");
  }
  return RingElement{std::move(coeffs)};
}

bool is_zero(const RingElement& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(),
                     [](uint32_t a) { return a == 0; });
}

bool is_unit(const RingElement& f, const RingParams&) {
  return !f.coeffs.empty() && f.coeffs[0] != 0;
}

RingElement multiply(const RingElement& f, const RingElement& g,
                     const RingParams& rp) {
  const size_t c = static_cast<size_t>(rp.c());
  if (f.coeffs.size() != c || g.coeffs.size() != c)
    fail(ErrorCode::InvalidArgument, "element size does not match ring");
  const uint64_t p = static_cast<uint64_t>(rp.p());
  RingElement r{std::vector<uint32_t>(c, 0)};
  for (size_t i = 0; i < c; ++i) {
    if (f.coeffs[i] == 0) continue;
    for (size_t j = 0; i + j < c; ++j) {
      if (g.coeffs[j] == 0) continue;
      uint64_t t = r.coeffs[i + j] +
                   uint64_t(f.coeffs[i]) * uint64_t(g.coeffs[j]) % p;
      r.coeffs[i + j] = static_cast<uint32_t>(t % p);
    }
  }
  return r;
}

int mindeg(const RingElement& f, const RingParams&) {
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] != 0) return static_cast<int>(i);
  }
  fail(ErrorCode::Domain, "mindeg is undefined for the zero element");
}

std::string format_element(const RingElement& f) {
  std::string s;
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(f.coeffs[i]);
    } else {
      if (f.coeffs[i] != 1) s += std::to_string(f.coeffs[i]) + "*";
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string format_coeffs(const RingElement& f) {
  std::string s;
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f.coeffs[i]);
  }
  return s;
}

std::vector<RingElement> enumerate_zero_divisors(const RingParams& rp) {
  if (!rp.enumeration_within(kEnumerationBudget))
    fail(ErrorCode::BudgetExceeded,
         "p^(c-1) = " + to_string(Int(rp.graph_order() + 1)) +
             " exceeds the enumeration budget " +
             std::to_string(kEnumerationBudget));
  const int c = static_cast<int>(rp.c());
  const uint32_t p = static_cast<uint32_t>(rp.p());
  std::vector<RingElement> out;
  out.reserve(rp.graph_order().convert_to<size_t>());
  // Group by mindeg level i = 1..c-1; within a level run a mixed-radix
  // counter over (a_i, ..., a_{c-1}) with the rightmost digit fastest, which
  // is lexicographic order on the full tuple.
  for (int level = 1; level <= c - 1; ++level) {
    RingElement e{std::vector<uint32_t>(static_cast<size_t>(c), 0)};
    e.coeffs[level] = 1;
    while (true) {
      out.push_back(e);
      int pos = c - 1;
      while (pos >= level) {
        uint32_t lo = (pos == level) ? 1 : 0;
        if (e.coeffs[pos] + 1 < p) {
          ++e.coeffs[pos];
          break;
        }
        e.coeffs[pos] = lo;
        --pos;
      }
      if (pos < level) break;
    }
  }
  return out;
}

}  // namespace zdg
