#ifndef ZDG_RING_HPP
#define ZDG_RING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zdg/numbers.hpp"

namespace zdg {

// Z_p[x] / <x^c>, p prime, c >= 2. Elements are coefficient vectors
// (a_0, ..., a_{c-1}); units are exactly the elements with a_0 != 0, so the
// zero divisors are the nonzero elements with a_0 = 0.
class RingParams {
 public:
  RingParams(int64_t p, int64_t c);

  int64_t p() const { return p_; }
  int64_t c() const { return c_; }
  int level_count() const { return static_cast<int>(c_) - 1; }
  int special_level() const { return static_cast<int>(c_ / 2); }
  bool even_truncation() const { return c_ % 2 == 0; }

  // p^(c-1) - 1, the number of vertices of the zero-divisor graph.
  const Int& graph_order() const { return graph_order_; }

  // True when p^(c-1) <= limit, i.e. explicit enumeration is affordable.
  bool enumeration_within(uint64_t limit) const;

 private:
  int64_t p_;
  int64_t c_;
  Int graph_order_;
};

// Budget for explicit enumeration of ring elements (number of tuples
// p^(c-1)). Everything beyond this is served by the closed forms only.
inline constexpr uint64_t kEnumerationBudget = 1000000;

struct RingElement {
  std::vector<uint32_t> coeffs;  // size c, entries in [0, p)

  bool operator==(const RingElement&) const = default;
};

RingElement ring_zero(const RingParams& rp);
RingElement ring_element(const RingParams& rp, std::vector<uint32_t> coeffs);

bool is_zero(const RingElement& f);
bool is_unit(const RingElement& f, const RingParams& rp);

RingElement multiply(const RingElement& f, const RingElement& g,
                     const RingParams& rp);

// Least index with a nonzero coefficient. Throws Domain for the zero element.
int mindeg(const RingElement& f, const RingParams& rp);

// Human-readable polynomial ("x + x^3") for diagnostics.
std::string format_element(const RingElement& f);

// Comma-separated coefficient vector "0,1,0,1" (a_0 first).
std::string format_coeffs(const RingElement& f);

// All p^(c-1) - 1 zero divisors, grouped by ascending mindeg and ordered
// lexicographically on (a_1, ..., a_{c-1}) within each group. This is the
// vertex order used everywhere; identical parameters give identical ids.
std::vector<RingElement> enumerate_zero_divisors(const RingParams& rp);

}  // namespace zdg

#endif
