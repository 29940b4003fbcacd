#ifndef PERFCONG_BICYCLIC_HPP_
#define PERFCONG_BICYCLIC_HPP_

#include <algorithm>
#include <string>

namespace perfcong {

// The bicyclic monoid B on N x N with (m,n)(p,q) = (m+p-r, n+q-r),
// r = min{n, p}.  This is the base case every Bruck-Reilly result projects
// onto, so it gets a standalone type rather than BR(trivial group, id).
struct BicyclicElement {
  long long m = 0;
  long long n = 0;
  friend bool operator==(const BicyclicElement&, const BicyclicElement&) =
      default;
  friend auto operator<=>(const BicyclicElement&, const BicyclicElement&) =
      default;
};

inline BicyclicElement b_mul(const BicyclicElement& x,
                             const BicyclicElement& y) {
  long long r = std::min(x.n, y.m);
  return {x.m + y.m - r, x.n + y.n - r};
}

enum class Side { Left, Right };

// Divisibility on B: (x, y) is in delta_r iff x.m <= y.m, in delta_l iff
// x.n <= y.n.
inline bool b_div(const BicyclicElement& x, const BicyclicElement& y,
                  Side side) {
  return side == Side::Right ? x.m <= y.m : x.n <= y.n;
}

// The congruence zeta_k on B: equal index differences for k = 0, congruent
// differences mod k for k >= 1.
inline bool zeta_contains(long long k, const BicyclicElement& x,
                          const BicyclicElement& y) {
  long long dx = x.n - x.m, dy = y.n - y.m;
  if (k == 0) return dx == dy;
  return (dx - dy) % k == 0;
}

inline std::string format_bicyclic(const BicyclicElement& x) {
  return "(" + std::to_string(x.m) + "," + std::to_string(x.n) + ")";
}

}  // namespace perfcong

#endif  // PERFCONG_BICYCLIC_HPP_
