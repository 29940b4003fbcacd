#ifndef PERFCONG_ORACLE_HPP_
#define PERFCONG_ORACLE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "perfcong/congruence.hpp"

namespace perfcong {

// Outcome of a windowed set-product coverage check for one pair (x, y):
// which members of the class of xy (within `window`) were written as a
// product of class members of x and y (factors searched within `bound`
// indices and, on the abelian backend, `norm_bound` coordinates).
struct VerificationReport {
  BrElement x;
  BrElement y;
  long long window = 0;
  long long bound = 0;
  long long norm_bound = 0;
  long long covered_count = 0;
  std::vector<BrElement> uncovered;
  // Factor indices are unbounded in principle for group congruences, so an
  // uncovered element there is evidence relative to the bound only.  For
  // idempotent-separating congruences the factor search is exhaustive and
  // the verdict is exact.
  bool bound_relative = false;
  bool covered() const { return uncovered.empty(); }
};

// Brute-force set-product check of (x eps)(y eps) against (xy) eps on a
// window.  The containment of the set product in the class of xy is a
// theorem; a violation raises InternalInconsistency.
VerificationReport set_product_window(const BrContext& s,
                                      const CongruenceSpec& spec,
                                      const BrElement& x, const BrElement& y,
                                      long long window, long long bound,
                                      long long norm_bound);

// Scans all pairs with indices <= window (one representative per class) and
// returns the first report with an uncovered element, if any.
std::optional<VerificationReport> falsify_perfectness(const BrContext& s,
                                                      const CongruenceSpec& spec,
                                                      long long window,
                                                      long long bound,
                                                      long long norm_bound);

// Is there w with (u, w) in eps and (w, v) in delta_r?  The divisibility
// step is exact: w right-divides v iff w w^{-1} v = v, and then t = w^{-1} v
// exhibits the factorization.
bool divisibility_reachable(const BrContext& s, const CongruenceSpec& spec,
                            const BrElement& u, const BrElement& v,
                            long long bound, long long norm_bound);

struct ClosureReport {
  bool holds = false;
  std::optional<std::pair<BrElement, BrElement>> failing_pair;
};

// Checks eps o delta_r = S x S on all pairs with indices <= window,
// searching the middle element within `bound`.  A perfect group congruence
// must pass; a failing pair refutes perfectness.
ClosureReport divisibility_closure_check(const BrContext& s,
                                         const CongruenceSpec& spec,
                                         long long window, long long bound,
                                         long long norm_bound);

// b in aS, decided via a a^{-1} b = b.
bool right_divides(const BrContext& s, const BrElement& a, const BrElement& b);

}  // namespace perfcong

#endif  // PERFCONG_ORACLE_HPP_
