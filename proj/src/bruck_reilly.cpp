#include "perfcong/bruck_reilly.hpp"

#include <algorithm>
#include <utility>

#include "perfcong/errors.hpp"

namespace perfcong {

BrContext make_br_context(GroupContext group, Endo alpha) {
  // Re-wrap through the validating constructors so every BrContext carries a
  // checked endomorphism.
  if (group.is_finite()) {
    alpha = make_endo_finite(group, std::move(alpha.image));
  } else {
    alpha = make_endo_abelian(group, std::move(alpha.matrix));
  }
  return BrContext{std::move(group), std::move(alpha)};
}

BrElement br_mul(const BrContext& s, const BrElement& x, const BrElement& y) {
  if (x.m < 0 || x.n < 0 || y.m < 0 || y.n < 0) {
    throw Error("negative index in Bruck-Reilly element");
  }
  long long r = std::min(x.n, y.m);
  GroupElement g = endo_apply_power(s.group, s.alpha, y.m - r, x.g);
  GroupElement h = endo_apply_power(s.group, s.alpha, x.n - r, y.g);
  return BrElement{x.m + y.m - r, s.group.mul(g, h), x.n + y.n - r};
}

BrElement br_inv(const BrContext& s, const BrElement& x) {
  return BrElement{x.n, s.group.inv(x.g), x.m};
}

BrElement br_idempotent(const BrContext& s, long long n) {
  if (n < 0) throw Error("idempotent index must be nonnegative");
  return BrElement{n, s.group.identity(), n};
}

bool br_less(const BrContext& s, const BrElement& a, const BrElement& b) {
  if (a.m != b.m) return a.m < b.m;
  if (a.n != b.n) return a.n < b.n;
  return s.group.less(a.g, b.g);
}

std::string format_br(const BrContext& s, const BrElement& x) {
  return "(" + std::to_string(x.m) + "," + s.group.format(x.g) + "," +
         std::to_string(x.n) + ")";
}

}  // namespace perfcong
