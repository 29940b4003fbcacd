#include "perfcong/oracle.hpp"

#include <algorithm>
#include <map>

#include "perfcong/errors.hpp"

namespace perfcong {

namespace {

std::vector<GroupElement> group_coords(const GroupContext& g,
                                       long long norm_bound) {
  std::vector<GroupElement> out;
  if (g.is_finite()) {
    for (int i = 0; i < g.order(); ++i) out.push_back(g.element(i));
  } else {
    for (auto& v : vectors_up_to_norm(g.rank(), norm_bound)) {
      out.push_back(GroupElement{0, std::move(v)});
    }
  }
  return out;
}

// All elements with indices <= window in (m, n, g) order.
std::vector<BrElement> window_elements(const BrContext& s, long long window,
                                       long long norm_bound) {
  auto coords = group_coords(s.group, norm_bound);
  std::vector<BrElement> out;
  for (long long m = 0; m <= window; ++m) {
    for (long long n = 0; n <= window; ++n) {
      for (const auto& g : coords) out.push_back(BrElement{m, g, n});
    }
  }
  return out;
}

// One representative per congruence class among the given elements, in
// input order.  Coverage of a set-product check depends only on the classes
// of the pair, so scanning representatives is exact and much cheaper.
std::vector<BrElement> class_representatives(const BrContext& s,
                                             const CongruenceSpec& spec,
                                             const std::vector<BrElement>& all) {
  std::vector<BrElement> reps;
  for (const auto& x : all) {
    bool fresh = std::none_of(reps.begin(), reps.end(), [&](const BrElement& r) {
      return contains(s, spec, r, x);
    });
    if (fresh) reps.push_back(x);
  }
  return reps;
}

}  // namespace

VerificationReport set_product_window(const BrContext& s,
                                      const CongruenceSpec& spec,
                                      const BrElement& x, const BrElement& y,
                                      long long window, long long bound,
                                      long long norm_bound) {
  BrElement xy = br_mul(s, x, y);
  if (bound < window) {
    throw Error("bound misordering: bound < window");
  }
  if (window < std::max({x.m, x.n, y.m, y.n, xy.m, xy.n})) {
    throw Error("bound misordering: window smaller than the pair's indices");
  }
  VerificationReport report;
  report.x = x;
  report.y = y;
  report.window = window;
  report.bound = bound;
  report.norm_bound = norm_bound;
  report.bound_relative = spec.is_group();

  auto target = class_members(s, spec, xy, window, norm_bound);
  auto cmp = [&s](const BrElement& a, const BrElement& b) {
    return br_less(s, a, b);
  };
  std::map<BrElement, bool, decltype(cmp)> hit(cmp);
  for (const auto& w : target) hit.emplace(w, false);

  auto factors_x = class_members(s, spec, x, bound, norm_bound);
  auto factors_y = class_members(s, spec, y, bound, norm_bound);
  size_t remaining = target.size();
  for (const auto& fx : factors_x) {
    for (const auto& fy : factors_y) {
      BrElement w = br_mul(s, fx, fy);
      if (!contains(s, spec, xy, w)) {
        throw InternalInconsistency(
            "set product escaped the class of the product at " +
            format_br(s, fx) + " * " + format_br(s, fy));
      }
      auto it = hit.find(w);
      if (it != hit.end() && !it->second) {
        it->second = true;
        if (--remaining == 0) break;
      }
    }
    if (remaining == 0) break;
  }
  for (const auto& w : target) {
    if (hit.at(w)) {
      ++report.covered_count;
    } else {
      report.uncovered.push_back(w);
    }
  }
  return report;
}

std::optional<VerificationReport> falsify_perfectness(
    const BrContext& s, const CongruenceSpec& spec, long long window,
    long long bound, long long norm_bound) {
  if (bound < window) throw Error("bound misordering: bound < window");
  auto reps =
      class_representatives(s, spec, window_elements(s, window, norm_bound));
  for (const auto& x : reps) {
    for (const auto& y : reps) {
      BrElement xy = br_mul(s, x, y);
      long long w = std::max({window, xy.m, xy.n});
      auto report = set_product_window(s, spec, x, y, w, std::max(bound, w),
                                       norm_bound);
      if (!report.covered()) return report;
    }
  }
  return std::nullopt;
}

bool right_divides(const BrContext& s, const BrElement& a, const BrElement& b) {
  return br_mul(s, a, br_mul(s, br_inv(s, a), b)) == b;
}

bool divisibility_reachable(const BrContext& s, const CongruenceSpec& spec,
                            const BrElement& u, const BrElement& v,
                            long long bound, long long norm_bound) {
  for (const auto& w : window_elements(s, bound, norm_bound)) {
    // delta_r on the forgetful images needs m <= i, and the enumeration is
    // ascending in m, so nothing past this point can qualify
    if (w.m > v.m) break;
    if (contains(s, spec, u, w) && right_divides(s, w, v)) return true;
  }
  return false;
}

ClosureReport divisibility_closure_check(const BrContext& s,
                                         const CongruenceSpec& spec,
                                         long long window, long long bound,
                                         long long norm_bound) {
  if (!spec.is_group()) {
    throw Error("divisibility closure check applies to group congruences");
  }
  if (bound < window) throw Error("bound misordering: bound < window");
  auto all = window_elements(s, window, norm_bound);
  // The first leg only sees the class of u, so representatives suffice.
  auto reps = class_representatives(s, spec, all);
  for (const auto& u : reps) {
    for (const auto& v : all) {
      if (!divisibility_reachable(s, spec, u, v, bound, norm_bound)) {
        return {false, std::make_pair(u, v)};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace perfcong
