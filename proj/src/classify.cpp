#include "perfcong/classify.hpp"

#include <algorithm>

#include "perfcong/errors.hpp"

namespace perfcong {

std::string reason_tag(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::IdempotentSeparating: return "idempotent-separating";
    case VerdictReason::KZero: return "k-zero";
    case VerdictReason::CosetCover: return "coset-cover";
    case VerdictReason::CosetGap: return "coset-gap";
  }
  throw Error("unknown verdict reason");
}

VerdictReason reason_from_tag(const std::string& tag) {
  if (tag == "idempotent-separating") return VerdictReason::IdempotentSeparating;
  if (tag == "k-zero") return VerdictReason::KZero;
  if (tag == "coset-cover") return VerdictReason::CosetCover;
  if (tag == "coset-gap") return VerdictReason::CosetGap;
  throw ParseError("unknown verdict reason tag '" + tag + "'");
}

namespace {

// Does N * (G alpha^n) = G?  Returns a missed element on failure.
CosetCoverageResult direct_check(const BrContext& s, const Subgroup& n,
                                 long long power) {
  const GroupContext& g = s.group;
  if (g.is_finite()) {
    std::vector<bool> covered(g.order(), false);
    for (int i = 0; i < g.order(); ++i) {
      GroupElement w = endo_apply_power(g, s.alpha, power, g.element(i));
      for (int m : n.members()) {
        covered[g.mul(g.element(m), w).index] = true;
      }
    }
    for (int i = 0; i < g.order(); ++i) {
      if (!covered[i]) {
        return {false, CosetGapEvidence{power, g.element(i)}};
      }
    }
    return {true, std::nullopt};
  }
  ColMatrix cols = n.basis;
  auto image = mat_columns(mat_pow(s.alpha.matrix, power));
  cols.insert(cols.end(), image.begin(), image.end());
  auto sum = hnf(g.rank(), std::move(cols));
  if (sum == mat_columns(mat_identity(g.rank()))) return {true, std::nullopt};
  // Any proper sublattice misses a vector of small max-norm.  Within a norm
  // shell, prefer the lexicographically largest vector so the reported
  // evidence has a nonnegative leading coordinate.
  for (long long norm = 1; norm <= 64; ++norm) {
    auto shell = vectors_of_norm(g.rank(), norm);
    for (auto it = shell.rbegin(); it != shell.rend(); ++it) {
      if (!lattice_contains(g.rank(), sum, *it)) {
        return {false,
                CosetGapEvidence{power, GroupElement{0, std::move(*it)}}};
      }
    }
  }
  throw InternalInconsistency(
      "proper sublattice with no small vector outside it");
}

}  // namespace

CosetCoverageResult coset_coverage(const BrContext& s, const Subgroup& n,
                                   long long n_max) {
  if (n_max < 1) throw Error("n_max must be positive");
  CosetCoverageResult result = direct_check(s, n, 1);
  for (long long power = 2; power <= n_max; ++power) {
    if (direct_check(s, n, power).holds != result.holds) {
      throw InternalInconsistency(
          "coset coverage at n = 1 disagrees with the direct check at n = " +
          std::to_string(power));
    }
  }
  return result;
}

PerfectVerdict classify(const BrContext& s, const CongruenceSpec& spec,
                        long long n_max) {
  if (spec.kind() == CongruenceKind::IdempotentSeparating) {
    return {VerdictStatus::Perfect, VerdictReason::IdempotentSeparating, {}};
  }
  if (spec.k() == 0) {
    return {VerdictStatus::NotPerfect, VerdictReason::KZero, {}};
  }
  CosetCoverageResult c = coset_coverage(s, spec.n(), n_max);
  if (c.holds) {
    return {VerdictStatus::Perfect, VerdictReason::CosetCover, {}};
  }
  return {VerdictStatus::NotPerfect, VerdictReason::CosetGap, c.gap};
}

namespace {

// Member (0, h, q) of the class of x, built as in the positive direction of
// the perfectness criterion: pick the least l >= 1 with
// q = n - m + k*l >= 0, then solve h alpha^n in N z^l (g alpha^q).
BrElement left_witness(const BrContext& s, const CongruenceSpec& spec,
                       const BrElement& x) {
  if (x.m == 0) return x;
  const GroupContext& g = s.group;
  long long l = 1;
  while (x.n - x.m + spec.k() * l < 0) ++l;
  long long q = x.n - x.m + spec.k() * l;
  GroupElement target =
      g.mul(g.pow(spec.z(), l), endo_apply_power(g, s.alpha, q, x.g));
  std::optional<GroupElement> h;
  if (g.is_finite()) {
    for (int i = 0; i < g.order(); ++i) {
      GroupElement cand = g.element(i);
      GroupElement lhs = endo_apply_power(g, s.alpha, x.n, cand);
      if (subgroup_contains(g, spec.n(), g.mul(lhs, g.inv(target)))) {
        h = cand;
        break;
      }
    }
  } else {
    // Solve A^n h - target in N exactly: one lattice solve, no norm search.
    ColMatrix cols = mat_columns(mat_pow(s.alpha.matrix, x.n));
    cols.insert(cols.end(), spec.n().basis.begin(), spec.n().basis.end());
    if (auto u = solve_diophantine(g.rank(), cols, target.coords)) {
      h = GroupElement{0, Col(u->begin(), u->begin() + g.rank())};
    }
  }
  if (!h) {
    throw Error("no-solution: the witness equation has no solution for x = " +
                format_br(s, x));
  }
  BrElement w{0, *h, q};
  if (!contains(s, spec, x, w)) {
    throw InternalInconsistency("constructed left witness is not in the class");
  }
  return w;
}

}  // namespace

WitnessPair class_witnesses(const BrContext& s, const CongruenceSpec& spec,
                            const BrElement& x) {
  if (!spec.is_group() || spec.k() < 1) {
    throw Error("witnesses require a group congruence with k >= 1");
  }
  if (!classify(s, spec).perfect()) {
    throw Error("witnesses exist only for perfect congruences");
  }
  BrElement left = left_witness(s, spec, x);
  BrElement right =
      x.n == 0 ? x : br_inv(s, left_witness(s, spec, br_inv(s, x)));
  if (!contains(s, spec, x, right)) {
    throw InternalInconsistency("constructed right witness is not in the class");
  }
  return {left, right};
}

}  // namespace perfcong
