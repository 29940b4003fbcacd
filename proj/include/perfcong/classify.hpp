#ifndef PERFCONG_CLASSIFY_HPP_
#define PERFCONG_CLASSIFY_HPP_

#include <optional>
#include <string>

#include "perfcong/congruence.hpp"

namespace perfcong {

enum class VerdictStatus { Perfect, NotPerfect };

enum class VerdictReason {
  IdempotentSeparating,  // idempotent-separating congruences are perfect
  KZero,                 // group congruences with k = 0 never are
  CosetCover,            // k >= 1 and every coset of N meets every G alpha^n
  CosetGap,              // k >= 1 and some coset misses some image
};

std::string reason_tag(VerdictReason reason);
VerdictReason reason_from_tag(const std::string& tag);

// A pair (n, x) with G alpha^n disjoint from Nx.
struct CosetGapEvidence {
  long long n = 0;
  GroupElement x;
  friend bool operator==(const CosetGapEvidence&, const CosetGapEvidence&) =
      default;
};

struct CosetCoverageResult {
  bool holds = false;
  std::optional<CosetGapEvidence> gap;
};

// Decides whether N * (G alpha^n) = G for all n >= 1.  The n = 1 instance
// decides the whole family (coverage can only shrink with n, and admissible
// N propagates coverage upward), but the instances n <= n_max are checked
// directly as well; a disagreement is an implementation bug and raises
// InternalInconsistency.
CosetCoverageResult coset_coverage(const BrContext& s, const Subgroup& n,
                                   long long n_max = 8);

struct PerfectVerdict {
  VerdictStatus status = VerdictStatus::Perfect;
  VerdictReason reason = VerdictReason::IdempotentSeparating;
  std::optional<CosetGapEvidence> evidence;  // present iff reason == CosetGap
  bool perfect() const { return status == VerdictStatus::Perfect; }
  friend bool operator==(const PerfectVerdict&, const PerfectVerdict&) =
      default;
};

// Theorem-driven perfectness decision for a validated congruence.
PerfectVerdict classify(const BrContext& s, const CongruenceSpec& spec,
                        long long n_max = 8);

struct WitnessPair {
  BrElement left;   // a member (0, h, q) of the class of x
  BrElement right;  // a member (m, g, 0) of the class of x
};

// Constructive witnesses that the class of x reaches both ends of the index
// grid.  Requires a group congruence with k >= 1 that classifies perfect.
WitnessPair class_witnesses(const BrContext& s, const CongruenceSpec& spec,
                            const BrElement& x);

}  // namespace perfcong

#endif  // PERFCONG_CLASSIFY_HPP_
