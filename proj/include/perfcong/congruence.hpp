#ifndef PERFCONG_CONGRUENCE_HPP_
#define PERFCONG_CONGRUENCE_HPP_

#include <optional>
#include <vector>

#include "perfcong/bruck_reilly.hpp"

namespace perfcong {

enum class CongruenceKind { IdempotentSeparating, Group };

// Which defining conditions were checked when the spec was constructed.
struct Certificate {
  bool normal = false;
  bool admissible = false;   // idempotent-separating specs
  bool invariant = false;    // group specs
  bool coset_shift = false;  // N(z alpha) = Nz
  bool twist = false;        // for all g: g^{-1} z (g alpha^k) in Nz
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// A validated symbolic congruence on BR(G, alpha): either the
// idempotent-separating congruence of an admissible normal subgroup N, or
// the group congruence of a triple (N, z, k).  Only the validating
// constructors below can build one.
class CongruenceSpec {
 public:
  CongruenceKind kind() const { return kind_; }
  bool is_group() const { return kind_ == CongruenceKind::Group; }
  const Subgroup& n() const { return n_; }
  const GroupElement& z() const { return z_; }
  long long k() const { return k_; }
  const Certificate& certificate() const { return cert_; }

  friend bool operator==(const CongruenceSpec&, const CongruenceSpec&) =
      default;

  friend CongruenceSpec validate_is(const BrContext& s, const Subgroup& n);
  friend CongruenceSpec validate_gc(const BrContext& s, const Subgroup& n,
                                    const GroupElement& z, long long k);

 private:
  CongruenceSpec() = default;
  CongruenceKind kind_ = CongruenceKind::IdempotentSeparating;
  Subgroup n_;
  GroupElement z_;
  long long k_ = 0;
  Certificate cert_;
};

// Idempotent-separating congruence of N.  Throws ValidationError
// ("not-normal" / "not-admissible") if N does not qualify.
CongruenceSpec validate_is(const BrContext& s, const Subgroup& n);

// Group congruence of (N, z, k).  Checks, in order: normality, invariance,
// the coset shift N(z alpha) = Nz, and the twist condition
// g^{-1} z (g alpha^k) in Nz for all g (lattice generators suffice on the
// abelian backend).  Throws ValidationError naming the failed condition.
CongruenceSpec validate_gc(const BrContext& s, const Subgroup& n,
                           const GroupElement& z, long long k);

// Membership of (x, y) in the congruence.
bool contains(const BrContext& s, const CongruenceSpec& spec,
              const BrElement& x, const BrElement& y);

// All members of the class of x with indices <= window; on the abelian
// backend group coordinates are confined to max-norm <= norm_bound.
// Deterministic (m, n, g) order.
std::vector<BrElement> class_members(const BrContext& s,
                                     const CongruenceSpec& spec,
                                     const BrElement& x, long long window,
                                     long long norm_bound);

// The minimum group congruence: the triple (stable kernel of alpha, e, 0).
CongruenceSpec sigma_spec(const BrContext& s);

// Every congruence of BR(G, alpha) with k <= kmax, one spec per congruence,
// deterministic order.  The finite backend enumerates normal subgroups
// itself; the abelian backend requires an explicit pool and confines group
// congruence representatives z to max-norm <= z_bound (the set of valid k
// and z is infinite in general, so the catalog is a truncation).
std::vector<CongruenceSpec> catalog(
    const BrContext& s, long long kmax,
    const std::vector<Subgroup>* subgroup_pool = nullptr,
    long long z_bound = 2);

}  // namespace perfcong

#endif  // PERFCONG_CONGRUENCE_HPP_
