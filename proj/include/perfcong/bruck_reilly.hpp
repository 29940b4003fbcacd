#ifndef PERFCONG_BRUCK_REILLY_HPP_
#define PERFCONG_BRUCK_REILLY_HPP_

#include <string>

#include "perfcong/bicyclic.hpp"
#include "perfcong/group.hpp"

namespace perfcong {

// An element (m, g, n) of the Bruck-Reilly extension BR(G, alpha).
struct BrElement {
  long long m = 0;
  GroupElement g;
  long long n = 0;
  friend bool operator==(const BrElement&, const BrElement&) = default;
};

// The ambient semigroup BR(G, alpha).  The semigroup itself is infinite and
// never materialized; this just pairs the group with a validated
// endomorphism.
struct BrContext {
  GroupContext group;
  Endo alpha;
};

BrContext make_br_context(GroupContext group, Endo alpha);

// (m,g,n)(p,h,q) = (m+p-r, (g a^{p-r})(h a^{n-r}), n+q-r), r = min{n,p}.
BrElement br_mul(const BrContext& s, const BrElement& x, const BrElement& y);

// (m,g,n)^{-1} = (n, g^{-1}, m).
BrElement br_inv(const BrContext& s, const BrElement& x);

// The idempotent (n, e, n); n = 0 gives the identity of BR(G, alpha).
BrElement br_idempotent(const BrContext& s, long long n);

// The group-forgetful homomorphism onto B: (m,g,n) -> (m,n).
inline BicyclicElement forgetful(const BrElement& x) { return {x.m, x.n}; }

// Deterministic element order: (m, n), then the group coordinate.
bool br_less(const BrContext& s, const BrElement& a, const BrElement& b);

std::string format_br(const BrContext& s, const BrElement& x);

}  // namespace perfcong

#endif  // PERFCONG_BRUCK_REILLY_HPP_
