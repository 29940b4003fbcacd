#ifndef PERFCONG_GROUP_HPP_
#define PERFCONG_GROUP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "perfcong/lattice.hpp"

namespace perfcong {

enum class Backend { FiniteCayley, FreeAbelian };

// An element of the coefficient group: an index into the Cayley table for
// the finite backend, an integer vector for the free abelian one.
struct GroupElement {
  int index = 0;
  Col coords;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// A concrete group: either a finite group given by its full Cayley table or
// the free abelian group Z^rank.  Immutable after construction; all
// operations are pure.
class GroupContext {
 public:
  // Validates the table exhaustively: Latin square, two-sided identity,
  // inverses, associativity.  Tables above order 256 are rejected outright
  // rather than spot-checked.
  static GroupContext finite_cayley(int order, std::vector<int> table,
                                    int identity);
  static GroupContext free_abelian(int rank);

  Backend backend() const { return backend_; }
  bool is_finite() const { return backend_ == Backend::FiniteCayley; }
  int order() const { return order_; }
  int rank() const { return rank_; }

  GroupElement identity() const;
  GroupElement element(int index) const;
  GroupElement element(Col coords) const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, long long n) const;

  // Deterministic element order: index for finite, max-norm then
  // lexicographic for abelian.
  bool less(const GroupElement& a, const GroupElement& b) const;

  std::string format(const GroupElement& a) const;
  void require_valid(const GroupElement& a) const;

  int table_at(int i, int j) const { return table_[i * order_ + j]; }

  // An empty placeholder; use the named constructors for a real group.
  GroupContext() = default;

 private:
  Backend backend_ = Backend::FiniteCayley;
  int order_ = 0;
  int identity_ = 0;
  int rank_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

// An endomorphism of the context group: a full image table or an integer
// rank x rank matrix acting by left multiplication.
struct Endo {
  std::vector<int> image;
  RowMatrix matrix;
};

// Validate and wrap an image table; the homomorphism law is checked on all
// pairs.
Endo make_endo_finite(const GroupContext& ctx, std::vector<int> image);
Endo make_endo_abelian(const GroupContext& ctx, RowMatrix matrix);
Endo identity_endo(const GroupContext& ctx);

GroupElement endo_apply(const GroupContext& ctx, const Endo& alpha,
                        const GroupElement& a);
GroupElement endo_apply_power(const GroupContext& ctx, const Endo& alpha,
                              long long n, const GroupElement& a);

// A subgroup handle: membership bit-set for the finite backend, a canonical
// HNF lattice basis for the abelian one.  Equality of handles coincides with
// equality of subgroups.
struct Subgroup {
  std::vector<std::uint8_t> mask;
  ColMatrix basis;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  std::vector<int> members() const;  // finite backend, sorted indices
  size_t size() const { return members().size(); }
};

Subgroup subgroup_from_elements(const GroupContext& ctx,
                                const std::vector<int>& indices);
Subgroup subgroup_from_basis(const GroupContext& ctx, ColMatrix cols);
Subgroup trivial_subgroup(const GroupContext& ctx);
Subgroup full_subgroup(const GroupContext& ctx);

bool subgroup_contains(const GroupContext& ctx, const Subgroup& h,
                       const GroupElement& a);
bool is_normal(const GroupContext& ctx, const Subgroup& h);
bool is_admissible(const GroupContext& ctx, const Endo& alpha,
                   const Subgroup& h);
bool is_invariant(const GroupContext& ctx, const Endo& alpha,
                  const Subgroup& h);

// {g : g alpha in H}; always a subgroup, canonical on the abelian backend.
Subgroup preimage_subgroup(const GroupContext& ctx, const Endo& alpha,
                           const Subgroup& h);
// {g alpha : g in H} (closure is automatic since alpha is a homomorphism).
Subgroup image_subgroup(const GroupContext& ctx, const Endo& alpha,
                        const Subgroup& h);

// All normal subgroups of a finite group, each once, ordered by size then
// lexicographic bit-set.  Throws UnsupportedBackend for Z^r.
std::vector<Subgroup> enumerate_normal_subgroups(const GroupContext& ctx);

// N0 = {g : g alpha^n = e for some n >= 1}, the union of the ascending
// kernel chain of alpha.
Subgroup stable_kernel(const GroupContext& ctx, const Endo& alpha);

bool subgroup_less(const GroupContext& ctx, const Subgroup& a,
                   const Subgroup& b);
std::string format_subgroup(const GroupContext& ctx, const Subgroup& h);

// Abelian-backend vectors in max-norm-then-lex order: all vectors of
// max-norm exactly `norm`, lexicographically.  Norm 0 yields {0}.
std::vector<Col> vectors_of_norm(int rank, long long norm);
// All vectors of max-norm <= bound, in max-norm-then-lex order.
std::vector<Col> vectors_up_to_norm(int rank, long long bound);

}  // namespace perfcong

#endif  // PERFCONG_GROUP_HPP_
