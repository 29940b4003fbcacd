#include "perfcong/congruence.hpp"

#include <algorithm>
#include <utility>

#include "perfcong/errors.hpp"

namespace perfcong {

namespace {

// Candidate group coordinates in deterministic element order.
std::vector<GroupElement> group_candidates(const GroupContext& g,
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

}  // namespace

CongruenceSpec validate_is(const BrContext& s, const Subgroup& n) {
  CongruenceSpec spec;
  spec.kind_ = CongruenceKind::IdempotentSeparating;
  spec.n_ = n;
  spec.z_ = s.group.identity();
  spec.k_ = 0;
  if (!is_normal(s.group, n)) {
    throw ValidationError("not-normal",
                          "N = " + format_subgroup(s.group, n) +
                              " is not a normal subgroup");
  }
  spec.cert_.normal = true;
  if (!is_admissible(s.group, s.alpha, n)) {
    throw ValidationError("not-admissible",
                          "N = " + format_subgroup(s.group, n) +
                              " is not closed under alpha");
  }
  spec.cert_.admissible = true;
  return spec;
}

CongruenceSpec validate_gc(const BrContext& s, const Subgroup& n,
                           const GroupElement& z, long long k) {
  if (k < 0) throw ValidationError("bad-k", "k must be nonnegative");
  s.group.require_valid(z);
  CongruenceSpec spec;
  spec.kind_ = CongruenceKind::Group;
  spec.n_ = n;
  spec.z_ = z;
  spec.k_ = k;
  if (!is_normal(s.group, n)) {
    throw ValidationError("not-normal",
                          "N = " + format_subgroup(s.group, n) +
                              " is not a normal subgroup");
  }
  spec.cert_.normal = true;
  if (!is_invariant(s.group, s.alpha, n)) {
    throw ValidationError("not-invariant",
                          "N = " + format_subgroup(s.group, n) +
                              " differs from its full alpha-preimage");
  }
  spec.cert_.invariant = true;
  // N(z alpha) = Nz, i.e. (z alpha) z^{-1} in N.
  GroupElement za = endo_apply(s.group, s.alpha, z);
  if (!subgroup_contains(s.group, n, s.group.mul(za, s.group.inv(z)))) {
    throw ValidationError("coset-shift-failed",
                          "z alpha = " + s.group.format(za) +
                              " does not lie in Nz");
  }
  spec.cert_.coset_shift = true;
  // g^{-1} z (g alpha^k) in Nz for all g.  On the abelian backend the
  // condition is linear in g, so the standard basis generators suffice.
  std::vector<GroupElement> gens;
  if (s.group.is_finite()) {
    for (int i = 0; i < s.group.order(); ++i) gens.push_back(s.group.element(i));
  } else {
    for (int i = 0; i < s.group.rank(); ++i) {
      Col e(s.group.rank(), 0);
      e[i] = 1;
      gens.push_back(GroupElement{0, std::move(e)});
    }
  }
  for (const auto& g : gens) {
    GroupElement gk = endo_apply_power(s.group, s.alpha, k, g);
    GroupElement lhs = s.group.mul(s.group.mul(s.group.inv(g), z), gk);
    if (!subgroup_contains(s.group, n, s.group.mul(lhs, s.group.inv(z)))) {
      throw ValidationError("twist-failed",
                            "violated at g = " + s.group.format(g));
    }
  }
  spec.cert_.twist = true;
  return spec;
}

bool contains(const BrContext& s, const CongruenceSpec& spec,
              const BrElement& x, const BrElement& y) {
  const GroupContext& g = s.group;
  if (spec.kind() == CongruenceKind::IdempotentSeparating) {
    return x.m == y.m && x.n == y.n &&
           subgroup_contains(g, spec.n(), g.mul(x.g, g.inv(y.g)));
  }
  long long diff = (y.n - y.m) - (x.n - x.m);
  GroupElement hn = endo_apply_power(g, s.alpha, x.n, y.g);
  GroupElement gq = endo_apply_power(g, s.alpha, y.n, x.g);
  if (spec.k() == 0) {
    if (diff != 0) return false;
    return subgroup_contains(g, spec.n(), g.mul(hn, g.inv(gq)));
  }
  if (diff % spec.k() != 0) return false;
  long long l = diff / spec.k();
  GroupElement nu =
      g.mul(g.mul(hn, g.inv(gq)), g.inv(g.pow(spec.z(), l)));
  return subgroup_contains(g, spec.n(), nu);
}

std::vector<BrElement> class_members(const BrContext& s,
                                     const CongruenceSpec& spec,
                                     const BrElement& x, long long window,
                                     long long norm_bound) {
  if (window < x.m || window < x.n) {
    throw Error("window " + std::to_string(window) +
                " is smaller than the indices of " + format_br(s, x));
  }
  auto coords = group_candidates(s.group, norm_bound);
  std::vector<BrElement> out;
  for (long long p = 0; p <= window; ++p) {
    for (long long q = 0; q <= window; ++q) {
      for (const auto& h : coords) {
        BrElement cand{p, h, q};
        if (contains(s, spec, x, cand)) out.push_back(cand);
      }
    }
  }
  return out;
}

CongruenceSpec sigma_spec(const BrContext& s) {
  return validate_gc(s, stable_kernel(s.group, s.alpha), s.group.identity(), 0);
}

std::vector<CongruenceSpec> catalog(const BrContext& s, long long kmax,
                                    const std::vector<Subgroup>* subgroup_pool,
                                    long long z_bound) {
  if (kmax < 0) throw Error("kmax must be nonnegative");
  std::vector<Subgroup> pool;
  if (subgroup_pool != nullptr) {
    pool = *subgroup_pool;
  } else if (s.group.is_finite()) {
    pool = enumerate_normal_subgroups(s.group);
  } else {
    throw UnsupportedBackend(
        "catalog on the abelian backend requires an explicit subgroup pool");
  }
  std::sort(pool.begin(), pool.end(), [&](const Subgroup& a, const Subgroup& b) {
    return subgroup_less(s.group, a, b);
  });
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  std::vector<CongruenceSpec> out;
  for (const auto& n : pool) {
    if (is_normal(s.group, n) && is_admissible(s.group, s.alpha, n)) {
      out.push_back(validate_is(s, n));
    }
  }
  for (const auto& n : pool) {
    if (!is_normal(s.group, n) || !is_invariant(s.group, s.alpha, n)) continue;
    for (long long k = 0; k <= kmax; ++k) {
      if (k == 0) {
        // z does not enter the k = 0 class formula, and the canonical z of
        // such a congruence lies in N, so a single representative suffices.
        out.push_back(validate_gc(s, n, s.group.identity(), 0));
        continue;
      }
      // One representative per coset Nz: minimal z in element order.
      std::vector<GroupElement> seen;
      for (const auto& z : group_candidates(s.group, z_bound)) {
        bool covered = false;
        for (const auto& rep : seen) {
          if (subgroup_contains(s.group, n,
                                s.group.mul(z, s.group.inv(rep)))) {
            covered = true;
            break;
          }
        }
        if (covered) continue;
        seen.push_back(z);
        try {
          out.push_back(validate_gc(s, n, z, k));
        } catch (const ValidationError&) {
          // the coset does not yield a congruence for this k
        }
      }
    }
  }
  return out;
}

}  // namespace perfcong
