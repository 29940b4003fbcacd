#include "perfcong/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "perfcong/errors.hpp"

namespace perfcong {

namespace {

Int max_norm(const Col& v) {
  Int m = 0;
  for (const auto& x : v) {
    Int a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace

GroupContext GroupContext::finite_cayley(int order, std::vector<int> table,
                                         int identity) {
  if (order <= 0) throw ValidationError("bad-order", "order must be positive");
  if (order > 256) {
    throw ValidationError("table-too-large",
                          "orders above 256 are not accepted: the table "
                          "cannot be fully verified");
  }
  if (static_cast<int>(table.size()) != order * order) {
    throw ValidationError("bad-table", "table must have order^2 entries");
  }
  if (identity < 0 || identity >= order) {
    throw ValidationError("bad-identity", "identity index out of range");
  }
  auto at = [&](int i, int j) { return table[i * order + j]; };
  for (int v : table) {
    if (v < 0 || v >= order) {
      throw ValidationError("bad-table", "table entry out of range");
    }
  }
  for (int i = 0; i < order; ++i) {
    if (at(identity, i) != i || at(i, identity) != i) {
      throw ValidationError("bad-identity",
                            "identity row/column is not the identity map");
    }
  }
  // Latin square, so inverses exist once the identity appears in every row.
  for (int i = 0; i < order; ++i) {
    std::vector<bool> row(order, false), col(order, false);
    for (int j = 0; j < order; ++j) {
      if (row[at(i, j)] || col[at(j, i)]) {
        throw ValidationError("bad-table", "table is not a Latin square");
      }
      row[at(i, j)] = col[at(j, i)] = true;
    }
  }
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      for (int k = 0; k < order; ++k) {
        if (at(at(i, j), k) != at(i, at(j, k))) {
          throw ValidationError("not-associative",
                                "table fails associativity at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + "," +
                                    std::to_string(k) + ")");
        }
      }
    }
  }
  GroupContext ctx;
  ctx.backend_ = Backend::FiniteCayley;
  ctx.order_ = order;
  ctx.identity_ = identity;
  ctx.table_ = std::move(table);
  ctx.inverse_.assign(order, 0);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      if (ctx.table_at(i, j) == identity && ctx.table_at(j, i) == identity) {
        ctx.inverse_[i] = j;
      }
    }
  }
  return ctx;
}

GroupContext GroupContext::free_abelian(int rank) {
  if (rank <= 0) throw ValidationError("bad-rank", "rank must be positive");
  GroupContext ctx;
  ctx.backend_ = Backend::FreeAbelian;
  ctx.rank_ = rank;
  return ctx;
}

GroupElement GroupContext::identity() const {
  if (is_finite()) return GroupElement{identity_, {}};
  return GroupElement{0, Col(rank_, 0)};
}

GroupElement GroupContext::element(int index) const {
  GroupElement a{index, {}};
  require_valid(a);
  return a;
}

GroupElement GroupContext::element(Col coords) const {
  GroupElement a{0, std::move(coords)};
  require_valid(a);
  return a;
}

void GroupContext::require_valid(const GroupElement& a) const {
  if (is_finite()) {
    if (a.index < 0 || a.index >= order_) {
      throw Error("element index " + std::to_string(a.index) +
                  " out of range for group of order " + std::to_string(order_));
    }
  } else if (static_cast<int>(a.coords.size()) != rank_) {
    throw Error("element vector length does not match rank " +
                std::to_string(rank_));
  }
}

GroupElement GroupContext::mul(const GroupElement& a,
                               const GroupElement& b) const {
  require_valid(a);
  require_valid(b);
  if (is_finite()) return GroupElement{table_at(a.index, b.index), {}};
  return GroupElement{0, col_add(a.coords, b.coords)};
}

GroupElement GroupContext::inv(const GroupElement& a) const {
  require_valid(a);
  if (is_finite()) return GroupElement{inverse_[a.index], {}};
  return GroupElement{0, col_neg(a.coords)};
}

GroupElement GroupContext::pow(const GroupElement& a, long long n) const {
  if (n < 0) return pow(inv(a), -n);
  GroupElement r = identity();
  for (long long i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

bool GroupContext::less(const GroupElement& a, const GroupElement& b) const {
  if (is_finite()) return a.index < b.index;
  Int na = max_norm(a.coords), nb = max_norm(b.coords);
  if (na != nb) return na < nb;
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                      b.coords.begin(), b.coords.end());
}

std::string GroupContext::format(const GroupElement& a) const {
  if (is_finite()) return std::to_string(a.index);
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < a.coords.size(); ++i) {
    if (i) os << " ";
    os << a.coords[i];
  }
  os << "]";
  return os.str();
}

Endo make_endo_finite(const GroupContext& ctx, std::vector<int> image) {
  if (!ctx.is_finite()) {
    throw UnsupportedBackend("image-table endomorphism on abelian backend");
  }
  if (static_cast<int>(image.size()) != ctx.order()) {
    throw ValidationError("bad-endo", "image table must have one entry per "
                                      "group element");
  }
  for (int v : image) {
    if (v < 0 || v >= ctx.order()) {
      throw ValidationError("bad-endo", "image index out of range");
    }
  }
  for (int g = 0; g < ctx.order(); ++g) {
    for (int h = 0; h < ctx.order(); ++h) {
      if (image[ctx.table_at(g, h)] != ctx.table_at(image[g], image[h])) {
        throw ValidationError("not-a-homomorphism",
                              "image table violates (gh)a = (ga)(ha) at g=" +
                                  std::to_string(g) + ", h=" +
                                  std::to_string(h));
      }
    }
  }
  return Endo{std::move(image), {}};
}

Endo make_endo_abelian(const GroupContext& ctx, RowMatrix matrix) {
  if (ctx.is_finite()) {
    throw UnsupportedBackend("matrix endomorphism on finite backend");
  }
  if (static_cast<int>(matrix.size()) != ctx.rank()) {
    throw ValidationError("bad-endo", "matrix must be rank x rank");
  }
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != ctx.rank()) {
      throw ValidationError("bad-endo", "matrix must be rank x rank");
    }
  }
  return Endo{{}, std::move(matrix)};
}

Endo identity_endo(const GroupContext& ctx) {
  if (ctx.is_finite()) {
    std::vector<int> image(ctx.order());
    std::iota(image.begin(), image.end(), 0);
    return Endo{std::move(image), {}};
  }
  return Endo{{}, mat_identity(ctx.rank())};
}

GroupElement endo_apply(const GroupContext& ctx, const Endo& alpha,
                        const GroupElement& a) {
  ctx.require_valid(a);
  if (ctx.is_finite()) return GroupElement{alpha.image[a.index], {}};
  return GroupElement{0, mat_apply(alpha.matrix, a.coords)};
}

GroupElement endo_apply_power(const GroupContext& ctx, const Endo& alpha,
                              long long n, const GroupElement& a) {
  GroupElement r = a;
  for (long long i = 0; i < n; ++i) r = endo_apply(ctx, alpha, r);
  return r;
}

std::vector<int> Subgroup::members() const {
  std::vector<int> out;
  for (size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

Subgroup subgroup_from_elements(const GroupContext& ctx,
                                const std::vector<int>& indices) {
  if (!ctx.is_finite()) {
    throw UnsupportedBackend("element-list subgroup on abelian backend");
  }
  Subgroup h;
  h.mask.assign(ctx.order(), 0);
  for (int i : indices) {
    ctx.require_valid(GroupElement{i, {}});
    h.mask[i] = 1;
  }
  if (!h.mask[ctx.identity().index]) {
    throw ValidationError("not-a-subgroup", "missing identity");
  }
  for (int a : h.members()) {
    if (!h.mask[ctx.inv(ctx.element(a)).index]) {
      throw ValidationError("not-a-subgroup",
                            "not closed under inverse at " + std::to_string(a));
    }
    for (int b : h.members()) {
      if (!h.mask[ctx.table_at(a, b)]) {
        throw ValidationError("not-a-subgroup",
                              "not closed under product at (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  ")");
      }
    }
  }
  return h;
}

Subgroup subgroup_from_basis(const GroupContext& ctx, ColMatrix cols) {
  if (ctx.is_finite()) {
    throw UnsupportedBackend("lattice subgroup on finite backend");
  }
  for (const auto& c : cols) {
    if (static_cast<int>(c.size()) != ctx.rank()) {
      throw ValidationError("bad-basis", "basis column length must equal rank");
    }
  }
  Subgroup h;
  h.basis = hnf(ctx.rank(), std::move(cols));
  return h;
}

Subgroup trivial_subgroup(const GroupContext& ctx) {
  if (ctx.is_finite()) return subgroup_from_elements(ctx, {ctx.identity().index});
  return Subgroup{{}, {}};
}

Subgroup full_subgroup(const GroupContext& ctx) {
  if (ctx.is_finite()) {
    std::vector<int> all(ctx.order());
    std::iota(all.begin(), all.end(), 0);
    return subgroup_from_elements(ctx, all);
  }
  return Subgroup{{}, mat_columns(mat_identity(ctx.rank()))};
}

bool subgroup_contains(const GroupContext& ctx, const Subgroup& h,
                       const GroupElement& a) {
  ctx.require_valid(a);
  if (ctx.is_finite()) return h.mask[a.index] != 0;
  return lattice_contains(ctx.rank(), h.basis, a.coords);
}

bool is_normal(const GroupContext& ctx, const Subgroup& h) {
  if (!ctx.is_finite()) return true;
  for (int g = 0; g < ctx.order(); ++g) {
    auto ge = ctx.element(g);
    auto gi = ctx.inv(ge);
    for (int m : h.members()) {
      if (!h.mask[ctx.mul(ctx.mul(gi, ctx.element(m)), ge).index]) {
        return false;
      }
    }
  }
  return true;
}

bool is_admissible(const GroupContext& ctx, const Endo& alpha,
                   const Subgroup& h) {
  if (ctx.is_finite()) {
    for (int m : h.members()) {
      if (!h.mask[alpha.image[m]]) return false;
    }
    return true;
  }
  for (const auto& c : h.basis) {
    if (!lattice_contains(ctx.rank(), h.basis, mat_apply(alpha.matrix, c))) {
      return false;
    }
  }
  return true;
}

Subgroup preimage_subgroup(const GroupContext& ctx, const Endo& alpha,
                           const Subgroup& h) {
  if (ctx.is_finite()) {
    std::vector<int> pre;
    for (int g = 0; g < ctx.order(); ++g) {
      if (h.mask[alpha.image[g]]) pre.push_back(g);
    }
    return subgroup_from_elements(ctx, pre);
  }
  // {x : Ax in L(H)} is the projection of the integer kernel of [A | H].
  ColMatrix combined = mat_columns(alpha.matrix);
  combined.insert(combined.end(), h.basis.begin(), h.basis.end());
  auto d = hnf_decompose(ctx.rank(), combined);
  ColMatrix generators;
  for (const auto& k : d.kernel) {
    generators.emplace_back(k.begin(), k.begin() + ctx.rank());
  }
  return subgroup_from_basis(ctx, std::move(generators));
}

Subgroup image_subgroup(const GroupContext& ctx, const Endo& alpha,
                        const Subgroup& h) {
  if (ctx.is_finite()) {
    std::set<int> img;
    for (int m : h.members()) img.insert(alpha.image[m]);
    return subgroup_from_elements(ctx, {img.begin(), img.end()});
  }
  ColMatrix cols;
  for (const auto& c : h.basis) cols.push_back(mat_apply(alpha.matrix, c));
  return subgroup_from_basis(ctx, std::move(cols));
}

bool is_invariant(const GroupContext& ctx, const Endo& alpha,
                  const Subgroup& h) {
  return preimage_subgroup(ctx, alpha, h) == h;
}

bool subgroup_less(const GroupContext& ctx, const Subgroup& a,
                   const Subgroup& b) {
  if (ctx.is_finite()) {
    auto ma = a.members(), mb = b.members();
    if (ma.size() != mb.size()) return ma.size() < mb.size();
    return a.mask > b.mask;  // lexicographic bit-set, identity-first
  }
  if (a.basis.size() != b.basis.size()) return a.basis.size() < b.basis.size();
  return a.basis < b.basis;
}

std::vector<Subgroup> enumerate_normal_subgroups(const GroupContext& ctx) {
  if (!ctx.is_finite()) {
    throw UnsupportedBackend(
        "normal subgroup enumeration requires the finite backend");
  }
  auto normal_closure = [&](std::vector<std::uint8_t> mask) {
    // Close under product, inverse and conjugation.
    bool changed = true;
    while (changed) {
      changed = false;
      auto grow = [&](int idx) {
        if (!mask[idx]) {
          mask[idx] = 1;
          changed = true;
        }
      };
      for (int a = 0; a < ctx.order(); ++a) {
        if (!mask[a]) continue;
        grow(ctx.inv(ctx.element(a)).index);
        for (int b = 0; b < ctx.order(); ++b) {
          if (mask[b]) grow(ctx.table_at(a, b));
        }
        for (int g = 0; g < ctx.order(); ++g) {
          auto ge = ctx.element(g);
          grow(ctx.mul(ctx.mul(ctx.inv(ge), ctx.element(a)), ge).index);
        }
      }
    }
    return mask;
  };

  std::set<std::vector<std::uint8_t>> seen;
  std::vector<std::vector<std::uint8_t>> queue;
  std::vector<std::uint8_t> triv(ctx.order(), 0);
  triv[ctx.identity().index] = 1;
  seen.insert(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    auto n = queue.back();
    queue.pop_back();
    for (int g = 0; g < ctx.order(); ++g) {
      if (n[g]) continue;
      auto bigger = n;
      bigger[g] = 1;
      auto closed = normal_closure(std::move(bigger));
      if (seen.insert(closed).second) queue.push_back(closed);
    }
  }
  std::vector<Subgroup> out;
  for (const auto& mask : seen) out.push_back(Subgroup{mask, {}});
  std::sort(out.begin(), out.end(), [&](const Subgroup& a, const Subgroup& b) {
    return subgroup_less(ctx, a, b);
  });
  return out;
}

Subgroup stable_kernel(const GroupContext& ctx, const Endo& alpha) {
  Subgroup k = trivial_subgroup(ctx);
  int limit = ctx.is_finite() ? ctx.order() + 1 : 4 * ctx.rank() + 4;
  for (int step = 0; step < limit; ++step) {
    Subgroup next = preimage_subgroup(ctx, alpha, k);
    if (next == k) return k;
    k = std::move(next);
  }
  throw InternalInconsistency("kernel chain failed to stabilize");
}

std::string format_subgroup(const GroupContext& ctx, const Subgroup& h) {
  std::ostringstream os;
  if (ctx.is_finite()) {
    os << "{";
    bool first = true;
    for (int m : h.members()) {
      if (!first) os << ",";
      os << m;
      first = false;
    }
    os << "}";
  } else {
    os << "span{";
    for (size_t j = 0; j < h.basis.size(); ++j) {
      if (j) os << ",";
      os << ctx.format(GroupElement{0, h.basis[j]});
    }
    os << "}";
  }
  return os.str();
}

std::vector<Col> vectors_of_norm(int rank, long long norm) {
  std::vector<Col> out;
  if (norm == 0) {
    out.emplace_back(rank, 0);
    return out;
  }
  Col v(rank, -norm);
  for (;;) {
    if (max_norm(v) == norm) out.push_back(v);
    int i = rank - 1;
    while (i >= 0 && v[i] == norm) {
      v[i] = -norm;
      --i;
    }
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

std::vector<Col> vectors_up_to_norm(int rank, long long bound) {
  std::vector<Col> out;
  for (long long s = 0; s <= bound; ++s) {
    auto layer = vectors_of_norm(rank, s);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace perfcong
