#include "perfcong/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "perfcong/errors.hpp"

namespace perfcong {

bool is_zero(const Col& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Col col_add(const Col& a, const Col& b) {
  Col r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Col col_neg(const Col& a) {
  Col r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

namespace {

void axpy(Col& dst, const Int& q, const Col& src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
}

void negate(Col& c) {
  for (auto& x : c) x = -x;
}

// Floor division, used to reduce entries into [0, pivot).
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct HnfState {
  int rows;
  ColMatrix cols;
  ColMatrix ops;  // mirrored column transformation, empty if untracked

  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    std::swap(cols[i], cols[j]);
    if (!ops.empty()) std::swap(ops[i], ops[j]);
  }
  void reduce(size_t dst, const Int& q, size_t src) {
    if (q == 0) return;
    axpy(cols[dst], q, cols[src]);
    if (!ops.empty()) axpy(ops[dst], q, ops[src]);
  }
  void negate_col(size_t j) {
    negate(cols[j]);
    if (!ops.empty()) negate(ops[j]);
  }

  // Returns pivot rows of the resulting canonical columns; on exit the first
  // `pivot_rows.size()` columns are the canonical basis, the rest are zero.
  std::vector<int> run() {
    std::vector<int> pivots;
    size_t j = 0;  // next pivot column
    for (int row = 0; row < rows && j < cols.size(); ++row) {
      // Gcd-eliminate entries at `row` among columns j..end.
      for (;;) {
        size_t best = cols.size();
        for (size_t c = j; c < cols.size(); ++c) {
          if (cols[c][row] == 0) continue;
          if (best == cols.size() ||
              abs(cols[c][row]) < abs(cols[best][row])) {
            best = c;
          }
        }
        if (best == cols.size()) break;  // whole row is zero
        swap_cols(j, best);
        bool clean = true;
        for (size_t c = j + 1; c < cols.size(); ++c) {
          if (cols[c][row] == 0) continue;
          Int q = cols[c][row] / cols[j][row];
          reduce(c, q, j);
          if (cols[c][row] != 0) clean = false;
        }
        if (clean) break;
      }
      if (cols[j][row] == 0) continue;
      if (cols[j][row] < 0) negate_col(j);
      // Reduce earlier columns at the pivot row into [0, pivot).
      for (size_t c = 0; c < j; ++c) {
        reduce(c, fdiv(cols[c][row], cols[j][row]), j);
      }
      pivots.push_back(row);
      ++j;
    }
    return pivots;
  }
};

}  // namespace

ColMatrix hnf(int rows, ColMatrix cols) {
  HnfState st{rows, std::move(cols), {}};
  auto pivots = st.run();
  st.cols.resize(pivots.size());
  return std::move(st.cols);
}

HnfDecomposition hnf_decompose(int rows, const ColMatrix& cols) {
  HnfState st{rows, cols, {}};
  st.ops.resize(cols.size());
  for (size_t i = 0; i < cols.size(); ++i) {
    st.ops[i].assign(cols.size(), 0);
    st.ops[i][i] = 1;
  }
  HnfDecomposition d;
  d.pivot_rows = st.run();
  size_t k = d.pivot_rows.size();
  d.lattice.assign(st.cols.begin(), st.cols.begin() + k);
  d.column_ops.assign(st.ops.begin(), st.ops.begin() + k);
  d.kernel.assign(st.ops.begin() + k, st.ops.end());
  return d;
}

std::vector<int> hnf_pivot_rows(const ColMatrix& basis) {
  std::vector<int> pivots;
  pivots.reserve(basis.size());
  for (const auto& c : basis) {
    int p = 0;
    while (p < static_cast<int>(c.size()) && c[p] == 0) ++p;
    pivots.push_back(p);
  }
  return pivots;
}

std::optional<Col> solve_in_hnf(int rows, const ColMatrix& basis,
                                const std::vector<int>& pivot_rows,
                                const Col& target) {
  Col residual = target;
  Col w(basis.size(), 0);
  for (size_t j = 0; j < basis.size(); ++j) {
    const Int& pivot = basis[j][pivot_rows[j]];
    const Int& r = residual[pivot_rows[j]];
    if (r % pivot != 0) return std::nullopt;
    w[j] = r / pivot;
    if (w[j] != 0) axpy(residual, w[j], basis[j]);
  }
  (void)rows;
  if (!is_zero(residual)) return std::nullopt;
  return w;
}

bool lattice_contains(int rows, const ColMatrix& hnf_basis, const Col& a) {
  return solve_in_hnf(rows, hnf_basis, hnf_pivot_rows(hnf_basis), a)
      .has_value();
}

std::optional<Col> solve_diophantine(int rows, const ColMatrix& cols,
                                     const Col& target) {
  auto d = hnf_decompose(rows, cols);
  auto w = solve_in_hnf(rows, d.lattice, d.pivot_rows, target);
  if (!w) return std::nullopt;
  Col u(cols.size(), 0);
  for (size_t j = 0; j < d.lattice.size(); ++j) {
    if ((*w)[j] == 0) continue;
    for (size_t i = 0; i < u.size(); ++i) u[i] += (*w)[j] * d.column_ops[j][i];
  }
  return u;
}

RowMatrix mat_identity(int r) {
  RowMatrix a(r, Col(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 1;
  return a;
}

RowMatrix mat_mul(const RowMatrix& a, const RowMatrix& b) {
  size_t r = a.size();
  RowMatrix c(r, Col(r, 0));
  for (size_t i = 0; i < r; ++i) {
    for (size_t k = 0; k < r; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

RowMatrix mat_pow(const RowMatrix& a, long long n) {
  RowMatrix result = mat_identity(static_cast<int>(a.size()));
  RowMatrix base = a;
  while (n > 0) {
    if (n & 1) result = mat_mul(result, base);
    base = mat_mul(base, base);
    n >>= 1;
  }
  return result;
}

Col mat_apply(const RowMatrix& a, const Col& x) {
  Col y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

ColMatrix mat_columns(const RowMatrix& a) {
  size_t r = a.size();
  ColMatrix cols(r, Col(r, 0));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) cols[j][i] = a[i][j];
  }
  return cols;
}

}  // namespace perfcong
