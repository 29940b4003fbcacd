#ifndef PERFCONG_LATTICE_HPP_
#define PERFCONG_LATTICE_HPP_

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace perfcong {

// All lattice arithmetic is exact.  Matrix powers of an endomorphism grow
// exponentially, so fixed-width integers are out.
using Int = boost::multiprecision::cpp_int;

using Col = std::vector<Int>;        // a column vector
using ColMatrix = std::vector<Col>;  // a matrix as a list of columns
using RowMatrix = std::vector<Col>;  // a square matrix as a list of rows

// Canonical column-style Hermite normal form of the lattice spanned by
// `cols` in Z^rows.  Zero columns are dropped; pivots are positive; entries
// at a pivot row in earlier columns are reduced into [0, pivot).  Two inputs
// span the same lattice iff their canonical forms are identical.
ColMatrix hnf(int rows, ColMatrix cols);

struct HnfDecomposition {
  ColMatrix lattice;            // canonical columns, zero columns dropped
  std::vector<int> pivot_rows;  // pivot row of each lattice column
  ColMatrix column_ops;         // input combination yielding each column
  ColMatrix kernel;             // input combinations yielding zero
};

// As hnf(), but also tracks the unimodular column transformation, split into
// the combinations producing the lattice columns and those producing zero.
HnfDecomposition hnf_decompose(int rows, const ColMatrix& cols);

// Pivot row (first nonzero entry) of each column of a canonical HNF basis.
std::vector<int> hnf_pivot_rows(const ColMatrix& basis);

// Coefficients w with basis * w == target, if any.  `basis` must be in
// canonical HNF.  The zero lattice (empty basis) contains only zero.
std::optional<Col> solve_in_hnf(int rows, const ColMatrix& basis,
                                const std::vector<int>& pivot_rows,
                                const Col& target);

bool lattice_contains(int rows, const ColMatrix& hnf_basis, const Col& a);

// One integer solution u of cols * u == target, over all of Z^|cols|.
std::optional<Col> solve_diophantine(int rows, const ColMatrix& cols,
                                     const Col& target);

RowMatrix mat_identity(int r);
RowMatrix mat_mul(const RowMatrix& a, const RowMatrix& b);
RowMatrix mat_pow(const RowMatrix& a, long long n);
Col mat_apply(const RowMatrix& a, const Col& x);
ColMatrix mat_columns(const RowMatrix& a);

bool is_zero(const Col& v);
Col col_add(const Col& a, const Col& b);
Col col_neg(const Col& a);

}  // namespace perfcong

#endif  // PERFCONG_LATTICE_HPP_
