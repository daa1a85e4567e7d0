#pragma once

#include <span>
#include <string>
#include <vector>

#include "scd/ffield.hpp"
#include "scd/partition.hpp"

namespace scd {

/// Square matrix over F_q, stored dense and row-major as field codes. Rows and
/// columns are addressed by 0-based position; signed-index access goes through
/// a SignedOrder. Used for U^D, u^D, U_m and u_m alike.
class UTMatrix {
 public:
  UTMatrix(FieldPtr field, int size);

  static UTMatrix identity(FieldPtr field, int size);

  int size() const { return size_; }
  const FieldPtr& field() const { return field_; }

  Code operator()(int r, int c) const { return e_[r * size_ + c]; }
  void set(int r, int c, Code v) { e_[r * size_ + c] = v; }
  Code at(const SignedOrder& ord, int i, int j) const { return (*this)(ord.pos(i) - 1, ord.pos(j) - 1); }
  void set(const SignedOrder& ord, int i, int j, Code v) { set(ord.pos(i) - 1, ord.pos(j) - 1, v); }

  std::span<const Code> entries() const { return e_; }

  UTMatrix operator*(const UTMatrix& o) const;
  UTMatrix operator+(const UTMatrix& o) const;
  UTMatrix operator-(const UTMatrix& o) const;
  UTMatrix transposed() const;
  /// J M J for the anti-diagonal J: entry (a, b) becomes M(s-1-a, s-1-b).
  UTMatrix flipped() const;
  UTMatrix negated() const;
  /// Inverse of an upper unitriangular matrix by back substitution.
  UTMatrix unitriangular_inverse() const;

  /// size x size block starting at (r0, c0).
  UTMatrix block(int r0, int c0, int size) const;
  void put_block(int r0, int c0, const UTMatrix& b);

  /// Row i += c * row k.
  void add_row_multiple(int i, int k, Code c);
  /// Column j += c * column k.
  void add_col_multiple(int j, int k, Code c);

  bool is_zero() const;
  /// At most one nonzero entry in every row and every column.
  bool is_arc_form() const;

  std::string to_string() const;

  friend bool operator==(const UTMatrix& a, const UTMatrix& b) {
    return a.size_ == b.size_ && a.e_ == b.e_ && a.field_->same_as(*b.field_);
  }

 private:
  void require_same(const UTMatrix& o) const;

  FieldPtr field_;
  int size_;
  std::vector<Code> e_;
};

enum class MatrixSet { group_D, algebra_D, group_A, algebra_A };

/// Exact block-condition membership test. The D sets need an even size.
bool membership(const UTMatrix& m, MatrixSet which);

/// y_lambda: the sum of a e_{i,j} over the full arc set.
UTMatrix y_of_partition(const LabelledPartition& lambda);

/// x_lambda = (P | PQ / 0 | J P^{-t} J) with P = I + R built from the blocks
/// (R | Q / 0 | -J R^t J) of y_lambda. Families D and C.
UTMatrix x_of_partition(const LabelledPartition& lambda);

/// The partner y = (P - I | Q / 0 | -J (P-I)^t J) of x in U^D, Q = P^{-1} (top-right).
/// Throws membership if x is not in U^D.
UTMatrix x_to_y(const UTMatrix& x);

/// Inverse direction for any (P, Q) block data: y -> x.
UTMatrix y_to_x(const UTMatrix& y);

/// Canonical representative of the two-sided orbit U m U of a strictly upper
/// triangular m: at most one nonzero per row and column, labels untouched.
UTMatrix verge_reduce(const UTMatrix& m);

/// Reads an arc-form matrix back as a partition of (family, n); the matrix must
/// have size 2n (2n+1 for B). Throws invalid_partition if the arcs fail validation.
LabelledPartition partition_of(const UTMatrix& arc_form, Family family, int n);

/// The elementary unitriangular matrix I + t e_{i,j} (positions, i < j).
UTMatrix elementary(const FieldPtr& field, int size, int i, int j, Code t);

}  // namespace scd
