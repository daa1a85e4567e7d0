#include "scd/matrix.hpp"

#include <sstream>

namespace scd {

UTMatrix::UTMatrix(FieldPtr field, int size) : field_(std::move(field)), size_(size), e_(size * size, 0) {
  if (size < 0) throw Error(ErrorKind::malformed_input, "negative matrix size");
}

UTMatrix UTMatrix::identity(FieldPtr field, int size) {
  UTMatrix m(std::move(field), size);
  for (int k = 0; k < size; ++k) m.set(k, k, 1);
  return m;
}

void UTMatrix::require_same(const UTMatrix& o) const {
  if (size_ != o.size_) throw Error(ErrorKind::context_mismatch, "matrix sizes differ");
  if (!field_->same_as(*o.field_)) throw Error(ErrorKind::field_mismatch, "matrices over different fields");
}

UTMatrix UTMatrix::operator*(const UTMatrix& o) const {
  require_same(o);
  const Field& f = *field_;
  UTMatrix r(field_, size_);
  for (int i = 0; i < size_; ++i)
    for (int k = 0; k < size_; ++k) {
      const Code a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < size_; ++j) {
        const Code b = o(k, j);
        if (b != 0) r.e_[i * size_ + j] = f.add(r.e_[i * size_ + j], f.mul(a, b));
      }
    }
  return r;
}

UTMatrix UTMatrix::operator+(const UTMatrix& o) const {
  require_same(o);
  UTMatrix r(field_, size_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_->add(e_[k], o.e_[k]);
  return r;
}

UTMatrix UTMatrix::operator-(const UTMatrix& o) const {
  require_same(o);
  UTMatrix r(field_, size_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_->sub(e_[k], o.e_[k]);
  return r;
}

UTMatrix UTMatrix::transposed() const {
  UTMatrix r(field_, size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) r.set(j, i, (*this)(i, j));
  return r;
}

UTMatrix UTMatrix::flipped() const {
  UTMatrix r(field_, size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) r.set(i, j, (*this)(size_ - 1 - i, size_ - 1 - j));
  return r;
}

UTMatrix UTMatrix::negated() const {
  UTMatrix r(field_, size_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_->neg(e_[k]);
  return r;
}

UTMatrix UTMatrix::unitriangular_inverse() const {
  if (!membership(*this, MatrixSet::group_A))
    throw Error(ErrorKind::membership, "matrix is not upper unitriangular");
  const Field& f = *field_;
  // Solve M X = I column by column, bottom row first.
  UTMatrix x(field_, size_);
  for (int c = 0; c < size_; ++c) {
    for (int i = size_ - 1; i >= 0; --i) {
      Code v = i == c ? 1 : 0;
      for (int k = i + 1; k < size_; ++k) v = f.sub(v, f.mul((*this)(i, k), x(k, c)));
      x.set(i, c, v);
    }
  }
  return x;
}

UTMatrix UTMatrix::block(int r0, int c0, int size) const {
  UTMatrix b(field_, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) b.set(i, j, (*this)(r0 + i, c0 + j));
  return b;
}

void UTMatrix::put_block(int r0, int c0, const UTMatrix& b) {
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j) set(r0 + i, c0 + j, b(i, j));
}

void UTMatrix::add_row_multiple(int i, int k, Code c) {
  if (c == 0) return;
  const Field& f = *field_;
  for (int j = 0; j < size_; ++j) {
    const Code v = e_[k * size_ + j];
    if (v != 0) e_[i * size_ + j] = f.add(e_[i * size_ + j], f.mul(c, v));
  }
}

void UTMatrix::add_col_multiple(int j, int k, Code c) {
  if (c == 0) return;
  const Field& f = *field_;
  for (int i = 0; i < size_; ++i) {
    const Code v = e_[i * size_ + k];
    if (v != 0) e_[i * size_ + j] = f.add(e_[i * size_ + j], f.mul(c, v));
  }
}

bool UTMatrix::is_zero() const {
  for (Code v : e_)
    if (v != 0) return false;
  return true;
}

bool UTMatrix::is_arc_form() const {
  std::vector<char> row(size_, 0), col(size_, 0);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) {
      if ((*this)(i, j) == 0) continue;
      if (row[i]++ || col[j]++) return false;
    }
  return true;
}

std::string UTMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) out << (j ? " " : "") << int((*this)(i, j));
    out << "\n";
  }
  return out.str();
}

namespace {

bool strictly_upper(const UTMatrix& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j <= i; ++j)
      if (m(i, j) != 0) return false;
  return true;
}

bool unitriangular(const UTMatrix& m) {
  for (int i = 0; i < m.size(); ++i) {
    if (m(i, i) != 1) return false;
    for (int j = 0; j < i; ++j)
      if (m(i, j) != 0) return false;
  }
  return true;
}

// JQ^tJ = -Q
bool antisymmetric_about_antidiagonal(const UTMatrix& q) { return q.transposed().flipped() == q.negated(); }

}  // namespace

bool membership(const UTMatrix& m, MatrixSet which) {
  switch (which) {
    case MatrixSet::group_A: return unitriangular(m);
    case MatrixSet::algebra_A: return strictly_upper(m);
    case MatrixSet::group_D: {
      if (m.size() % 2 != 0 || !unitriangular(m)) return false;
      const int n = m.size() / 2;
      const UTMatrix p = m.block(0, 0, n);
      const UTMatrix p_inv = p.unitriangular_inverse();
      if (!(m.block(n, n, n) == p_inv.transposed().flipped())) return false;
      return antisymmetric_about_antidiagonal(p_inv * m.block(0, n, n));
    }
    case MatrixSet::algebra_D: {
      if (m.size() % 2 != 0 || !strictly_upper(m)) return false;
      const int n = m.size() / 2;
      const UTMatrix r = m.block(0, 0, n);
      if (!(m.block(n, n, n) == r.transposed().flipped().negated())) return false;
      return antisymmetric_about_antidiagonal(m.block(0, n, n));
    }
  }
  return false;
}

UTMatrix y_of_partition(const LabelledPartition& lambda) {
  const SignedOrder ord = lambda.order();
  UTMatrix y(lambda.field(), ord.size());
  for (const Arc& a : lambda.arcs()) y.set(ord, a.i, a.j, a.label);
  return y;
}

UTMatrix y_to_x(const UTMatrix& y) {
  if (y.size() % 2 != 0) throw Error(ErrorKind::membership, "block form needs an even size");
  const int n = y.size() / 2;
  const UTMatrix p = UTMatrix::identity(y.field(), n) + y.block(0, 0, n);
  const UTMatrix q = y.block(0, n, n);
  UTMatrix x(y.field(), y.size());
  x.put_block(0, 0, p);
  x.put_block(0, n, p * q);
  x.put_block(n, n, p.unitriangular_inverse().transposed().flipped());
  return x;
}

UTMatrix x_of_partition(const LabelledPartition& lambda) {
  if (lambda.family() == Family::B)
    throw Error(ErrorKind::unsupported_family, "x_lambda is defined for families D and C");
  return y_to_x(y_of_partition(lambda));
}

UTMatrix x_to_y(const UTMatrix& x) {
  if (!membership(x, MatrixSet::group_D)) throw Error(ErrorKind::membership, "matrix is not in U^D");
  const int n = x.size() / 2;
  const UTMatrix p = x.block(0, 0, n);
  const UTMatrix r = p - UTMatrix::identity(x.field(), n);
  const UTMatrix q = p.unitriangular_inverse() * x.block(0, n, n);
  UTMatrix y(x.field(), x.size());
  y.put_block(0, 0, r);
  y.put_block(0, n, q);
  y.put_block(n, n, r.transposed().flipped().negated());
  return y;
}

UTMatrix verge_reduce(const UTMatrix& m) {
  if (!strictly_upper(m)) throw Error(ErrorKind::membership, "verge reduction needs a strictly upper triangular matrix");
  const Field& f = *m.field();
  const int s = m.size();
  UTMatrix w = m;
  std::vector<char> pivot_row(s, 0);
  for (int j = 0; j < s; ++j) {
    int i = -1;
    for (int r = j - 1; r >= 0; --r)
      if (!pivot_row[r] && w(r, j) != 0) {
        i = r;
        break;
      }
    if (i < 0) continue;
    const Code neg_inv = f.neg(f.inv(w(i, j)));
    // Clear the column above the pivot with rows from below (left action).
    for (int r = 0; r < i; ++r)
      if (w(r, j) != 0) w.add_row_multiple(r, i, f.mul(w(r, j), neg_inv));
    // Clear the row right of the pivot with columns from the left (right action).
    for (int c = j + 1; c < s; ++c)
      if (w(i, c) != 0) w.add_col_multiple(c, j, f.mul(w(i, c), neg_inv));
    pivot_row[i] = 1;
  }
  return w;
}

LabelledPartition partition_of(const UTMatrix& arc_form, Family family, int n) {
  const SignedOrder ord(family, n);
  if (arc_form.size() != ord.size()) throw Error(ErrorKind::context_mismatch, "matrix size does not match 2n");
  std::vector<Arc> arcs;
  for (int r = 0; r < arc_form.size(); ++r)
    for (int c = 0; c < arc_form.size(); ++c)
      if (arc_form(r, c) != 0) arcs.push_back(Arc{ord.value_at(r + 1), ord.value_at(c + 1), arc_form(r, c)});
  return LabelledPartition::validate(family, n, arc_form.field(), std::move(arcs)).value();
}

UTMatrix elementary(const FieldPtr& field, int size, int i, int j, Code t) {
  if (!(0 <= i && i < j && j < size)) throw Error(ErrorKind::malformed_input, "elementary matrix needs i < j");
  UTMatrix m = UTMatrix::identity(field, size);
  m.set(i, j, t);
  return m;
}

}  // namespace scd
