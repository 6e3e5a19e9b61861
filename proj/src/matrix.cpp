#include "chu/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace chu {

namespace {

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw std::invalid_argument("field mismatch");
}

}  // namespace

Matrix::Matrix(FieldSpec f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
}

Matrix Matrix::identity(FieldSpec f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(FieldSpec f, const std::vector<Vec>& rows, int cols) {
  int c = cols;
  if (c < 0) {
    if (rows.empty())
      throw std::invalid_argument("from_rows: column count needed for empty row list");
    c = static_cast<int>(rows.front().size());
  }
  Matrix m(f, static_cast<int>(rows.size()), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.set(static_cast<int>(i), j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::row_vector(FieldSpec f, const Vec& v) {
  return from_rows(f, {v}, static_cast<int>(v.size()));
}

Matrix Matrix::col_vector(FieldSpec f, const Vec& v) {
  Matrix m(f, static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m.set(static_cast<int>(i), 0, v[i]);
  return m;
}

Vec Matrix::row(int r) const {
  Vec out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
  return out;
}

Vec Matrix::col(int c) const {
  Vec out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      i64 a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        i64 cur = out(i, j);
        out.set(i, j, cur + a * rhs(k, j));
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, (*this)(i, j) + rhs(i, j));
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  return *this + rhs.scaled(field_.p - 1);
}

Matrix Matrix::scaled(i64 s) const {
  Matrix out(field_, rows_, cols_);
  i64 r = field_.reduce(s);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, (*this)(i, j) * r);
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("apply: dimension mismatch");
  Vec out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    i64 acc = 0;
    for (int j = 0; j < cols_; ++j) acc = (acc + (*this)(i, j) * field_.reduce(v[j])) % field_.p;
    out[i] = acc;
  }
  return out;
}

Vec Matrix::apply_row(const Vec& v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw std::invalid_argument("apply_row: dimension mismatch");
  Vec out(cols_, 0);
  for (int j = 0; j < cols_; ++j) {
    i64 acc = 0;
    for (int i = 0; i < rows_; ++i) acc = (acc + field_.reduce(v[i]) * (*this)(i, j)) % field_.p;
    out[j] = acc;
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (rows_ != rhs.rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix out(field_, rows_, cols_ + rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.set(i, j, (*this)(i, j));
    for (int j = 0; j < rhs.cols_; ++j) out.set(i, cols_ + j, rhs(i, j));
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (cols_ != rhs.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix out(field_, rows_ + rhs.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, (*this)(i, j));
  for (int i = 0; i < rhs.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(rows_ + i, j, rhs(i, j));
  return out;
}

Matrix Matrix::select_cols(const std::vector<int>& cols) const {
  Matrix out(field_, rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols.size(); ++j) out.set(i, static_cast<int>(j), (*this)(i, cols[j]));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](i64 v) { return v == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

Matrix rref(const Matrix& m) {
  const FieldSpec& f = m.field();
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

  int pivot_row = 0;
  for (int col = 0; col < m.cols() && pivot_row < static_cast<int>(rows.size()); ++col) {
    int sel = -1;
    for (int i = pivot_row; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] != 0) { sel = i; break; }
    }
    if (sel < 0) continue;
    std::swap(rows[pivot_row], rows[sel]);
    i64 inv = f.inv(rows[pivot_row][col]);
    for (int j = 0; j < m.cols(); ++j) rows[pivot_row][j] = f.mul(rows[pivot_row][j], inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == pivot_row || rows[i][col] == 0) continue;
      i64 factor = rows[i][col];
      for (int j = 0; j < m.cols(); ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[pivot_row][j]));
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return Matrix::from_rows(f, rows, m.cols());
}

int rank(const Matrix& m) { return rref(m).rows(); }

std::vector<int> pivot_columns(const Matrix& r) {
  std::vector<int> piv;
  piv.reserve(r.rows());
  for (int i = 0; i < r.rows(); ++i) {
    int j = 0;
    while (j < r.cols() && r(i, j) == 0) ++j;
    if (j == r.cols()) throw std::invalid_argument("pivot_columns: zero row in rref input");
    piv.push_back(j);
  }
  return piv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("solve: dimension mismatch");
  auto x = solve_matrix(m, Matrix::col_vector(m.field(), b));
  if (!x) return std::nullopt;
  return x->col(0);
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_matrix: row mismatch");
  Matrix aug = rref(a.hstack(b));
  int n = a.cols();
  Matrix x(a.field(), n, b.cols());
  for (int i = 0; i < aug.rows(); ++i) {
    int j = 0;
    while (j < aug.cols() && aug(i, j) == 0) ++j;
    if (j >= n) return std::nullopt;  // pivot in the augmented block: inconsistent
    for (int k = 0; k < b.cols(); ++k) x.set(j, k, aug(i, n + k));
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve_matrix(m, Matrix::identity(m.field(), m.rows()));
  if (!x) return std::nullopt;
  if (!((m * *x).is_identity() && (*x * m).is_identity())) return std::nullopt;
  return x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      i64 s = a(ia, ja);
      if (s == 0) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          out.set(ia * b.rows() + ib, ja * b.cols() + jb, s * b(ib, jb));
    }
  return out;
}

Subspace::Subspace(FieldSpec f, int ambient_dim)
    : field_(f), ambient_(ambient_dim), basis_(f, 0, ambient_dim) {}

Subspace Subspace::from_generators(FieldSpec f, int ambient_dim,
                                   const std::vector<Vec>& gens) {
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != ambient_dim)
      throw std::invalid_argument("generator length mismatch");
  Subspace s(f, ambient_dim);
  s.basis_ = rref(Matrix::from_rows(f, gens, ambient_dim));
  return s;
}

Subspace Subspace::from_matrix_rows(const Matrix& m) {
  Subspace s(m.field(), m.cols());
  s.basis_ = rref(m);
  return s;
}

Subspace Subspace::full(FieldSpec f, int ambient_dim) {
  return from_matrix_rows(Matrix::identity(f, ambient_dim));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("coordinates: ambient mismatch");
  // rref basis: candidate coefficients are just the entries at pivot columns.
  std::vector<int> piv = basis_.rows() ? pivot_columns(basis_) : std::vector<int>{};
  Vec c(basis_.rows(), 0);
  for (int i = 0; i < basis_.rows(); ++i) c[i] = field_.reduce(v[piv[i]]);
  // verify
  for (int j = 0; j < ambient_; ++j) {
    i64 acc = 0;
    for (int i = 0; i < basis_.rows(); ++i) acc = (acc + c[i] * basis_(i, j)) % field_.p;
    if (acc != field_.reduce(v[j])) return std::nullopt;
  }
  return c;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::meet(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  // kernel of the stacked quotient maps is exactly the intersection
  Matrix q1 = quotient_map(ambient_, *this);
  Matrix q2 = quotient_map(ambient_, other);
  return kernel(q1.vstack(q2));
}

Subspace Subspace::join(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  return from_matrix_rows(basis_.vstack(other.basis_));
}

Subspace kernel(const Matrix& m) {
  Matrix r = rref(m);
  std::vector<int> piv = r.rows() ? pivot_columns(r) : std::vector<int>{};
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : piv) is_piv[p] = true;
  std::vector<Vec> gens;
  for (int fcol = 0; fcol < m.cols(); ++fcol) {
    if (is_piv[fcol]) continue;
    Vec v(m.cols(), 0);
    v[fcol] = 1;
    for (int i = 0; i < r.rows(); ++i) v[piv[i]] = m.field().neg(r(i, fcol));
    gens.push_back(std::move(v));
  }
  return Subspace::from_generators(m.field(), m.cols(), gens);
}

Subspace pullback_pair(const Matrix& f, const Matrix& g) {
  if (!(f.field() == g.field())) throw std::invalid_argument("field mismatch");
  if (f.rows() != g.rows()) throw std::invalid_argument("pullback: codomain mismatch");
  return kernel(f.hstack(g.scaled(f.field().p - 1)));
}

Matrix quotient_map(int ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim() != ambient_dim)
    throw std::invalid_argument("quotient_map: ambient mismatch");
  const Matrix& b = sub.basis();
  const FieldSpec& f = sub.field();
  std::vector<int> piv = b.rows() ? pivot_columns(b) : std::vector<int>{};
  std::vector<bool> is_piv(ambient_dim, false);
  for (int p : piv) is_piv[p] = true;
  Matrix q(f, ambient_dim - sub.dim(), ambient_dim);
  int out_row = 0;
  for (int fcol = 0; fcol < ambient_dim; ++fcol) {
    if (is_piv[fcol]) continue;
    q.set(out_row, fcol, 1);
    for (int i = 0; i < b.rows(); ++i) q.set(out_row, piv[i], f.neg(b(i, fcol)));
    ++out_row;
  }
  return q;
}

}  // namespace chu
