#pragma once

#include <optional>
#include <vector>

#include "chu/fp.hpp"

namespace chu {

using Vec = std::vector<i64>;

// Dense matrix over F_p, row-major. Zero-row / zero-column shapes are
// first-class: the S/E reflections and hom spaces produce them routinely.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec f, int rows, int cols);

  static Matrix identity(FieldSpec f, int n);
  static Matrix from_rows(FieldSpec f, const std::vector<Vec>& rows,
                          int cols = -1);
  static Matrix row_vector(FieldSpec f, const Vec& v);
  static Matrix col_vector(FieldSpec f, const Vec& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  i64 operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, i64 v) { e_[static_cast<size_t>(r) * cols_ + c] = field_.reduce(v); }

  Vec row(int r) const;
  Vec col(int c) const;
  const std::vector<i64>& entries() const { return e_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(i64 s) const;

  Vec apply(const Vec& v) const;      // M * v (column convention)
  Vec apply_row(const Vec& v) const;  // v^T * M, returned as a row

  Matrix hstack(const Matrix& rhs) const;
  Matrix vstack(const Matrix& rhs) const;
  Matrix select_cols(const std::vector<int>& cols) const;

  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const Matrix&) const = default;

 private:
  FieldSpec field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<i64> e_;
};

// Reduced row echelon form with zero rows dropped; row space is preserved and
// the result is idempotent, so it doubles as a canonical form for row spaces.
Matrix rref(const Matrix& m);
int rank(const Matrix& m);
std::vector<int> pivot_columns(const Matrix& rref_form);

// Some v with m*v = b, free variables zeroed in rref order.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
// X with A*X = B (each column solved with free variables zeroed).
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

// Kronecker product; index pairing (i_a, i_b) -> i_a*rows(b) + i_b is the
// repo-wide tensor basis convention (same for columns).
Matrix kron(const Matrix& a, const Matrix& b);

// Row space of `basis` in canonical (rref) form; equality of subspaces is
// plain equality of canonical bases.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldSpec f, int ambient_dim);  // zero subspace
  static Subspace from_generators(FieldSpec f, int ambient_dim,
                                  const std::vector<Vec>& gens);
  static Subspace from_matrix_rows(const Matrix& m);
  static Subspace full(FieldSpec f, int ambient_dim);

  const Matrix& basis() const { return basis_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const FieldSpec& field() const { return field_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v in the canonical basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace meet(const Subspace& other) const;
  Subspace join(const Subspace& other) const;

  bool operator==(const Subspace&) const = default;

 private:
  FieldSpec field_;
  int ambient_ = 0;
  Matrix basis_;
};

Subspace kernel(const Matrix& m);
// {(a,b) : f*a = g*b} as a subspace of the concatenated domain.
Subspace pullback_pair(const Matrix& f, const Matrix& g);
// Surjection q with kernel exactly `sub`; complement chosen as the rref
// pivot complement, so the result is deterministic.
Matrix quotient_map(int ambient_dim, const Subspace& sub);

}  // namespace chu
