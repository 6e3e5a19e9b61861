#pragma once

#include <optional>
#include <vector>

#include "chu/matrix.hpp"

namespace chu {

// Linear systems whose unknowns are a list of matrix blocks, vectorized
// row-major with blocks in declaration order. Equations are matrix grids
//   sum_t sign_t * L_t * X_{b_t} * R_t  = RHS   (X transposed when flagged)
// which covers every constraint in the repo: the Chu morphism condition
// F^T*Q = P*G, intertwining F*X1 = X2*F, Sylvester-style equations, and the
// pinning equations of extension problems.
class BlockSystem {
 public:
  BlockSystem(FieldSpec f, std::vector<std::pair<int, int>> block_shapes);

  struct Term {
    int block;
    Matrix left;
    Matrix right;
    bool transpose_unknown = false;
    i64 sign = 1;
  };

  int blocks() const { return static_cast<int>(shapes_.size()); }
  int total_unknowns() const { return total_; }
  int block_offset(int b) const { return offsets_[b]; }
  std::pair<int, int> block_shape(int b) const { return shapes_[b]; }

  // Adds er*ec scalar equations. rhs, when present, must be er x ec.
  void add_equation_grid(int er, int ec, const std::vector<Term>& terms,
                         const Matrix* rhs = nullptr);

  // Solution space of the homogeneous part (rhs rows must all be zero).
  Subspace solution_space() const;
  // Particular solution with free variables zeroed, or nullopt.
  std::optional<Vec> particular_solution() const;

  // Unvectorize a solution vector's block back into a matrix.
  Matrix extract_block(const Vec& solution, int b) const;

 private:
  FieldSpec field_;
  std::vector<std::pair<int, int>> shapes_;
  std::vector<int> offsets_;
  int total_ = 0;
  std::vector<Vec> coeff_rows_;
  Vec rhs_;
};

}  // namespace chu
