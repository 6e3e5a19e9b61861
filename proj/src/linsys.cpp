#include "chu/linsys.hpp"

#include <stdexcept>

#include "chu/rng.hpp"

namespace chu {

BlockSystem::BlockSystem(FieldSpec f, std::vector<std::pair<int, int>> block_shapes)
    : field_(f), shapes_(std::move(block_shapes)) {
  offsets_.reserve(shapes_.size());
  for (const auto& [r, c] : shapes_) {
    offsets_.push_back(total_);
    total_ += r * c;
  }
}

void BlockSystem::add_equation_grid(int er, int ec, const std::vector<Term>& terms,
                                    const Matrix* rhs) {
  if (rhs && (rhs->rows() != er || rhs->cols() != ec))
    throw std::invalid_argument("BlockSystem: rhs shape mismatch");
  for (int i = 0; i < er; ++i) {
    for (int j = 0; j < ec; ++j) {
      Vec row(total_, 0);
      for (const auto& t : terms) {
        auto [br, bc] = shapes_[t.block];
        const int base = offsets_[t.block];
        // (L * X * R)[i][j] collects coefficient L[i][k]*R[l][j] on X[k][l];
        // with the transpose flag the coefficient lands on X[l][k].
        for (int k = 0; k < t.left.cols(); ++k) {
          i64 lv = t.left(i, k);
          if (lv == 0) continue;
          for (int l = 0; l < t.right.rows(); ++l) {
            i64 rv = t.right(l, j);
            if (rv == 0) continue;
            i64 coef = field_.mul(field_.mul(lv, rv), field_.reduce(t.sign));
            int kk = t.transpose_unknown ? l : k;
            int ll = t.transpose_unknown ? k : l;
            if (kk >= br || ll >= bc)
              throw std::invalid_argument("BlockSystem: term shape mismatch");
            int idx = base + kk * bc + ll;
            row[idx] = field_.add(row[idx], coef);
          }
        }
      }
      coeff_rows_.push_back(std::move(row));
      rhs_.push_back(rhs ? (*rhs)(i, j) : 0);
    }
  }
}

Subspace BlockSystem::solution_space() const {
  for (i64 v : rhs_)
    if (v != 0) throw std::logic_error("BlockSystem: homogeneous query on affine system");
  return kernel(Matrix::from_rows(field_, coeff_rows_, total_));
}

std::optional<Vec> BlockSystem::particular_solution() const {
  Matrix a = Matrix::from_rows(field_, coeff_rows_, total_);
  return solve(a, rhs_);
}

Matrix BlockSystem::extract_block(const Vec& solution, int b) const {
  auto [r, c] = shapes_[b];
  Matrix m(field_, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, solution[block_offset(b) + i * c + j]);
  return m;
}

}  // namespace chu
