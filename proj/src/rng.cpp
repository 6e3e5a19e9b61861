#include "chu/rng.hpp"

namespace chu {

Matrix random_matrix(Rng& rng, FieldSpec f, int rows, int cols) {
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, rng.below(f.p));
  return m;
}

Matrix random_invertible(Rng& rng, FieldSpec f, int n) {
  for (;;) {
    Matrix m = random_matrix(rng, f, n, n);
    if (rank(m) == n) return m;
  }
}

}  // namespace chu
