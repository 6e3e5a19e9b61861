#pragma once

#include <cstdint>
#include <random>

#include "chu/fp.hpp"
#include "chu/matrix.hpp"

namespace chu {

// All randomness flows through this wrapper. mt19937_64's output sequence is
// fixed by the standard and bounded draws use plain modulo, so a seed fully
// determines every sample stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  i64 below(i64 n) {
    if (n <= 0) throw std::invalid_argument("Rng::below: empty range");
    return static_cast<i64>(next() % static_cast<std::uint64_t>(n));
  }

 private:
  std::mt19937_64 gen_;
};

// splitmix-style combiner for deriving independent streams
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9E3779B97F4A7C15ull * (b + 0x632BE59BD9B4E019ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Matrix random_matrix(Rng& rng, FieldSpec f, int rows, int cols);
Matrix random_invertible(Rng& rng, FieldSpec f, int n);

}  // namespace chu
