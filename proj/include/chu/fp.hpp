#pragma once

#include <cstdint>
#include <stdexcept>

namespace chu {

using i64 = std::int64_t;

bool is_prime(i64 n);

// Prime field F_p. Residues live in [0, p). The modulus is capped so that a
// product of two reduced residues fits a signed 64-bit accumulator.
struct FieldSpec {
  i64 p = 2;

  FieldSpec() = default;
  explicit FieldSpec(i64 prime);

  bool operator==(const FieldSpec&) const = default;

  i64 reduce(i64 v) const {
    i64 r = v % p;
    return r < 0 ? r + p : r;
  }
  i64 add(i64 a, i64 b) const { return (a + b) % p; }
  i64 sub(i64 a, i64 b) const {
    i64 r = (a - b) % p;
    return r < 0 ? r + p : r;
  }
  i64 mul(i64 a, i64 b) const { return (a * b) % p; }
  i64 neg(i64 a) const { return a == 0 ? 0 : p - a; }
  i64 inv(i64 a) const;
  i64 div(i64 a, i64 b) const { return mul(a, inv(b)); }
};

}  // namespace chu
