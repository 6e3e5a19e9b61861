#include "chu/fp.hpp"

namespace chu {

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (i64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(i64 prime) : p(prime) {
  if (prime < 2 || prime > (i64{1} << 31)) {
    throw std::invalid_argument("field modulus out of range: " +
                                std::to_string(prime));
  }
  if (!is_prime(prime)) {
    throw std::invalid_argument("field modulus is not prime: " +
                                std::to_string(prime));
  }
}

i64 FieldSpec::inv(i64 a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // extended Euclid
  i64 t = 0, new_t = 1;
  i64 r = p, new_r = a;
  while (new_r != 0) {
    i64 q = r / new_r;
    i64 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

}  // namespace chu
