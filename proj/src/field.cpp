#include "sfclab/field.hpp"

namespace sfclab {

namespace detail {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on (a, p); p prime and 0 < a < p, so gcd is 1.
  std::int64_t r0 = a, r1 = p;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    const std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (s0 < 0) s0 += p;
  return static_cast<std::uint32_t>(s0);
}

}  // namespace detail

GaloisField::GaloisField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31))
    throw std::invalid_argument("field modulus must satisfy 2 <= p < 2^31, got " +
                                std::to_string(p));
  if (p % 2 == 0 && p != 2)
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0)
      throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  }
}

FieldElement GaloisField::element(std::uint32_t value) const {
  if (value >= p_)
    throw std::out_of_range("residue " + std::to_string(value) + " not reduced mod " +
                            std::to_string(p_));
  return {value, p_};
}

}  // namespace sfclab
