#ifndef SFCLAB_FIELD_HPP
#define SFCLAB_FIELD_HPP

// Arithmetic over GF(p) for prime p < 2^31. Elements are plain residues; one
// storage slot per element everywhere (no packing, even for GF(2)) so that a
// linear index always equals a memory offset.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sfclab {

namespace detail {

/// Inverse mod p by extended Euclid; requires 0 < a < p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace detail

struct FieldElement;

class GaloisField {
 public:
  /// Throws std::invalid_argument unless p is prime and 2 <= p < 2^31
  /// (primality by trial division).
  explicit GaloisField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }

  /// Multiplicative inverse. Throws std::domain_error for 0.
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
    return detail::mod_inverse(a, p_);
  }

  /// Checked constructor for elements of this field.
  FieldElement element(std::uint32_t value) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// A residue tagged with its modulus. Mixed-field arithmetic throws
/// std::domain_error.
struct FieldElement {
  std::uint32_t value = 0;
  std::uint32_t p = 2;

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.p == b.p && a.value == b.value;
  }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    check_same(a, b);
    const std::uint32_t s = a.value + b.value;
    return {s >= a.p ? s - a.p : s, a.p};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    check_same(a, b);
    return {a.value >= b.value ? a.value - b.value : a.value + a.p - b.value, a.p};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    check_same(a, b);
    return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.value) * b.value) % a.p),
            a.p};
  }
  FieldElement operator-() const { return {value == 0 ? 0 : p - value, p}; }

  static void check_same(FieldElement a, FieldElement b) {
    if (a.p != b.p)
      throw std::domain_error("field mismatch: GF(" + std::to_string(a.p) + ") vs GF(" +
                              std::to_string(b.p) + ")");
  }
};

inline FieldElement inverse(FieldElement a) {
  if (a.value == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(a.p) + ")");
  return {detail::mod_inverse(a.value, a.p), a.p};
}

}  // namespace sfclab

#endif  // SFCLAB_FIELD_HPP
