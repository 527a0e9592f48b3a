#ifndef SFCLAB_CODEC_CORE_HPP
#define SFCLAB_CODEC_CORE_HPP

// Shared algorithm bodies for the index codecs. Each algorithm is written
// once against an operation policy: PlainOps compiles to bare operators (the
// fast path used by the matrix containers), while the cost model instantiates
// the same bodies with a tallying policy. The tally granularity is one count
// per operator application; loop-control arithmetic (shift amounts, digit
// powers) and literal mask loads are not operations of the algorithms and go
// through plain C++.

#include <cstdint>
#include <utility>

#include "sfclab/layout.hpp"

namespace sfclab::detail {

struct PlainOps {
  static constexpr std::uint64_t shl(std::uint64_t a, unsigned s) { return a << s; }
  static constexpr std::uint64_t shr(std::uint64_t a, unsigned s) { return a >> s; }
  static constexpr std::uint64_t band(std::uint64_t a, std::uint64_t b) { return a & b; }
  static constexpr std::uint64_t bor(std::uint64_t a, std::uint64_t b) { return a | b; }
  static constexpr std::uint64_t idiv(std::uint64_t a, std::uint64_t b) { return a / b; }
  static constexpr std::uint64_t imod(std::uint64_t a, std::uint64_t b) { return a % b; }
  static constexpr std::uint64_t imul(std::uint64_t a, std::uint64_t b) { return a * b; }
  static constexpr std::uint64_t iadd(std::uint64_t a, std::uint64_t b) { return a + b; }
  // `fetch` wraps every lookup-table read; the index arithmetic feeding it is
  // table addressing, not a counted operation.
  static constexpr std::uint32_t fetch(std::uint8_t v) { return v; }
};

inline constexpr std::uint32_t kMortonEvenMask32 = 0xAAAAAAAAu;
inline constexpr std::uint32_t kMortonOddMask32 = 0x55555555u;
inline constexpr std::uint64_t kMortonEvenMask64 = 0xAAAAAAAAAAAAAAAAull;
inline constexpr std::uint64_t kMortonOddMask64 = 0x5555555555555555ull;
inline constexpr std::uint64_t kAllOnes64 = 0xFFFFFFFFFFFFFFFFull;

// Row-major: z = (i << m) | j, and back with a shift and a mask.

template <class Ops>
std::uint64_t rm_encode_core(std::uint32_t i, std::uint32_t j, std::uint32_t m, Ops& ops) {
  return ops.bor(ops.shl(i, m), j);
}

template <class Ops>
CartesianIndex rm_decode_core(std::uint64_t z, std::uint32_t m, Ops& ops) {
  const std::uint64_t low_mask = (std::uint64_t{1} << m) - 1;  // mask load, free
  const auto i = static_cast<std::uint32_t>(ops.shr(z, m));
  const auto j = static_cast<std::uint32_t>(ops.band(z, low_mask));
  return {i, j};
}

// Dilation mask cascades. Paper16 is the published 4-stage form; Wide32
// prepends a shift-16 stage with the masks widened to 64 bits.

template <class Ops>
std::uint64_t dilate_core(std::uint64_t t, DilationProfile profile, Ops& ops) {
  std::uint64_t r = t;
  if (profile == DilationProfile::kWide32) {
    r = ops.band(ops.bor(r, ops.shl(r, 16)), 0x0000FFFF0000FFFFull);
    r = ops.band(ops.bor(r, ops.shl(r, 8)), 0x00FF00FF00FF00FFull);
    r = ops.band(ops.bor(r, ops.shl(r, 4)), 0x0F0F0F0F0F0F0F0Full);
    r = ops.band(ops.bor(r, ops.shl(r, 2)), 0x3333333333333333ull);
    r = ops.band(ops.bor(r, ops.shl(r, 1)), 0x5555555555555555ull);
  } else {
    r = ops.band(ops.bor(r, ops.shl(r, 8)), 0x00FF00FFull);
    r = ops.band(ops.bor(r, ops.shl(r, 4)), 0x0F0F0F0Full);
    r = ops.band(ops.bor(r, ops.shl(r, 2)), 0x33333333ull);
    r = ops.band(ops.bor(r, ops.shl(r, 1)), 0x55555555ull);
  }
  return r;
}

template <class Ops>
std::uint64_t undilate_core(std::uint64_t t, DilationProfile profile, Ops& ops) {
  if (profile == DilationProfile::kWide32) {
    t = ops.band(ops.bor(t, ops.shr(t, 1)), 0x3333333333333333ull);
    t = ops.band(ops.bor(t, ops.shr(t, 2)), 0x0F0F0F0F0F0F0F0Full);
    t = ops.band(ops.bor(t, ops.shr(t, 4)), 0x00FF00FF00FF00FFull);
    t = ops.band(ops.bor(t, ops.shr(t, 8)), 0x0000FFFF0000FFFFull);
    t = ops.band(ops.bor(t, ops.shr(t, 16)), 0x00000000FFFFFFFFull);
  } else {
    t = ops.band(ops.bor(t, ops.shr(t, 1)), 0x33333333ull);
    t = ops.band(ops.bor(t, ops.shr(t, 2)), 0x0F0F0F0Full);
    t = ops.band(ops.bor(t, ops.shr(t, 4)), 0x00FF00FFull);
    t = ops.band(ops.bor(t, ops.shr(t, 8)), 0x0000FFFFull);
  }
  return t;
}

// Morton: interleave via two dilations, then shift-or.

template <class Ops>
std::uint64_t morton_encode_core(std::uint32_t i, std::uint32_t j, DilationProfile profile,
                                 Ops& ops) {
  return ops.bor(ops.shl(dilate_core(i, profile, ops), 1), dilate_core(j, profile, ops));
}

template <class Ops>
CartesianIndex morton_decode_core(std::uint64_t z, DilationProfile profile, Ops& ops) {
  const bool wide = profile == DilationProfile::kWide32;
  const std::uint64_t even = wide ? kMortonEvenMask64 : kMortonEvenMask32;
  const std::uint64_t odd = wide ? kMortonOddMask64 : kMortonOddMask32;
  const std::uint64_t iz = ops.band(z, even);
  const auto i = static_cast<std::uint32_t>(undilate_core(ops.shr(iz, 1), profile, ops));
  const std::uint64_t jz = ops.band(z, odd);
  const auto j = static_cast<std::uint32_t>(undilate_core(jz, profile, ops));
  return {i, j};
}

// Morton-hybrid: Morton bits of the T x T block above 2*beta row-major
// offset bits. The named mask mu = (1 << beta) - 1 is built once (its shift
// is an operation of the algorithm; the decrement is part of the mask load);
// the inline high mask is evaluated at each of its two uses, as written.

template <class Ops>
std::uint64_t mh_encode_core(std::uint32_t i, std::uint32_t j, std::uint32_t beta,
                             DilationProfile profile, Ops& ops) {
  const std::uint64_t mu = ops.shl(1, beta) - 1;
  const std::uint64_t i_r = ops.band(i, mu);
  const std::uint64_t i_m = ops.band(i, ops.shl(kAllOnes64, beta));
  const std::uint64_t j_r = ops.band(j, mu);
  const std::uint64_t j_m = ops.band(j, ops.shl(kAllOnes64, beta));
  const std::uint64_t i_md = dilate_core(i_m, profile, ops);
  const std::uint64_t j_md = dilate_core(j_m, profile, ops);
  return ops.bor(ops.bor(ops.shl(i_md, 1), j_md), ops.bor(ops.shl(i_r, beta), j_r));
}

template <class Ops>
CartesianIndex mh_decode_core(std::uint64_t z, std::uint32_t beta, DilationProfile profile,
                              Ops& ops) {
  const bool wide = profile == DilationProfile::kWide32;
  const std::uint64_t even = wide ? kMortonEvenMask64 : kMortonEvenMask32;
  const std::uint64_t odd = wide ? kMortonOddMask64 : kMortonOddMask32;
  const std::uint64_t i_md = ops.band(z, ops.shl(ops.shl(even, beta), beta));
  const std::uint64_t j_md = ops.band(z, ops.shl(ops.shl(odd, beta), beta));
  const std::uint64_t i_m = undilate_core(ops.shr(i_md, 1), profile, ops);
  const std::uint64_t j_m = undilate_core(j_md, profile, ops);
  const std::uint64_t mu = ops.shl(1, beta) - 1;
  const std::uint64_t i_r = ops.band(z, ops.shl(mu, beta));
  const std::uint64_t j_r = ops.band(z, mu);
  const auto i = static_cast<std::uint32_t>(ops.bor(i_m, ops.shr(i_r, beta)));
  const auto j = static_cast<std::uint32_t>(ops.bor(j_m, j_r));
  return {i, j};
}

// Hilbert: m refinement steps through the state tables. The encode tables
// are addressed by (pattern, i-bit, j-bit), so forming the quadrant index is
// table addressing and the per-step cost is six bit operations plus two
// lookups; decode, decomposed exactly as written, is eight plus two.

template <class Ops>
std::uint64_t hilbert_encode_core(std::uint32_t i, std::uint32_t j, std::uint32_t m,
                                  HilbertPattern start, const HilbertTables& t, Ops& ops) {
  std::uint32_t rho = static_cast<std::uint32_t>(start);
  std::uint64_t z = 0;
  for (std::uint32_t k = 0; k < m; ++k) {
    const unsigned sh = m - 1 - k;
    const auto bi = static_cast<std::uint32_t>(ops.band(ops.shr(i, sh), 1));
    const auto bj = static_cast<std::uint32_t>(ops.band(ops.shr(j, sh), 1));
    z = ops.bor(ops.shl(z, 2), ops.fetch(t.t_v[rho][(bi << 1) | bj]));
    rho = ops.fetch(t.t_p[rho][(bi << 1) | bj]);
  }
  return z;
}

template <class Ops>
CartesianIndex hilbert_decode_core(std::uint64_t z, std::uint32_t m, HilbertPattern start,
                                   const HilbertTables& t, Ops& ops) {
  std::uint32_t rho = static_cast<std::uint32_t>(start);
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  for (std::uint32_t k = 0; k < m; ++k) {
    const unsigned sh = 2 * (m - 1 - k);
    const auto v = static_cast<std::uint32_t>(ops.band(ops.shr(z, sh), 3));
    const std::uint32_t vp = ops.fetch(t.t_v_prime[rho][v]);
    rho = ops.fetch(t.t_p_prime[rho][v]);
    i = ops.bor(ops.shl(i, 1), ops.shr(vp, 1));
    j = ops.bor(ops.shl(j, 1), ops.band(vp, 1));
  }
  return {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
}

// Peano: base-3 digit pairs drive the {P,Q,R,S} machine; genuine integer
// division/modulo, no bit tricks. Digit powers are loop control.

template <class Ops>
std::uint64_t peano_encode_core(std::uint32_t i, std::uint32_t j, std::uint32_t m,
                                const PeanoTables& t, Ops& ops) {
  std::uint32_t rho = 0;  // P
  std::uint64_t z = 0;
  std::uint64_t pw = 1;
  for (std::uint32_t k = 1; k < m; ++k) pw *= 3;
  for (std::uint32_t k = 0; k < m; ++k) {
    const auto di = static_cast<std::uint32_t>(ops.imod(ops.idiv(i, pw), 3));
    const auto dj = static_cast<std::uint32_t>(ops.imod(ops.idiv(j, pw), 3));
    z = ops.iadd(ops.imul(z, 9), ops.fetch(t.order[rho][3 * di + dj]));
    rho = ops.fetch(t.next_pattern[rho][3 * di + dj]);
    pw /= 3;
  }
  return z;
}

template <class Ops>
CartesianIndex peano_decode_core(std::uint64_t z, std::uint32_t m, const PeanoTables& t,
                                 Ops& ops) {
  std::uint32_t rho = 0;  // P
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  std::uint64_t pw = 1;
  for (std::uint32_t k = 1; k < m; ++k) pw *= 9;
  for (std::uint32_t k = 0; k < m; ++k) {
    const auto s = static_cast<std::uint32_t>(ops.imod(ops.idiv(z, pw), 9));
    const std::uint32_t v = ops.fetch(t.inv_order[rho][s]);
    i = ops.iadd(ops.imul(i, 3), ops.idiv(v, 3));
    j = ops.iadd(ops.imul(j, 3), ops.imod(v, 3));
    rho = ops.fetch(t.next_pattern_dec[rho][s]);
    pw /= 9;
  }
  return {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
}

}  // namespace sfclab::detail

#endif  // SFCLAB_CODEC_CORE_HPP
