#include "sfclab/layout.hpp"

#include <stdexcept>

namespace sfclab {

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace

LayoutSpec LayoutSpec::row_major(std::uint32_t m) {
  LayoutSpec s{Curve::kRowMajor, m};
  s.validate();
  return s;
}

LayoutSpec LayoutSpec::hilbert(std::uint32_t m, HilbertPattern start) {
  LayoutSpec s{Curve::kHilbert, m};
  s.initial_pattern = start;
  s.validate();
  return s;
}

LayoutSpec LayoutSpec::peano(std::uint32_t m) {
  LayoutSpec s{Curve::kPeano, m};
  s.validate();
  return s;
}

LayoutSpec LayoutSpec::morton(std::uint32_t m, DilationProfile profile) {
  LayoutSpec s{Curve::kMorton, m};
  s.profile = profile;
  s.validate();
  return s;
}

LayoutSpec LayoutSpec::morton_hybrid(std::uint32_t m, std::uint32_t beta,
                                     DilationProfile profile) {
  LayoutSpec s{Curve::kMortonHybrid, m, beta};
  s.profile = profile;
  s.validate();
  return s;
}

void LayoutSpec::validate() const {
  if (curve == Curve::kPeano) {
    // 9^m must fit in 64 bits.
    if (m > 20) throw std::invalid_argument("peano side exponent m must be <= 20");
    return;
  }
  const std::uint32_t cap = profile == DilationProfile::kPaper16 ? 16 : 32;
  if (m > cap) {
    throw std::invalid_argument("side exponent m=" + std::to_string(m) +
                                " exceeds the dilation profile cap of " + std::to_string(cap));
  }
  if (curve == Curve::kMortonHybrid && beta > m) {
    throw std::invalid_argument("morton-hybrid block exponent beta=" + std::to_string(beta) +
                                " exceeds m=" + std::to_string(m));
  }
}

std::uint32_t LayoutSpec::side() const {
  if (curve == Curve::kPeano) return static_cast<std::uint32_t>(pow_u64(3, m));
  return static_cast<std::uint32_t>(std::uint64_t{1} << m);
}

std::uint64_t LayoutSpec::cell_count() const {
  const std::uint64_t n = side();
  return n * n;
}

std::string LayoutSpec::describe() const {
  std::string s = curve_name(curve) + "(m=" + std::to_string(m);
  if (curve == Curve::kMortonHybrid) s += ",t=" + std::to_string(1u << beta);
  if (curve == Curve::kHilbert && initial_pattern != HilbertPattern::U) {
    s += ",start=";
    s += "UCDN"[static_cast<int>(initial_pattern)];
  }
  s += ")";
  return s;
}

std::string curve_name(Curve curve) {
  switch (curve) {
    case Curve::kRowMajor: return "row-major";
    case Curve::kHilbert: return "hilbert";
    case Curve::kPeano: return "peano";
    case Curve::kMorton: return "morton";
    case Curve::kMortonHybrid: return "morton-hybrid";
  }
  return "?";
}

Curve curve_from_name(const std::string& name) {
  if (name == "row-major") return Curve::kRowMajor;
  if (name == "hilbert") return Curve::kHilbert;
  if (name == "peano") return Curve::kPeano;
  if (name == "morton") return Curve::kMorton;
  if (name == "morton-hybrid") return Curve::kMortonHybrid;
  throw std::invalid_argument("unknown layout '" + name + "'");
}

namespace {

constexpr std::uint8_t U = 0, C = 1, D = 2, N = 3;

// Encoding tables, rows U,C,D,N, columns v = row-major quadrant index.
// t_v_prime row D is the inverse-permutation form (00 01 11 10); the printed
// decoding-bits table transposes its last two entries, which would break both
// the stated inversion property and the curve's continuity.
constexpr HilbertTables kHilbertPaper = {
    // t_p
    {{D, C, U, U}, {C, U, C, N}, {U, D, N, D}, {N, N, D, C}},
    // t_v
    {{0, 3, 1, 2}, {2, 3, 1, 0}, {0, 1, 3, 2}, {2, 1, 3, 0}},
    // t_p_prime
    {{D, U, U, C}, {N, C, C, U}, {U, D, D, N}, {C, N, N, D}},
    // t_v_prime
    {{0, 2, 3, 1}, {3, 2, 0, 1}, {0, 1, 3, 2}, {3, 1, 0, 2}},
};

constexpr std::uint8_t P = 0, Q = 1, R = 2, S = 3;

// Frozen from the recursive serpentine generator (P enters top-left and
// descends the left column of ninths; Q/R/S are its horizontal/vertical/
// double reflections). Indexed by v = 3*d_i + d_j for the forward tables and
// by the order digit for the inverse ones.
constexpr PeanoTables kPeanoSerpentine = {
    // next_pattern
    {{P, R, P, Q, S, Q, P, R, P},
     {Q, S, Q, P, R, P, Q, S, Q},
     {R, P, R, S, Q, S, R, P, R},
     {S, Q, S, R, P, R, S, Q, S}},
    // order
    {{0, 5, 6, 1, 4, 7, 2, 3, 8},
     {6, 5, 0, 7, 4, 1, 8, 3, 2},
     {2, 3, 8, 1, 4, 7, 0, 5, 6},
     {8, 3, 2, 7, 4, 1, 6, 5, 0}},
    // inv_order
    {{0, 3, 6, 7, 4, 1, 2, 5, 8},
     {2, 5, 8, 7, 4, 1, 0, 3, 6},
     {6, 3, 0, 1, 4, 7, 8, 5, 2},
     {8, 5, 2, 1, 4, 7, 6, 3, 0}},
    // next_pattern_dec
    {{P, Q, P, R, S, R, P, Q, P},
     {Q, P, Q, S, R, S, Q, P, Q},
     {R, S, R, P, Q, P, R, S, R},
     {S, R, S, Q, P, Q, S, R, S}},
};

}  // namespace

const HilbertTables& HilbertTables::paper() { return kHilbertPaper; }

void HilbertTables::check() const {
  for (int r = 0; r < 4; ++r) {
    bool seen_v[4] = {};
    bool seen_vp[4] = {};
    for (int v = 0; v < 4; ++v) {
      if (t_v[r][v] > 3 || t_v_prime[r][v] > 3 || t_p[r][v] > 3 || t_p_prime[r][v] > 3)
        throw std::logic_error("hilbert table entry out of range");
      seen_v[t_v[r][v]] = true;
      seen_vp[t_v_prime[r][v]] = true;
    }
    for (int v = 0; v < 4; ++v) {
      if (!seen_v[v] || !seen_vp[v])
        throw std::logic_error("hilbert table row is not a permutation");
      if (t_v_prime[r][t_v[r][v]] != v)
        throw std::logic_error("t_v_prime is not the row-wise inverse of t_v");
    }
  }
}

const PeanoTables& PeanoTables::serpentine() { return kPeanoSerpentine; }

void PeanoTables::check() const {
  for (int r = 0; r < 4; ++r) {
    bool seen[9] = {};
    for (int v = 0; v < 9; ++v) {
      if (order[r][v] > 8 || inv_order[r][v] > 8 || next_pattern[r][v] > 3 ||
          next_pattern_dec[r][v] > 3)
        throw std::logic_error("peano table entry out of range");
      seen[order[r][v]] = true;
    }
    for (int v = 0; v < 9; ++v) {
      if (!seen[v]) throw std::logic_error("peano order row is not a permutation");
      if (inv_order[r][order[r][v]] != v)
        throw std::logic_error("inv_order is not the row-wise inverse of order");
      if (next_pattern_dec[r][order[r][v]] != next_pattern[r][v])
        throw std::logic_error("next_pattern_dec inconsistent with next_pattern");
    }
  }
}

}  // namespace sfclab
