#ifndef SFCLAB_LAYOUT_HPP
#define SFCLAB_LAYOUT_HPP

#include <cstdint>
#include <string>

namespace sfclab {

/// The five supported storage orders.
enum class Curve : std::uint8_t {
  kRowMajor,
  kHilbert,
  kPeano,
  kMorton,
  kMortonHybrid,
};

/// Width of the dilation mask cascade. Paper16 is the 4-stage cascade on
/// 32-bit words (coordinates up to 16 bits); Wide32 adds a shift-16 stage
/// with 64-bit masks (coordinates up to 32 bits).
enum class DilationProfile : std::uint8_t {
  kPaper16,
  kWide32,
};

/// Hilbert primitive patterns, in the row order of the lookup tables.
enum class HilbertPattern : std::uint8_t { U = 0, C = 1, D = 2, N = 3 };

/// Grid coordinate: i = row, j = column, both 0-based.
struct CartesianIndex {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend bool operator==(CartesianIndex a, CartesianIndex b) {
    return a.i == b.i && a.j == b.j;
  }
  friend bool operator!=(CartesianIndex a, CartesianIndex b) { return !(a == b); }
};

/// Offset into the serialized array of a laid-out matrix.
using LinearIndex = std::uint64_t;

/// Which curve a matrix is serialized with, plus the curve's parameters.
/// Side length is 2^m for the binary curves and 3^m for Peano.
struct LayoutSpec {
  Curve curve = Curve::kRowMajor;
  std::uint32_t m = 0;
  std::uint32_t beta = 0;  // Morton-hybrid block exponent, T = 2^beta
  HilbertPattern initial_pattern = HilbertPattern::U;
  DilationProfile profile = DilationProfile::kPaper16;

  static LayoutSpec row_major(std::uint32_t m);
  static LayoutSpec hilbert(std::uint32_t m, HilbertPattern start = HilbertPattern::U);
  static LayoutSpec peano(std::uint32_t m);
  static LayoutSpec morton(std::uint32_t m, DilationProfile profile = DilationProfile::kPaper16);
  static LayoutSpec morton_hybrid(std::uint32_t m, std::uint32_t beta,
                                  DilationProfile profile = DilationProfile::kPaper16);

  /// Throws std::invalid_argument on any violated parameter constraint
  /// (beta > m, m beyond the dilation profile, Peano m too deep).
  void validate() const;

  std::uint32_t side() const;
  std::uint64_t cell_count() const;
  std::string describe() const;  // e.g. "morton-hybrid(m=6,t=16)"

  friend bool operator==(const LayoutSpec& a, const LayoutSpec& b) {
    return a.curve == b.curve && a.m == b.m && a.beta == b.beta &&
           a.initial_pattern == b.initial_pattern && a.profile == b.profile;
  }
};

/// Name <-> enum helpers shared by the CLI and the CSV writers.
std::string curve_name(Curve curve);
Curve curve_from_name(const std::string& name);

/// The four Hilbert state tables. t_p/t_v drive encoding (indexed by pattern
/// and the row-major quadrant index v), t_p_prime/t_v_prime drive decoding
/// (indexed by pattern and the Hilbert-order quadrant index). Row-wise,
/// t_v_prime is the inverse permutation of t_v.
struct HilbertTables {
  std::uint8_t t_p[4][4];
  std::uint8_t t_v[4][4];
  std::uint8_t t_p_prime[4][4];
  std::uint8_t t_v_prime[4][4];

  /// The published tables (one transposed pair in the decoding bits table is
  /// re-derived from the inverse-permutation property; see check()).
  static const HilbertTables& paper();

  /// Throws std::logic_error unless every t_v/t_v_prime row is a permutation
  /// and t_v_prime is the row-wise inverse of t_v.
  void check() const;
};

/// Peano pattern machine over {P,Q,R,S} = {identity, horizontal, vertical,
/// double reflection} of the serpentine base pattern. next_pattern/order are
/// indexed by (pattern, digit pair v = 3*d_i + d_j); inv_order/next_pattern_dec
/// by (pattern, order digit). Derived from the recursive generator and frozen.
struct PeanoTables {
  std::uint8_t next_pattern[4][9];
  std::uint8_t order[4][9];
  std::uint8_t inv_order[4][9];
  std::uint8_t next_pattern_dec[4][9];

  static const PeanoTables& serpentine();

  /// Throws std::logic_error unless each order row is a permutation of 0..8
  /// and the inverse tables are consistent.
  void check() const;
};

}  // namespace sfclab

#endif  // SFCLAB_LAYOUT_HPP
