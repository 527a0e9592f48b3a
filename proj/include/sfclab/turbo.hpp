#ifndef SFCLAB_TURBO_HPP
#define SFCLAB_TURBO_HPP

// Recursive TU elimination over GF(p) in the Step-1 quadrant style: eliminate
// through the leading block, stream the updates into the trailing blocks, and
// recurse on the reduced trailing problem, with all row operations and
// row/column swaps recorded as an elementary-transform log. Finds the exact
// rank; the eliminated image is upper triangular thanks to the recorded
// column swaps and is bit-identical across layouts and thresholds.
//
// Single writer per decomposition; disjoint-view parallelism is permitted by
// the contract but the reference implementation runs sequentially.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sfclab/matrix.hpp"

namespace sfclab {

enum class TransformKind : std::uint8_t { kRowSwap, kColSwap, kRowAxpy, kRowScale };

/// One elementary operation. Meaning per kind:
///  kRowSwap:  swap full rows a and b
///  kColSwap:  swap full columns a and b
///  kRowAxpy:  row a += coeff * row b, applied to columns [col_from, n)
///  kRowScale: row a *= coeff (coeff != 0), applied to columns [col_from, n)
struct Transform {
  TransformKind kind;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t coeff = 0;
  std::uint32_t col_from = 0;
};

using TransformLog = std::vector<Transform>;

struct TuResult {
  std::uint32_t rank = 0;
  LayoutMatrix eliminated;
  TransformLog log;
};

/// Row- and column-pivoted Gaussian elimination of a block, for blocks at or
/// below the recursion threshold. Pivot search scans the block's columns
/// leftmost-first and, within a column, its rows topmost-first; pivots are
/// swapped onto the block diagonal (swaps recorded and applied matrix-wide),
/// and eliminations run from the pivot column through the parent's right
/// edge. Leaves the block as (U G; 0 0) with U upper triangular and
/// invertible; returns the number of pivots.
std::uint32_t base_case_eliminate(QuadrantView view, TransformLog& log);

/// Result of one quadrant step on a view of side 2h: U1 is rank x rank upper
/// triangular in the view's top-left, G1 sits right of it, rows rank..h of
/// the view's top half are zero, columns 0..rank of the bottom half are zero,
/// and the right half holds B1 (top) and E1 (bottom). n1 holds the recorded
/// multipliers N1 = -SW * U1^{-1} as an h x rank row-major block.
struct TuStep1Result {
  std::uint32_t rank = 0;
  std::uint32_t half = 0;
  std::vector<std::uint32_t> n1;

  std::uint32_t n1_at(std::uint32_t sw_row, std::uint32_t k) const {
    return n1[static_cast<std::size_t>(sw_row) * rank + k];
  }
};

/// The quadrant step: recursive TU of NW (pivot search confined to NW's rows,
/// recursing on half-size panels down to `threshold`), then the N1 sweep that
/// zeroes SW under U1 by triangular solve against U1 (U1^{-1} is never
/// formed), updating I1 and E1 through the same recorded row operations.
/// rank == 0 (zero NW) is legal and leaves NE/SE untouched.
TuStep1Result tu_step1(QuadrantView view, std::uint32_t threshold, TransformLog& log);

/// Full decomposition. n and threshold must be powers of two, 1 <= threshold
/// <= n (else std::invalid_argument). The recursion halves column panels down
/// to the threshold; pivots for a panel may come from any row below the
/// cursor (the recorded row swaps standing in for the virtual permutations),
/// which makes rank, eliminated image, and log independent of the threshold.
TuResult tu_decompose(const LayoutMatrix& m, std::uint32_t threshold);

/// Rank by plain dense row reduction on a row-major copy: no layouts, no
/// recursion, no log. Independent verification path for tu_decompose.
std::uint32_t rank_oracle(const LayoutMatrix& m);

/// Applies the log to a copy of `original` and returns it; replaying a
/// TuResult's log against the pristine input reproduces `eliminated` exactly.
LayoutMatrix replay_log(const LayoutMatrix& original, const TransformLog& log);

/// One-line result summary: `rank=<r> n=<n> layout=<spec> threshold=<T>`.
std::string tu_summary(const TuResult& result, std::uint32_t threshold);

/// Text dump of the transform log, one elementary operation per line.
void write_log(std::ostream& out, const TransformLog& log);

}  // namespace sfclab

#endif  // SFCLAB_TURBO_HPP
