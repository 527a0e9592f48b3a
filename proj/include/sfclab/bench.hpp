#ifndef SFCLAB_BENCH_HPP
#define SFCLAB_BENCH_HPP

// The row-major vs. curve-layout decomposition sweep. Wall time is measured
// around tu_decompose only; generation and relayout are excluded. Every
// record set carries a built-in correctness gate: within one (n, trial) cell,
// all layouts must produce the same rank and eliminated-matrix checksum.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfclab/layout.hpp"

namespace sfclab {

struct BenchConfig {
  std::vector<std::uint32_t> n_list;   // powers of two
  std::vector<std::uint32_t> t_list;   // truncation sizes, powers of two
  std::vector<Curve> layouts;
  std::uint32_t p = 2;
  std::uint64_t seed = 0;
  std::uint32_t trials = 1;

  /// Desk-scale default: n in {128..2048}, T in {16..128}, row-major vs
  /// morton-hybrid over GF(2).
  static BenchConfig desk_scale();

  /// Throws std::invalid_argument on non-power-of-two entries or trials < 1.
  void validate() const;
};

struct BenchRecord {
  std::string layout;
  std::uint32_t n = 0;
  std::uint32_t t = 0;  // truncation size for morton-hybrid rows, 0 otherwise
  std::uint32_t trial = 0;
  std::uint64_t seed = 0;  // derived per-cell generator seed
  double wall_time_s = 0.0;
  std::uint32_t rank = 0;
  std::uint64_t checksum = 0;
};

/// Raised when layouts disagree within a cell (the exit-code-3 gate).
struct ChecksumDivergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Runs the sweep: one record per (layout, n, t-pairing, trial). Morton-hybrid
/// pairs with every t <= n (larger t are skipped with a note to `progress`);
/// other layouts run once per (n, trial) with threshold min(32, n). Each cell
/// is cross-checked before returning; divergence throws ChecksumDivergence.
/// `progress`, when non-null, receives one diagnostic line per record.
std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* progress = nullptr);

/// Throws ChecksumDivergence if any (n, trial) cell has records with
/// differing rank or checksum.
void check_cross_layout(const std::vector<BenchRecord>& records);

/// CSV, schema frozen: layout,n,t,trial,seed,wall_time_s,rank,checksum
/// (checksum as 16 lowercase hex digits).
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace sfclab

#endif  // SFCLAB_BENCH_HPP
