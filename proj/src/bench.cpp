#include "sfclab/bench.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "sfclab/matrix.hpp"
#include "sfclab/rng.hpp"
#include "sfclab/turbo.hpp"

namespace sfclab {

namespace {

bool is_power_of_two(std::uint32_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::uint32_t log2_exact(std::uint32_t v) {
  std::uint32_t e = 0;
  while ((1u << e) < v) ++e;
  return e;
}

std::uint64_t cell_seed(std::uint64_t seed, std::uint32_t n, std::uint32_t trial) {
  return splitmix_scramble(seed ^ (static_cast<std::uint64_t>(n) << 32) ^ trial);
}

BenchRecord run_one(const LayoutMatrix& base, const LayoutSpec& spec, std::uint32_t threshold,
                    std::uint32_t t_column, std::uint32_t trial, std::uint64_t seed) {
  const LayoutMatrix input = base.relayout(spec);
  const auto t0 = std::chrono::steady_clock::now();
  const TuResult result = tu_decompose(input, threshold);
  const auto t1 = std::chrono::steady_clock::now();

  BenchRecord rec;
  rec.layout = curve_name(spec.curve);
  rec.n = base.n();
  rec.t = t_column;
  rec.trial = trial;
  rec.seed = seed;
  rec.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
  rec.rank = result.rank;
  rec.checksum = result.eliminated.checksum();
  return rec;
}

void emit_progress(std::ostream* progress, const BenchRecord& r) {
  if (!progress) return;
  *progress << "bench: layout=" << r.layout << " n=" << r.n << " t=" << r.t
            << " trial=" << r.trial << " rank=" << r.rank << " time=" << std::fixed
            << std::setprecision(3) << r.wall_time_s << "s\n";
  progress->flush();
}

}  // namespace

BenchConfig BenchConfig::desk_scale() {
  BenchConfig c;
  c.n_list = {128, 256, 512, 1024, 2048};
  c.t_list = {16, 32, 64, 128};
  c.layouts = {Curve::kRowMajor, Curve::kMortonHybrid};
  c.p = 2;
  c.seed = 0;
  c.trials = 1;
  return c;
}

void BenchConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("bench trials must be >= 1");
  for (std::uint32_t n : n_list)
    if (!is_power_of_two(n))
      throw std::invalid_argument("bench n=" + std::to_string(n) + " is not a power of two");
  for (std::uint32_t t : t_list)
    if (!is_power_of_two(t))
      throw std::invalid_argument("bench t=" + std::to_string(t) + " is not a power of two");
  for (Curve c : layouts)
    if (c == Curve::kPeano)
      throw std::invalid_argument(
          "peano cannot back the decomposition benchmark (3^m sides; TU needs 2^m)");
}

std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* progress) {
  config.validate();
  const GaloisField field(config.p);
  std::vector<BenchRecord> records;

  for (std::uint32_t n : config.n_list) {
    const std::uint32_t m = log2_exact(n);
    const std::uint32_t plain_threshold = n < 32 ? n : 32;
    for (std::uint32_t trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t seed = cell_seed(config.seed, n, trial);
      const LayoutMatrix base = LayoutMatrix::random(field, LayoutSpec::row_major(m), seed);
      std::vector<BenchRecord> cell;

      for (Curve curve : config.layouts) {
        if (curve == Curve::kMortonHybrid) {
          for (std::uint32_t t : config.t_list) {
            if (t > n) {
              if (progress)
                *progress << "bench: skipping t=" << t << " > n=" << n
                          << " for morton-hybrid\n";
              continue;
            }
            const LayoutSpec spec = LayoutSpec::morton_hybrid(m, log2_exact(t));
            cell.push_back(run_one(base, spec, t, t, trial, seed));
            emit_progress(progress, cell.back());
          }
        } else {
          LayoutSpec spec;
          switch (curve) {
            case Curve::kRowMajor: spec = LayoutSpec::row_major(m); break;
            case Curve::kMorton: spec = LayoutSpec::morton(m); break;
            case Curve::kHilbert: spec = LayoutSpec::hilbert(m); break;
            default: continue;
          }
          cell.push_back(run_one(base, spec, plain_threshold, 0, trial, seed));
          emit_progress(progress, cell.back());
        }
      }

      records.insert(records.end(), cell.begin(), cell.end());
    }
  }

  check_cross_layout(records);
  return records;
}

void check_cross_layout(const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, const BenchRecord*> first;
  for (const BenchRecord& r : records) {
    const auto key = std::make_pair(r.n, r.trial);
    const auto [it, inserted] = first.emplace(key, &r);
    if (inserted) continue;
    const BenchRecord& ref = *it->second;
    if (ref.rank != r.rank || ref.checksum != r.checksum) {
      std::ostringstream msg;
      msg << "cross-layout divergence at n=" << r.n << " trial=" << r.trial << ": " << ref.layout
          << "(t=" << ref.t << ") rank=" << ref.rank << " checksum=" << std::hex << ref.checksum
          << " vs " << r.layout << "(t=" << r.t << ") rank=" << std::dec << r.rank
          << " checksum=" << std::hex << r.checksum;
      throw ChecksumDivergence(msg.str());
    }
  }
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "layout,n,t,trial,seed,wall_time_s,rank,checksum\n";
  for (const BenchRecord& r : records) {
    out << r.layout << ',' << r.n << ',' << r.t << ',' << r.trial << ',' << r.seed << ','
        << std::fixed << std::setprecision(6) << r.wall_time_s << ',' << r.rank << ','
        << std::hex << std::setw(16) << std::setfill('0') << r.checksum << std::dec
        << std::setfill(' ') << '\n';
  }
}

}  // namespace sfclab
