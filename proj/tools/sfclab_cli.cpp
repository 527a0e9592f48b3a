// Command-line front end: index conversion queries, layout map dumps,
// operation-count tables, matrix generation, and the row-major vs.
// curve-layout decomposition benchmark.
//
// Exit codes: 0 success, 2 usage/range errors, 3 benchmark correctness gate.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sfclab/bench.hpp"
#include "sfclab/codecs.hpp"
#include "sfclab/cost_model.hpp"
#include "sfclab/matrix.hpp"
#include "sfclab/rng.hpp"
#include "sfclab/turbo.hpp"

namespace {

using namespace sfclab;

struct LayoutFlags {
  std::string layout = "row-major";
  std::uint32_t m = 3;
  std::uint32_t t = 0;  // morton-hybrid truncation size T = 2^beta
  std::string start = "U";
  std::string profile = "paper16";
};

void add_layout_flags(CLI::App* cmd, LayoutFlags& f) {
  cmd->add_option("--layout", f.layout,
                  "layout: row-major|hilbert|peano|morton|morton-hybrid")
      ->required();
  cmd->add_option("--m", f.m, "side exponent (side 2^m, or 3^m for peano)")->required();
  cmd->add_option("--t", f.t, "morton-hybrid truncation size T (power of two)");
  cmd->add_option("--start", f.start, "hilbert initial pattern: U|C|D|N");
  cmd->add_option("--profile", f.profile, "dilation profile: paper16|wide32");
}

std::uint32_t log2_exact(std::uint32_t v, const char* what) {
  std::uint32_t e = 0;
  while ((1u << e) < v) ++e;
  if ((1u << e) != v) throw std::invalid_argument(std::string(what) + " must be a power of two");
  return e;
}

HilbertPattern pattern_from(const std::string& s) {
  if (s == "U") return HilbertPattern::U;
  if (s == "C") return HilbertPattern::C;
  if (s == "D") return HilbertPattern::D;
  if (s == "N") return HilbertPattern::N;
  throw std::invalid_argument("hilbert start pattern must be one of U|C|D|N");
}

DilationProfile profile_from(const std::string& s) {
  if (s == "paper16") return DilationProfile::kPaper16;
  if (s == "wide32") return DilationProfile::kWide32;
  throw std::invalid_argument("profile must be paper16 or wide32");
}

LayoutSpec spec_from(const LayoutFlags& f) {
  const Curve curve = curve_from_name(f.layout);
  const DilationProfile profile = profile_from(f.profile);
  switch (curve) {
    case Curve::kRowMajor: return LayoutSpec::row_major(f.m);
    case Curve::kHilbert: return LayoutSpec::hilbert(f.m, pattern_from(f.start));
    case Curve::kPeano: return LayoutSpec::peano(f.m);
    case Curve::kMorton: return LayoutSpec::morton(f.m, profile);
    case Curve::kMortonHybrid: {
      if (f.t == 0)
        throw std::invalid_argument("morton-hybrid requires --t (truncation size)");
      return LayoutSpec::morton_hybrid(f.m, log2_exact(f.t, "--t"), profile);
    }
  }
  throw std::invalid_argument("unknown layout");
}

/// Output sink: --out file or stdout.
struct Sink {
  std::ofstream file;
  std::ostream& stream(const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    return file;
  }
};

void print_counter(std::ostream& out, const OpCounter& c) {
  out << "bit_ops=" << c.bit_ops << " int_ops=" << c.int_ops
      << " table_lookups=" << c.table_lookups << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{
      "sfclab: space-filling-curve index codecs, layout-aware GF(p) matrices,\n"
      "recursive TU decomposition, and the conversion-cost/run-time bench"};
  app.require_subcommand(1);

  // encode / decode
  LayoutFlags enc_flags;
  std::uint32_t enc_i = 0, enc_j = 0;
  bool enc_count = false;
  auto* enc = app.add_subcommand("encode", "Cartesian (i,j) -> linear index z");
  add_layout_flags(enc, enc_flags);
  enc->add_option("--i", enc_i, "row coordinate")->required();
  enc->add_option("--j", enc_j, "column coordinate")->required();
  enc->add_flag("--count", enc_count, "also print the operation tally");
  enc->callback([&] {
    const LayoutSpec spec = spec_from(enc_flags);
    if (enc_count) {
      const auto [z, counter] = counted_encode({enc_i, enc_j}, spec);
      std::cout << z << '\n';
      print_counter(std::cout, counter);
    } else {
      std::cout << encode({enc_i, enc_j}, spec) << '\n';
    }
  });

  LayoutFlags dec_flags;
  std::uint64_t dec_z = 0;
  bool dec_count = false;
  auto* dec = app.add_subcommand("decode", "linear index z -> Cartesian (i,j)");
  add_layout_flags(dec, dec_flags);
  dec->add_option("--z", dec_z, "linear index")->required();
  dec->add_flag("--count", dec_count, "also print the operation tally");
  dec->callback([&] {
    const LayoutSpec spec = spec_from(dec_flags);
    if (dec_count) {
      const auto [idx, counter] = counted_decode(dec_z, spec);
      std::cout << idx.i << ' ' << idx.j << '\n';
      print_counter(std::cout, counter);
    } else {
      const CartesianIndex idx = decode(dec_z, spec);
      std::cout << idx.i << ' ' << idx.j << '\n';
    }
  });

  // map
  LayoutFlags map_flags;
  bool map_csv = false;
  std::string map_out;
  auto* map = app.add_subcommand("map", "dump the n x n grid of linear indices");
  add_layout_flags(map, map_flags);
  map->add_flag("--csv", map_csv, "emit i,j,z rows instead of a grid");
  map->add_option("--out", map_out, "output file (default stdout)");
  map->callback([&] {
    const LayoutSpec spec = spec_from(map_flags);
    const std::uint32_t n = spec.side();
    if (n > 128) throw std::invalid_argument("map is capped at side 128, got n=" +
                                             std::to_string(n));
    Sink sink;
    std::ostream& out = sink.stream(map_out);
    if (map_csv) {
      out << "i,j,z\n";
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          out << i << ',' << j << ',' << encode({i, j}, spec) << '\n';
    } else {
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
          if (j) out << ' ';
          out << encode({i, j}, spec);
        }
        out << '\n';
      }
    }
  });

  // gen
  std::uint32_t gen_n = 8, gen_p = 2;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a seeded random matrix file");
  gen->add_option("--n", gen_n, "side length (2^m, or 3^m)")->required();
  gen->add_option("--p", gen_p, "prime field modulus");
  gen->add_option("--seed", gen_seed, "64-bit generator seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->callback([&] {
    std::uint32_t e = 0;
    std::uint64_t v = 1;
    while (v < gen_n) v *= 2, ++e;
    LayoutSpec spec;
    if (v == gen_n) {
      spec = LayoutSpec::row_major(e);
    } else {
      e = 0;
      v = 1;
      while (v < gen_n) v *= 3, ++e;
      if (v != gen_n)
        throw std::invalid_argument("--n must be 2^m or 3^m, got " + std::to_string(gen_n));
      spec = LayoutSpec::peano(e);
    }
    const LayoutMatrix matrix = LayoutMatrix::random(GaloisField(gen_p), spec, gen_seed);
    Sink sink;
    matrix.save(sink.stream(gen_out));
  });

  // tu
  std::string tu_in, tu_layout = "row-major", tu_out;
  std::uint32_t tu_t = 0, tu_threshold = 32;
  bool tu_dump_log = false;
  auto* tu = app.add_subcommand("tu", "decompose a matrix file and print the result summary");
  tu->add_option("--in", tu_in, "matrix file (sfc-matrix v1)")->required();
  tu->add_option("--layout", tu_layout, "backing layout for the decomposition");
  tu->add_option("--t", tu_t, "morton-hybrid truncation size");
  tu->add_option("--threshold", tu_threshold, "recursion threshold (power of two)");
  tu->add_flag("--log", tu_dump_log, "also dump the transform log");
  tu->add_option("--out", tu_out, "write the eliminated matrix file here");
  tu->callback([&] {
    const LayoutMatrix loaded = LayoutMatrix::load_file(tu_in);
    std::uint32_t m = 0;
    while ((1u << m) < loaded.n()) ++m;
    if ((1u << m) != loaded.n())
      throw std::invalid_argument("tu requires a power-of-two side, got n=" +
                                  std::to_string(loaded.n()));
    LayoutFlags flags;
    flags.layout = tu_layout;
    flags.m = m;
    flags.t = tu_t;
    const LayoutMatrix input = loaded.relayout(spec_from(flags));
    const std::uint32_t threshold = tu_threshold < loaded.n() ? tu_threshold : loaded.n();
    const TuResult result = tu_decompose(input, threshold);
    std::cout << tu_summary(result, threshold) << '\n';
    if (tu_dump_log) write_log(std::cout, result.log);
    if (!tu_out.empty()) result.eliminated.save_file(tu_out);
  });

  // bench
  BenchConfig defaults = BenchConfig::desk_scale();
  std::vector<std::uint32_t> bench_n = defaults.n_list;
  std::vector<std::uint32_t> bench_t = defaults.t_list;
  std::vector<std::string> bench_layouts = {"row-major", "morton-hybrid"};
  std::uint32_t bench_p = defaults.p;
  std::uint64_t bench_seed = defaults.seed;
  std::uint32_t bench_trials = defaults.trials;
  std::string bench_out;
  auto* bench = app.add_subcommand(
      "bench", "run the tu_decompose sweep and emit the timing CSV (desk-scale defaults)");
  bench->add_option("--n-list", bench_n, "side lengths (powers of two)")->delimiter(',');
  bench->add_option("--t-list", bench_t, "morton-hybrid truncation sizes")->delimiter(',');
  bench->add_option("--layouts", bench_layouts, "layouts to compare")->delimiter(',');
  bench->add_option("--p", bench_p, "prime field modulus");
  bench->add_option("--seed", bench_seed, "sweep seed");
  bench->add_option("--trials", bench_trials, "repetitions per cell");
  bench->add_option("--out", bench_out, "CSV output file (default stdout)");
  bench->callback([&] {
    BenchConfig config;
    config.n_list = bench_n;
    config.t_list = bench_t;
    for (const auto& name : bench_layouts) config.layouts.push_back(curve_from_name(name));
    config.p = bench_p;
    config.seed = bench_seed;
    config.trials = bench_trials;
    const std::vector<BenchRecord> records = run_bench(config, &std::cerr);
    Sink sink;
    write_bench_csv(sink.stream(bench_out), records);
  });

  // counts
  std::vector<std::string> counts_layouts = {"row-major", "hilbert", "peano", "morton",
                                             "morton-hybrid"};
  std::uint32_t counts_m = 10, counts_t = 16;
  std::string counts_out;
  auto* counts = app.add_subcommand("counts", "per-layout encode/decode operation-cost CSV");
  counts->add_option("--layouts", counts_layouts, "layouts to tabulate")->delimiter(',');
  counts->add_option("--m", counts_m, "side exponent used for the tabulation");
  counts->add_option("--t", counts_t, "morton-hybrid truncation size");
  counts->add_option("--out", counts_out, "output file (default stdout)");
  counts->callback([&] {
    std::vector<LayoutSpec> specs;
    for (const auto& name : counts_layouts) {
      switch (curve_from_name(name)) {
        case Curve::kRowMajor: specs.push_back(LayoutSpec::row_major(counts_m)); break;
        case Curve::kHilbert: specs.push_back(LayoutSpec::hilbert(counts_m)); break;
        case Curve::kPeano: specs.push_back(LayoutSpec::peano(counts_m)); break;
        case Curve::kMorton: specs.push_back(LayoutSpec::morton(counts_m)); break;
        case Curve::kMortonHybrid:
          specs.push_back(
              LayoutSpec::morton_hybrid(counts_m, log2_exact(counts_t, "--t")));
          break;
      }
    }
    Sink sink;
    write_counts_csv(sink.stream(counts_out), report_counts(specs));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ChecksumDivergence& e) {
    std::cerr << "correctness gate: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
