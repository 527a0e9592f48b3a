#include <map>
#include <sstream>

#include "doctest.h"
#include "sfclab/bench.hpp"

using namespace sfclab;

TEST_CASE("bench config validation") {
  BenchConfig c = BenchConfig::desk_scale();
  CHECK_NOTHROW(c.validate());
  c.trials = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = BenchConfig::desk_scale();
  c.n_list.push_back(100);
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = BenchConfig::desk_scale();
  c.t_list.push_back(3);
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = BenchConfig::desk_scale();
  c.layouts.push_back(Curve::kPeano);
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("small sweep has the expected row structure and equal checksums") {
  BenchConfig c;
  c.n_list = {8, 16};
  c.t_list = {4, 16};
  c.layouts = {Curve::kRowMajor, Curve::kMorton, Curve::kHilbert, Curve::kMortonHybrid};
  c.p = 2;
  c.seed = 7;
  c.trials = 2;
  const auto records = run_bench(c);  // throws on divergence

  // per (n=8, trial): rm + morton + hilbert + mh(t=4)   [t=16 skipped]
  // per (n=16, trial): rm + morton + hilbert + mh(t=4) + mh(t=16)
  CHECK(records.size() == 2 * 4 + 2 * 5);

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> cell_checksum;
  for (const auto& r : records) {
    const auto key = std::make_pair(r.n, r.trial);
    if (cell_checksum.count(key)) {
      CHECK(cell_checksum[key] == r.checksum);
    } else {
      cell_checksum[key] = r.checksum;
    }
    CHECK(r.rank <= r.n);
    CHECK(r.wall_time_s >= 0.0);
    if (r.layout != "morton-hybrid") CHECK(r.t == 0);
  }
  // different trials draw different matrices
  CHECK(cell_checksum[{8, 0}] != cell_checksum[{8, 1}]);
}

TEST_CASE("sweep is reproducible in everything but wall time") {
  BenchConfig c;
  c.n_list = {16};
  c.t_list = {8};
  c.layouts = {Curve::kRowMajor, Curve::kMortonHybrid};
  c.p = 7;
  c.seed = 123;
  const auto a = run_bench(c);
  const auto b = run_bench(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].layout == b[k].layout);
    CHECK(a[k].seed == b[k].seed);
    CHECK(a[k].rank == b[k].rank);
    CHECK(a[k].checksum == b[k].checksum);
  }
}

TEST_CASE("empty layout list yields a header-only CSV") {
  BenchConfig c;
  c.n_list = {8};
  c.t_list = {4};
  c.layouts = {};
  const auto records = run_bench(c);
  CHECK(records.empty());
  std::ostringstream out;
  write_bench_csv(out, records);
  CHECK(out.str() == "layout,n,t,trial,seed,wall_time_s,rank,checksum\n");
}

TEST_CASE("the correctness gate trips on synthetic divergence") {
  std::vector<BenchRecord> records(2);
  records[0] = {"row-major", 8, 0, 0, 1, 0.0, 5, 0xabcdull};
  records[1] = {"morton-hybrid", 8, 4, 0, 1, 0.0, 5, 0xabceull};
  CHECK_THROWS_AS(check_cross_layout(records), ChecksumDivergence);
  records[1].checksum = 0xabcdull;
  records[1].rank = 4;
  CHECK_THROWS_AS(check_cross_layout(records), ChecksumDivergence);
  records[1].rank = 5;
  CHECK_NOTHROW(check_cross_layout(records));
}

TEST_CASE("bench CSV schema is frozen") {
  std::vector<BenchRecord> records(1);
  records[0] = {"row-major", 128, 0, 0, 42, 0.125, 128, 0x0123456789abcdefull};
  std::ostringstream out;
  write_bench_csv(out, records);
  CHECK(out.str() ==
        "layout,n,t,trial,seed,wall_time_s,rank,checksum\n"
        "row-major,128,0,0,42,0.125000,128,0123456789abcdef\n");
}
