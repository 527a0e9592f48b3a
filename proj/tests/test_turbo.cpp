#include <cstdint>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "sfclab/rng.hpp"
#include "sfclab/turbo.hpp"

using namespace sfclab;

namespace {

// Minimal dense GF(p) matrices for the reference computations. Everything in
// this block is test-only and independent of the layout machinery.
struct Dense {
  std::uint32_t rows = 0, cols = 0, p = 2;
  std::vector<std::uint32_t> v;

  Dense() = default;
  Dense(std::uint32_t r, std::uint32_t c, std::uint32_t p_) : rows(r), cols(c), p(p_) {
    v.assign(static_cast<std::size_t>(r) * c, 0);
  }
  std::uint32_t& at(std::uint32_t r, std::uint32_t c) {
    return v[static_cast<std::size_t>(r) * cols + c];
  }
  std::uint32_t at(std::uint32_t r, std::uint32_t c) const {
    return v[static_cast<std::size_t>(r) * cols + c];
  }
  static Dense identity(std::uint32_t n, std::uint32_t p) {
    Dense d(n, n, p);
    for (std::uint32_t k = 0; k < n; ++k) d.at(k, k) = 1;
    return d;
  }
};

Dense matmul(const Dense& a, const Dense& b) {
  REQUIRE(a.cols == b.rows);
  Dense r(a.rows, b.cols, a.p);
  for (std::uint32_t i = 0; i < a.rows; ++i)
    for (std::uint32_t k = 0; k < a.cols; ++k) {
      const std::uint64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::uint32_t j = 0; j < b.cols; ++j)
        r.at(i, j) =
            static_cast<std::uint32_t>((r.at(i, j) + aik * b.at(k, j)) % a.p);
    }
  return r;
}

Dense madd(const Dense& a, const Dense& b) {
  Dense r = a;
  for (std::size_t k = 0; k < r.v.size(); ++k)
    r.v[k] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r.v[k]) + b.v[k]) % r.p);
  return r;
}

Dense block_of(const LayoutMatrix& m, std::uint32_t i0, std::uint32_t j0, std::uint32_t rows,
               std::uint32_t cols) {
  Dense d(rows, cols, m.field().modulus());
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) d.at(r, c) = m.residue(i0 + r, j0 + c);
  return d;
}

std::uint32_t dense_rank(Dense d) {
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < d.cols && rank < d.rows; ++col) {
    std::uint32_t pr = d.rows;
    for (std::uint32_t r = rank; r < d.rows; ++r)
      if (d.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr == d.rows) continue;
    for (std::uint32_t c = 0; c < d.cols; ++c) std::swap(d.at(rank, c), d.at(pr, c));
    const std::uint64_t inv = detail::mod_inverse(d.at(rank, col), d.p);
    for (std::uint32_t r = rank + 1; r < d.rows; ++r) {
      if (d.at(r, col) == 0) continue;
      const std::uint64_t f = d.p - (d.at(r, col) * inv) % d.p;
      for (std::uint32_t c = col; c < d.cols; ++c)
        d.at(r, c) = static_cast<std::uint32_t>((d.at(r, c) + f * d.at(rank, c)) % d.p);
    }
    ++rank;
  }
  return rank;
}

struct Step1Expected {
  std::uint32_t r1 = 0;
  Dense post;  // the full expected matrix image after the step
  Dense n1;    // h x r1
};

// Executes the quadrant-step equations literally on dense copies:
// eliminate NW (tracking L explicitly and mirroring column swaps into SW),
// then B1 = L*NE, N1 = -SW*U1^{-1} (U1 inverted by back substitution),
// SW' = SW + N1*(U1 G1), E1 = SE + N1*B1.
Step1Expected step1_oracle(const LayoutMatrix& m) {
  const std::uint32_t n = m.n();
  const std::uint32_t h = n / 2;
  const std::uint32_t p = m.field().modulus();
  Dense nw = block_of(m, 0, 0, h, h);
  const Dense ne = block_of(m, 0, h, h, h);
  Dense sw = block_of(m, h, 0, h, h);
  const Dense se = block_of(m, h, h, h, h);
  Dense l = Dense::identity(h, p);

  std::uint32_t cursor = 0;
  for (std::uint32_t pos = 0; pos < h; ++pos) {
    std::uint32_t pr = h;
    for (std::uint32_t r = cursor; r < h; ++r)
      if (nw.at(r, pos) != 0) {
        pr = r;
        break;
      }
    if (pr == h) continue;
    if (pr != cursor) {
      for (std::uint32_t c = 0; c < h; ++c) {
        std::swap(nw.at(cursor, c), nw.at(pr, c));
        std::swap(l.at(cursor, c), l.at(pr, c));
      }
    }
    if (pos != cursor) {
      for (std::uint32_t r = 0; r < h; ++r) {
        std::swap(nw.at(r, cursor), nw.at(r, pos));
        std::swap(sw.at(r, cursor), sw.at(r, pos));
      }
    }
    const std::uint64_t inv = detail::mod_inverse(nw.at(cursor, cursor), p);
    for (std::uint32_t x = cursor + 1; x < h; ++x) {
      if (nw.at(x, cursor) == 0) continue;
      const std::uint64_t f = p - (nw.at(x, cursor) * inv) % p;
      for (std::uint32_t c = 0; c < h; ++c) {
        nw.at(x, c) = static_cast<std::uint32_t>((nw.at(x, c) + f * nw.at(cursor, c)) % p);
        l.at(x, c) = static_cast<std::uint32_t>((l.at(x, c) + f * l.at(cursor, c)) % p);
      }
    }
    ++cursor;
  }
  const std::uint32_t r1 = cursor;

  const Dense b1 = matmul(l, ne);

  // U1^{-1} by back substitution, column by column.
  Dense u1inv(r1, r1, p);
  for (std::uint32_t c = 0; c < r1; ++c) {
    for (std::uint32_t k = r1; k-- > 0;) {
      std::uint64_t rhs = (k == c) ? 1 : 0;
      for (std::uint32_t t = k + 1; t < r1; ++t)
        rhs = (rhs + static_cast<std::uint64_t>(p - 1) * nw.at(k, t) % p * u1inv.at(t, c)) % p;
      u1inv.at(k, c) = static_cast<std::uint32_t>(
          rhs * detail::mod_inverse(nw.at(k, k), p) % p);
    }
  }

  Dense sw_left(h, r1, p);
  for (std::uint32_t r = 0; r < h; ++r)
    for (std::uint32_t c = 0; c < r1; ++c) sw_left.at(r, c) = sw.at(r, c);
  Dense n1 = matmul(sw_left, u1inv);
  for (auto& x : n1.v) x = x == 0 ? 0 : p - x;  // negate

  Dense u1g1(r1, h, p);
  for (std::uint32_t r = 0; r < r1; ++r)
    for (std::uint32_t c = 0; c < h; ++c) u1g1.at(r, c) = nw.at(r, c);
  const Dense sw_new = madd(sw, matmul(n1, u1g1));

  Dense b1_top(r1, h, p);
  for (std::uint32_t r = 0; r < r1; ++r)
    for (std::uint32_t c = 0; c < h; ++c) b1_top.at(r, c) = b1.at(r, c);
  const Dense e1 = madd(se, matmul(n1, b1_top));

  Step1Expected exp;
  exp.r1 = r1;
  exp.n1 = n1;
  exp.post = Dense(n, n, p);
  for (std::uint32_t r = 0; r < h; ++r) {
    for (std::uint32_t c = 0; c < h; ++c) {
      exp.post.at(r, c) = nw.at(r, c);
      exp.post.at(r, h + c) = b1.at(r, c);
      exp.post.at(h + r, c) = sw_new.at(r, c);
      exp.post.at(h + r, h + c) = e1.at(r, c);
    }
  }
  return exp;
}

void check_step1_against_oracle(const LayoutMatrix& input, std::uint32_t threshold) {
  const Step1Expected expected = step1_oracle(input);
  LayoutMatrix live = input;
  TransformLog log;
  const TuStep1Result result = tu_step1(live.view(), threshold, log);

  REQUIRE(result.rank == expected.r1);
  const std::uint32_t n = input.n();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) REQUIRE(live.residue(i, j) == expected.post.at(i, j));
  for (std::uint32_t x = 0; x < result.half; ++x)
    for (std::uint32_t k = 0; k < result.rank; ++k)
      REQUIRE(result.n1_at(x, k) == expected.n1.at(x, k));

  // log replay reproduces the step
  REQUIRE(replay_log(input, log).cartesian_equal(live));
}

void check_a1_shape(const LayoutMatrix& after, std::uint32_t r) {
  const std::uint32_t h = after.n() / 2;
  // U1 upper triangular with nonzero diagonal
  for (std::uint32_t k = 0; k < r; ++k) REQUIRE(after.residue(k, k) != 0);
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = 0; j < i; ++j) REQUIRE(after.residue(i, j) == 0);
  // NW rows r..h are zero across the full NW width
  for (std::uint32_t i = r; i < h; ++i)
    for (std::uint32_t j = 0; j < h; ++j) REQUIRE(after.residue(i, j) == 0);
  // SW's first r columns are zero
  for (std::uint32_t i = h; i < after.n(); ++i)
    for (std::uint32_t j = 0; j < r; ++j) REQUIRE(after.residue(i, j) == 0);
}

void check_eliminated_shape(const TuResult& r) {
  const std::uint32_t n = r.eliminated.n();
  for (std::uint32_t k = 0; k < r.rank; ++k) REQUIRE(r.eliminated.residue(k, k) != 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n && j < i; ++j) REQUIRE(r.eliminated.residue(i, j) == 0);
  for (std::uint32_t i = r.rank; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) REQUIRE(r.eliminated.residue(i, j) == 0);
}

}  // namespace

TEST_CASE("base case: zero block, identity block, random block") {
  const GaloisField f7(7);
  LayoutMatrix zero(f7, LayoutSpec::row_major(2));
  TransformLog log;
  CHECK(base_case_eliminate(zero.view(), log) == 0);
  CHECK(log.empty());

  LayoutMatrix id(f7, LayoutSpec::row_major(2));
  for (std::uint32_t k = 0; k < 4; ++k) id.set_residue(k, k, 1);
  CHECK(base_case_eliminate(id.view(), log) == 4);
  CHECK(log.empty());  // pivots already in place, nothing below them

  LayoutMatrix rnd = LayoutMatrix::random(f7, LayoutSpec::row_major(2), 2);
  const std::uint32_t expected = rank_oracle(rnd);
  CHECK(base_case_eliminate(rnd.view(), log) == expected);
}

TEST_CASE("tu_step1 on the already-eliminated trivial input") {
  const GaloisField f2(2);
  LayoutMatrix m(f2, LayoutSpec::row_major(2));  // 4x4: NW = I, rest 0
  m.set_residue(0, 0, 1);
  m.set_residue(1, 1, 1);
  TransformLog log;
  const TuStep1Result r = tu_step1(m.view(), 1, log);
  CHECK(r.rank == 2);
  CHECK(log.empty());
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j)
      CHECK(m.residue(i, j) == ((i == j && i < 2) ? 1u : 0u));
  for (std::uint32_t x = 0; x < 2; ++x)
    for (std::uint32_t k = 0; k < 2; ++k) CHECK(r.n1_at(x, k) == 0);
}

TEST_CASE("tu_step1 matches the dense quadrant-step oracle") {
  check_step1_against_oracle(LayoutMatrix::random(GaloisField(2), LayoutSpec::row_major(3), 1),
                             2);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    check_step1_against_oracle(
        LayoutMatrix::random(GaloisField(7), LayoutSpec::row_major(3), seed), 2);
    check_step1_against_oracle(
        LayoutMatrix::random(GaloisField(2), LayoutSpec::row_major(4), seed), 4);
  }
  // threshold choice must not change the outcome
  const LayoutMatrix m = LayoutMatrix::random(GaloisField(7), LayoutSpec::row_major(4), 11);
  check_step1_against_oracle(m, 1);
  check_step1_against_oracle(m, 2);
  check_step1_against_oracle(m, 8);
}

TEST_CASE("tu_step1 with a singular NW exposes exactly its rank") {
  const GaloisField f7(7);
  const std::uint32_t h = 4, r = 2;
  LayoutMatrix m = LayoutMatrix::random(f7, LayoutSpec::row_major(3), 21);
  // overwrite NW with a rank-<=2 product X (4x2) * Y (2x4)
  SplitMix64 rng(77);
  Dense x(h, r, 7), y(r, h, 7);
  for (auto& e : x.v) e = rng.next_residue(7);
  for (auto& e : y.v) e = rng.next_residue(7);
  const Dense nw = matmul(x, y);
  for (std::uint32_t i = 0; i < h; ++i)
    for (std::uint32_t j = 0; j < h; ++j) m.set_residue(i, j, nw.at(i, j));
  const std::uint32_t nw_rank = dense_rank(nw);
  REQUIRE(nw_rank <= r);

  check_step1_against_oracle(m, 2);

  LayoutMatrix live = m;
  TransformLog log;
  const TuStep1Result res = tu_step1(live.view(), 2, log);
  CHECK(res.rank == nw_rank);
  check_a1_shape(live, res.rank);
}

TEST_CASE("tu_step1 with a zero NW leaves NE and SE untouched") {
  const GaloisField f7(7);
  LayoutMatrix m = LayoutMatrix::random(f7, LayoutSpec::row_major(3), 5);
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) m.set_residue(i, j, 0);
  const LayoutMatrix before = m;
  TransformLog log;
  const TuStep1Result res = tu_step1(m.view(), 2, log);
  CHECK(res.rank == 0);
  CHECK(log.empty());
  CHECK(m.cartesian_equal(before));
}

TEST_CASE("tu_decompose: identity and zero") {
  const GaloisField f2(2);
  LayoutMatrix id(f2, LayoutSpec::row_major(3));
  for (std::uint32_t k = 0; k < 8; ++k) id.set_residue(k, k, 1);
  const TuResult r = tu_decompose(id, 2);
  CHECK(r.rank == 8);
  CHECK(rank_oracle(id) == 8);
  CHECK(r.log.empty());
  CHECK(r.eliminated.cartesian_equal(id));

  const TuResult z = tu_decompose(LayoutMatrix(f2, LayoutSpec::row_major(3)), 2);
  CHECK(z.rank == 0);
  CHECK(z.log.empty());
}

TEST_CASE("tu_decompose: rank-1 outer product") {
  const GaloisField f7(7);
  LayoutMatrix m(f7, LayoutSpec::row_major(3));
  SplitMix64 rng(13);
  std::vector<std::uint32_t> u(8), w(8);
  for (auto& e : u) e = 1 + rng.next_residue(6);
  for (auto& e : w) e = 1 + rng.next_residue(6);
  for (std::uint32_t i = 0; i < 8; ++i)
    for (std::uint32_t j = 0; j < 8; ++j) m.set_residue(i, j, f7.mul(u[i], w[j]));
  const TuResult r = tu_decompose(m, 4);
  CHECK(r.rank == 1);
  CHECK(rank_oracle(m) == 1);
}

TEST_CASE("tu_decompose agrees with rank_oracle, replays, and is shaped") {
  for (std::uint32_t p : {2u, 7u}) {
    const GaloisField field(p);
    for (std::uint32_t m_exp : {3u, 4u, 5u}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const LayoutMatrix input =
            LayoutMatrix::random(field, LayoutSpec::row_major(m_exp), seed * 31 + p);
        const TuResult r = tu_decompose(input, 4);
        CHECK(r.rank == rank_oracle(input));
        CHECK(replay_log(input, r.log).cartesian_equal(r.eliminated));
        check_eliminated_shape(r);
      }
    }
  }
}

TEST_CASE("tu_decompose is layout-invariant bit for bit") {
  const GaloisField f2(2);
  const std::vector<LayoutSpec> backends = {
      LayoutSpec::row_major(4), LayoutSpec::morton(4), LayoutSpec::hilbert(4),
      LayoutSpec::morton_hybrid(4, 1), LayoutSpec::morton_hybrid(4, 2),
      LayoutSpec::morton_hybrid(4, 3)};
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const TuResult ref = tu_decompose(
        LayoutMatrix::random(f2, LayoutSpec::row_major(4), seed), 4);
    for (const LayoutSpec& spec : backends) {
      const TuResult r = tu_decompose(LayoutMatrix::random(f2, spec, seed), 4);
      CHECK(r.rank == ref.rank);
      CHECK(r.eliminated.checksum() == ref.eliminated.checksum());
      REQUIRE(r.log.size() == ref.log.size());
      for (std::size_t k = 0; k < r.log.size(); ++k) {
        CHECK(r.log[k].kind == ref.log[k].kind);
        CHECK(r.log[k].a == ref.log[k].a);
        CHECK(r.log[k].b == ref.log[k].b);
        CHECK(r.log[k].coeff == ref.log[k].coeff);
      }
    }
  }
}

TEST_CASE("tu_decompose results are threshold-insensitive") {
  const GaloisField f7(7);
  const LayoutMatrix input = LayoutMatrix::random(f7, LayoutSpec::row_major(5), 3);
  const TuResult ref = tu_decompose(input, 1);
  for (std::uint32_t t : {2u, 4u, 8u, 16u, 32u}) {
    const TuResult r = tu_decompose(input, t);
    CHECK(r.rank == ref.rank);
    CHECK(r.eliminated.cartesian_equal(ref.eliminated));
    CHECK(r.log.size() == ref.log.size());
  }
}

TEST_CASE("tu_decompose validates its preconditions") {
  const GaloisField f7(7);
  LayoutMatrix peano(f7, LayoutSpec::peano(2));  // side 9
  CHECK_THROWS_AS(tu_decompose(peano, 2), std::invalid_argument);
  LayoutMatrix m(f7, LayoutSpec::row_major(3));
  CHECK_THROWS_AS(tu_decompose(m, 3), std::invalid_argument);
  CHECK_THROWS_AS(tu_decompose(m, 16), std::invalid_argument);
  CHECK_THROWS_AS(tu_decompose(m, 0), std::invalid_argument);

  TransformLog log;
  CHECK_THROWS_AS(tu_step1(m.view().window(0, 0, 3, 3), 1, log), std::invalid_argument);
  CHECK_THROWS_AS(tu_step1(m.view(), 0, log), std::invalid_argument);
}

TEST_CASE("summary line and log dump formats") {
  const GaloisField f2(2);
  const LayoutMatrix m = LayoutMatrix::random(f2, LayoutSpec::morton_hybrid(3, 2), 4);
  const TuResult r = tu_decompose(m, 4);
  CHECK(tu_summary(r, 4) == "rank=" + std::to_string(r.rank) +
                                " n=8 layout=morton-hybrid(m=3,t=4) threshold=4");
  std::ostringstream log_text;
  write_log(log_text, {{TransformKind::kRowSwap, 1, 2, 0, 0},
                       {TransformKind::kRowAxpy, 3, 1, 5, 2}});
  CHECK(log_text.str() == "row-swap 1 2\nrow-axpy 3 1 5 2\n");
}

TEST_CASE("a generated matrix file feeds the decomposition consistently") {
  const LayoutMatrix m = LayoutMatrix::random(GaloisField(2), LayoutSpec::row_major(3), 1);
  std::stringstream io;
  m.save(io);
  const LayoutMatrix loaded = LayoutMatrix::load(io);
  CHECK(tu_decompose(loaded, 4).rank == rank_oracle(loaded));
  CHECK(tu_decompose(loaded, 4).rank == tu_decompose(m, 8).rank);
}

TEST_CASE("replay handles the full transform vocabulary") {
  const GaloisField f7(7);
  LayoutMatrix m(f7, LayoutSpec::row_major(2));
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) m.set_residue(i, j, (i * 4 + j) % 7);
  const TransformLog log = {
      {TransformKind::kRowSwap, 0, 2, 0, 0},
      {TransformKind::kColSwap, 1, 3, 0, 0},
      {TransformKind::kRowAxpy, 1, 0, 3, 1},
      {TransformKind::kRowScale, 2, 0, 4, 0},
  };
  const LayoutMatrix out = replay_log(m, log);
  // row swap then col swap
  LayoutMatrix expect = m;
  expect.swap_rows(0, 2);
  expect.swap_cols(1, 3);
  // axpy row1 += 3*row0 from column 1
  for (std::uint32_t c = 1; c < 4; ++c)
    expect.set_residue(1, c, f7.add(expect.residue(1, c), f7.mul(3, expect.residue(0, c))));
  // scale row2 by 4 from column 0
  for (std::uint32_t c = 0; c < 4; ++c)
    expect.set_residue(2, c, f7.mul(4, expect.residue(2, c)));
  CHECK(out.cartesian_equal(expect));
}
