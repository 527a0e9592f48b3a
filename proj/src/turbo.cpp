#include "sfclab/turbo.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace sfclab {

namespace {

bool is_power_of_two(std::uint32_t v) { return v != 0 && (v & (v - 1)) == 0; }

inline std::uint32_t& cell(LayoutMatrix& a, std::uint32_t i, std::uint32_t j) {
  return a.storage()[a.offset_of(i, j)];
}

/// row dst += coeff * row src over columns [col_from, n). The source row is
/// a pivot row, zero left of its pivot column, so the restriction loses
/// nothing; recording col_from makes replay exact either way.
void apply_axpy(LayoutMatrix& a, std::uint32_t dst, std::uint32_t src, std::uint32_t coeff,
                std::uint32_t col_from) {
  const GaloisField& f = a.field();
  const std::uint32_t n = a.n();
  if (f.modulus() == 2) {
    // GF(2): the only nonzero coefficient is 1, so the update is a row XOR.
    for (std::uint32_t c = col_from; c < n; ++c) cell(a, dst, c) ^= cell(a, src, c);
    return;
  }
  for (std::uint32_t c = col_from; c < n; ++c) {
    const std::uint32_t s = cell(a, src, c);
    if (s == 0) continue;
    std::uint32_t& d = cell(a, dst, c);
    d = f.add(d, f.mul(coeff, s));
  }
}

/// Column-pivoted, row-pivoted elimination of one column panel.
///
/// Scans panel positions [panel_c0, panel_c0 + width) left to right. For
/// each position, the pivot is the topmost nonzero in rows
/// [row_cursor, row_end); it is swapped to (row_cursor, col_cursor) and
/// everything below it within [row_cursor, row_end) is eliminated, with row
/// updates running from the pivot column to the matrix's right edge (this is
/// what turns NE into B1 and SE into E1 as the panel is processed). Returns
/// the number of pivots found; the cursors advance by that amount.
std::uint32_t eliminate_panel(LayoutMatrix& a, TransformLog& log, std::uint32_t row_cursor,
                              std::uint32_t col_cursor, std::uint32_t panel_c0,
                              std::uint32_t width, std::uint32_t row_end) {
  const GaloisField& f = a.field();
  std::uint32_t pivots = 0;
  for (std::uint32_t pos = panel_c0; pos < panel_c0 + width && row_cursor < row_end; ++pos) {
    std::uint32_t pivot_row = row_end;
    for (std::uint32_t r = row_cursor; r < row_end; ++r) {
      if (cell(a, r, pos) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row == row_end) continue;  // dead column
    if (pivot_row != row_cursor) {
      a.swap_rows(row_cursor, pivot_row);
      log.push_back({TransformKind::kRowSwap, row_cursor, pivot_row, 0, 0});
    }
    if (pos != col_cursor) {
      a.swap_cols(col_cursor, pos);
      log.push_back({TransformKind::kColSwap, col_cursor, pos, 0, 0});
    }
    const std::uint32_t pivot_inv = f.inv(cell(a, row_cursor, col_cursor));
    for (std::uint32_t x = row_cursor + 1; x < row_end; ++x) {
      const std::uint32_t v = cell(a, x, col_cursor);
      if (v == 0) continue;
      const std::uint32_t coeff = f.neg(f.mul(v, pivot_inv));
      apply_axpy(a, x, row_cursor, coeff, col_cursor);
      log.push_back({TransformKind::kRowAxpy, x, row_cursor, coeff, col_cursor});
    }
    ++row_cursor;
    ++col_cursor;
    ++pivots;
  }
  return pivots;
}

/// Step-1-shaped recursion over column panels: eliminate through the leading
/// half (further halved down to the threshold), then recurse on the trailing
/// panel with the cursor advanced past the pivots just placed.
std::uint32_t tu_panels(LayoutMatrix& a, TransformLog& log, std::uint32_t row_cursor,
                        std::uint32_t col_cursor, std::uint32_t panel_c0, std::uint32_t width,
                        std::uint32_t threshold, std::uint32_t row_end) {
  if (width <= threshold)
    return eliminate_panel(a, log, row_cursor, col_cursor, panel_c0, width, row_end);
  const std::uint32_t half = width / 2;
  const std::uint32_t r1 =
      tu_panels(a, log, row_cursor, col_cursor, panel_c0, half, threshold, row_end);
  const std::uint32_t r2 = tu_panels(a, log, row_cursor + r1, col_cursor + r1, panel_c0 + half,
                                     half, threshold, row_end);
  return r1 + r2;
}

}  // namespace

std::uint32_t base_case_eliminate(QuadrantView view, TransformLog& log) {
  return eliminate_panel(view.parent(), log, view.origin_i(), view.origin_j(), view.origin_j(),
                         view.cols(), view.origin_i() + view.rows());
}

TuStep1Result tu_step1(QuadrantView view, std::uint32_t threshold, TransformLog& log) {
  if (view.rows() != view.cols())
    throw std::invalid_argument("tu_step1 requires a square view");
  if (view.rows() % 2 != 0)
    throw std::invalid_argument("tu_step1 requires an even extent, got " +
                                std::to_string(view.rows()));
  if (threshold < 1) throw std::invalid_argument("threshold must be >= 1");

  LayoutMatrix& a = view.parent();
  const GaloisField& f = a.field();
  const std::uint32_t h = view.rows() / 2;
  const std::uint32_t top = view.origin_i();
  const std::uint32_t left = view.origin_j();

  // Recursive TU of NW: pivot search confined to NW's rows, row updates
  // streaming across the full width (B1 = L1 * NE falls out of them).
  const std::uint32_t r1 = tu_panels(a, log, top, left, left, h, threshold, top + h);

  // N1 sweep: zero SW under U1. Processing pivot columns left to right is
  // the forward triangular solve of N1 * U1 = -SW, so U1 is never inverted;
  // the same row operations update I1 and E1.
  TuStep1Result result;
  result.rank = r1;
  result.half = h;
  result.n1.assign(static_cast<std::size_t>(h) * r1, 0);
  for (std::uint32_t x = 0; x < h; ++x) {
    const std::uint32_t row = top + h + x;
    for (std::uint32_t k = 0; k < r1; ++k) {
      const std::uint32_t v = cell(a, row, left + k);
      if (v == 0) continue;
      const std::uint32_t pivot = cell(a, top + k, left + k);
      const std::uint32_t coeff = f.neg(f.mul(v, f.inv(pivot)));
      apply_axpy(a, row, top + k, coeff, left + k);
      log.push_back({TransformKind::kRowAxpy, row, top + k, coeff, left + k});
      result.n1[static_cast<std::size_t>(x) * r1 + k] = coeff;
    }
  }
  return result;
}

TuResult tu_decompose(const LayoutMatrix& m, std::uint32_t threshold) {
  const std::uint32_t n = m.n();
  if (!is_power_of_two(n))
    throw std::invalid_argument("tu_decompose requires a power-of-two side, got " +
                                std::to_string(n));
  if (!is_power_of_two(threshold) || threshold > n)
    throw std::invalid_argument("threshold must be a power of two in [1, n], got " +
                                std::to_string(threshold));
  TuResult result{0, m, {}};
  result.rank = tu_panels(result.eliminated, result.log, 0, 0, 0, n, threshold, n);
  return result;
}

std::uint32_t rank_oracle(const LayoutMatrix& m) {
  const std::uint32_t n = m.n();
  const std::uint32_t p = m.field().modulus();
  std::vector<std::uint32_t> d(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      d[static_cast<std::size_t>(i) * n + j] = m.residue(i, j);

  auto at = [&](std::uint32_t i, std::uint32_t j) -> std::uint32_t& {
    return d[static_cast<std::size_t>(i) * n + j];
  };
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < n && rank < n; ++col) {
    std::uint32_t pr = n;
    for (std::uint32_t r = rank; r < n; ++r) {
      if (at(r, col) != 0) {
        pr = r;
        break;
      }
    }
    if (pr == n) continue;
    if (pr != rank)
      for (std::uint32_t c = 0; c < n; ++c) std::swap(at(rank, c), at(pr, c));
    const std::uint64_t inv = detail::mod_inverse(at(rank, col), p);
    for (std::uint32_t r = rank + 1; r < n; ++r) {
      if (at(r, col) == 0) continue;
      const std::uint64_t factor = p - (at(r, col) * inv) % p;
      for (std::uint32_t c = col; c < n; ++c)
        at(r, c) = static_cast<std::uint32_t>((at(r, c) + factor * at(rank, c)) % p);
    }
    ++rank;
  }
  return rank;
}

std::string tu_summary(const TuResult& result, std::uint32_t threshold) {
  return "rank=" + std::to_string(result.rank) + " n=" + std::to_string(result.eliminated.n()) +
         " layout=" + result.eliminated.spec().describe() +
         " threshold=" + std::to_string(threshold);
}

void write_log(std::ostream& out, const TransformLog& log) {
  for (const Transform& t : log) {
    switch (t.kind) {
      case TransformKind::kRowSwap:
        out << "row-swap " << t.a << ' ' << t.b << '\n';
        break;
      case TransformKind::kColSwap:
        out << "col-swap " << t.a << ' ' << t.b << '\n';
        break;
      case TransformKind::kRowAxpy:
        out << "row-axpy " << t.a << ' ' << t.b << ' ' << t.coeff << ' ' << t.col_from << '\n';
        break;
      case TransformKind::kRowScale:
        out << "row-scale " << t.a << ' ' << t.coeff << ' ' << t.col_from << '\n';
        break;
    }
  }
}

LayoutMatrix replay_log(const LayoutMatrix& original, const TransformLog& log) {
  LayoutMatrix a = original;
  const GaloisField& f = a.field();
  const std::uint32_t n = a.n();
  for (const Transform& t : log) {
    switch (t.kind) {
      case TransformKind::kRowSwap:
        a.swap_rows(t.a, t.b);
        break;
      case TransformKind::kColSwap:
        a.swap_cols(t.a, t.b);
        break;
      case TransformKind::kRowAxpy:
        apply_axpy(a, t.a, t.b, t.coeff, t.col_from);
        break;
      case TransformKind::kRowScale:
        for (std::uint32_t c = t.col_from; c < n; ++c) {
          std::uint32_t& v = cell(a, t.a, c);
          v = f.mul(v, t.coeff);
        }
        break;
    }
  }
  return a;
}

}  // namespace sfclab
