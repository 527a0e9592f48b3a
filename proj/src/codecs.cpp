#include "sfclab/codecs.hpp"

#include <stdexcept>
#include <string>

namespace sfclab {

namespace detail {

void throw_axis_range(char axis, std::uint64_t value, std::uint64_t side) {
  throw std::out_of_range(std::string(axis == 'i' ? "row index i=" : "column index j=") +
                          std::to_string(value) + " out of range for side " +
                          std::to_string(side));
}

void throw_linear_range(std::uint64_t z, std::uint64_t cells) {
  throw std::out_of_range("linear index z=" + std::to_string(z) + " out of range for " +
                          std::to_string(cells) + " cells");
}

void throw_curve_mismatch(const char* op, const LayoutSpec& spec) {
  throw std::invalid_argument(std::string(op) + " called with a " + curve_name(spec.curve) +
                              " spec");
}

}  // namespace detail

std::uint64_t dilate(std::uint32_t x, DilationProfile profile) {
  if (profile == DilationProfile::kPaper16 && x >= (1u << 16))
    throw std::out_of_range("dilate input " + std::to_string(x) + " exceeds 16 bits (Paper16)");
  detail::PlainOps ops;
  return detail::dilate_core(x, profile, ops);
}

std::uint32_t undilate(std::uint64_t x, DilationProfile profile) {
  detail::PlainOps ops;
  return static_cast<std::uint32_t>(detail::undilate_core(x, profile, ops));
}

LinearIndex encode(CartesianIndex idx, const LayoutSpec& spec) {
  switch (spec.curve) {
    case Curve::kRowMajor: return rm_encode(idx, spec);
    case Curve::kHilbert: return hilbert_encode(idx, spec);
    case Curve::kPeano: return peano_encode(idx, spec);
    case Curve::kMorton: return morton_encode(idx, spec);
    case Curve::kMortonHybrid: return mh_encode(idx, spec);
  }
  throw std::invalid_argument("unknown curve");
}

CartesianIndex decode(LinearIndex z, const LayoutSpec& spec) {
  switch (spec.curve) {
    case Curve::kRowMajor: return rm_decode(z, spec);
    case Curve::kHilbert: return hilbert_decode(z, spec);
    case Curve::kPeano: return peano_decode(z, spec);
    case Curve::kMorton: return morton_decode(z, spec);
    case Curve::kMortonHybrid: return mh_decode(z, spec);
  }
  throw std::invalid_argument("unknown curve");
}

namespace {

// Hilbert generation rules as 2x2 displays: quadrant q (row-major position)
// gets pattern next[rho][q] and memory precedence prec[rho][q].
constexpr std::uint8_t U = 0, C = 1, D = 2, N = 3;
constexpr std::uint8_t kHilbertNext[4][4] = {
    {D, C, U, U}, {C, U, C, N}, {U, D, N, D}, {N, N, D, C}};
constexpr std::uint8_t kHilbertPrec[4][4] = {
    {0, 3, 1, 2}, {2, 3, 1, 0}, {0, 1, 3, 2}, {2, 1, 3, 0}};

void refine_hilbert(std::vector<LinearIndex>& out, std::uint32_t n, std::uint32_t i0,
                    std::uint32_t j0, std::uint32_t size, std::uint8_t rho, std::uint64_t z0) {
  if (size == 1) {
    out[static_cast<std::size_t>(i0) * n + j0] = z0;
    return;
  }
  const std::uint32_t half = size / 2;
  const std::uint64_t cells = static_cast<std::uint64_t>(half) * half;
  for (std::uint32_t q = 0; q < 4; ++q) {
    refine_hilbert(out, n, i0 + (q >> 1) * half, j0 + (q & 1) * half, half, kHilbertNext[rho][q],
                   z0 + kHilbertPrec[rho][q] * cells);
  }
}

void refine_morton(std::vector<LinearIndex>& out, std::uint32_t n, std::uint32_t i0,
                   std::uint32_t j0, std::uint32_t size, std::uint32_t truncation,
                   std::uint64_t z0) {
  if (size <= truncation) {
    // row-major block at the truncation size (1 for pure Morton)
    for (std::uint32_t r = 0; r < size; ++r)
      for (std::uint32_t c = 0; c < size; ++c)
        out[static_cast<std::size_t>(i0 + r) * n + j0 + c] =
            z0 + static_cast<std::uint64_t>(r) * size + c;
    return;
  }
  const std::uint32_t half = size / 2;
  const std::uint64_t cells = static_cast<std::uint64_t>(half) * half;
  for (std::uint32_t q = 0; q < 4; ++q) {
    refine_morton(out, n, i0 + (q >> 1) * half, j0 + (q & 1) * half, half, truncation,
                  z0 + q * cells);
  }
}

// Serpentine Peano refinement with the reflections applied directly: step s
// walks the canonical boustrophedon, parent flips map canonical ninths to
// real ones, and each child flips by the canonical parities.
void refine_peano(std::vector<LinearIndex>& out, std::uint32_t n, std::uint32_t i0,
                  std::uint32_t j0, std::uint32_t size, bool flip_i, bool flip_j,
                  std::uint64_t z0) {
  if (size == 1) {
    out[static_cast<std::size_t>(i0) * n + j0] = z0;
    return;
  }
  const std::uint32_t third = size / 3;
  const std::uint64_t cells = static_cast<std::uint64_t>(third) * third;
  for (std::uint32_t s = 0; s < 9; ++s) {
    const std::uint32_t cc = s / 3;
    const std::uint32_t cr = (cc % 2 == 0) ? s % 3 : 2 - s % 3;
    const std::uint32_t di = flip_i ? 2 - cr : cr;
    const std::uint32_t dj = flip_j ? 2 - cc : cc;
    refine_peano(out, n, i0 + di * third, j0 + dj * third, third, flip_i != ((cc & 1) != 0),
                 flip_j != ((cr & 1) != 0), z0 + s * cells);
  }
}

}  // namespace

std::vector<LinearIndex> generate_layout_oracle(const LayoutSpec& spec) {
  spec.validate();
  const std::uint32_t limit = spec.curve == Curve::kPeano ? 4 : 6;
  if (spec.m > limit) {
    throw std::invalid_argument("generate_layout_oracle is capped at m=" + std::to_string(limit) +
                                " for " + curve_name(spec.curve));
  }
  const std::uint32_t n = spec.side();
  std::vector<LinearIndex> out(static_cast<std::size_t>(n) * n, 0);
  switch (spec.curve) {
    case Curve::kRowMajor:
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          out[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint64_t>(i) * n + j;
      break;
    case Curve::kHilbert:
      refine_hilbert(out, n, 0, 0, n, static_cast<std::uint8_t>(spec.initial_pattern), 0);
      break;
    case Curve::kMorton:
      refine_morton(out, n, 0, 0, n, 1, 0);
      break;
    case Curve::kMortonHybrid:
      refine_morton(out, n, 0, 0, n, 1u << spec.beta, 0);
      break;
    case Curve::kPeano:
      refine_peano(out, n, 0, 0, n, false, false, 0);
      break;
  }
  return out;
}

}  // namespace sfclab
