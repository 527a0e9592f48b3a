#ifndef SFCLAB_CODECS_HPP
#define SFCLAB_CODECS_HPP

// Index conversion between Cartesian (i,j) and curve-linear z for all five
// layouts, plus the recursive layout-generation oracle used for testing.
// All functions are pure; tables are immutable after construction, so
// concurrent use is unrestricted.
//
// Range violations throw std::out_of_range with the offending axis named;
// calling a codec with a spec for a different curve throws
// std::invalid_argument.

#include <cstdint>
#include <vector>

#include "sfclab/codec_core.hpp"
#include "sfclab/layout.hpp"

namespace sfclab {

namespace detail {

[[noreturn]] void throw_axis_range(char axis, std::uint64_t value, std::uint64_t side);
[[noreturn]] void throw_linear_range(std::uint64_t z, std::uint64_t cells);
[[noreturn]] void throw_curve_mismatch(const char* op, const LayoutSpec& spec);

inline void check_coord(CartesianIndex idx, const LayoutSpec& spec) {
  const std::uint32_t n = spec.side();
  if (idx.i >= n) throw_axis_range('i', idx.i, n);
  if (idx.j >= n) throw_axis_range('j', idx.j, n);
}

inline void check_linear(LinearIndex z, const LayoutSpec& spec) {
  if (z >= spec.cell_count()) throw_linear_range(z, spec.cell_count());
}

inline void check_curve(const LayoutSpec& spec, Curve expected, const char* op) {
  if (spec.curve != expected) throw_curve_mismatch(op, spec);
}

}  // namespace detail

inline LinearIndex rm_encode(CartesianIndex idx, const LayoutSpec& spec) {
  detail::check_curve(spec, Curve::kRowMajor, "rm_encode");
  detail::check_coord(idx, spec);
  detail::PlainOps ops;
  return detail::rm_encode_core(idx.i, idx.j, spec.m, ops);
}

inline CartesianIndex rm_decode(LinearIndex z, const LayoutSpec& spec) {
  detail::check_curve(spec, Curve::kRowMajor, "rm_decode");
  detail::check_linear(z, spec);
  detail::PlainOps ops;
  return detail::rm_decode_core(z, spec.m, ops);
}

/// Spreads the bits of x so a zero sits between every pair: bit k of x lands
/// at bit 2k. Input must fit the profile width (16 or 32 bits).
std::uint64_t dilate(std::uint32_t x, DilationProfile profile = DilationProfile::kPaper16);

/// Inverse of dilate on in-range inputs; stray odd bits are absorbed by the
/// mask cascade.
std::uint32_t undilate(std::uint64_t x, DilationProfile profile = DilationProfile::kPaper16);

inline LinearIndex morton_encode(CartesianIndex idx, const LayoutSpec& spec) {
  detail::check_curve(spec, Curve::kMorton, "morton_encode");
  detail::check_coord(idx, spec);
  detail::PlainOps ops;
  return detail::morton_encode_core(idx.i, idx.j, spec.profile, ops);
}

inline CartesianIndex morton_decode(LinearIndex z, const LayoutSpec& spec) {
  detail::check_curve(spec, Curve::kMorton, "morton_decode");
  detail::check_linear(z, spec);
  detail::PlainOps ops;
  return detail::morton_decode_core(z, spec.profile, ops);
}

inline LinearIndex mh_encode(CartesianIndex idx, const LayoutSpec& spec) {
  detail::check_curve(spec, Curve::kMortonHybrid, "mh_encode");
  spec.validate();
  detail::check_coord(idx, spec);
  detail::PlainOps ops;
  return detail::mh_encode_core(idx.i, idx.j, spec.beta, spec.profile, ops);
}

inline CartesianIndex mh_decode(LinearIndex z, const LayoutSpec& spec) {
  detail::check_curve(spec, Curve::kMortonHybrid, "mh_decode");
  spec.validate();
  detail::check_linear(z, spec);
  detail::PlainOps ops;
  return detail::mh_decode_core(z, spec.beta, spec.profile, ops);
}

inline LinearIndex hilbert_encode(CartesianIndex idx, const LayoutSpec& spec,
                                  const HilbertTables& tables = HilbertTables::paper()) {
  detail::check_curve(spec, Curve::kHilbert, "hilbert_encode");
  detail::check_coord(idx, spec);
  detail::PlainOps ops;
  return detail::hilbert_encode_core(idx.i, idx.j, spec.m, spec.initial_pattern, tables, ops);
}

inline CartesianIndex hilbert_decode(LinearIndex z, const LayoutSpec& spec,
                                     const HilbertTables& tables = HilbertTables::paper()) {
  detail::check_curve(spec, Curve::kHilbert, "hilbert_decode");
  detail::check_linear(z, spec);
  detail::PlainOps ops;
  return detail::hilbert_decode_core(z, spec.m, spec.initial_pattern, tables, ops);
}

inline LinearIndex peano_encode(CartesianIndex idx, const LayoutSpec& spec,
                                const PeanoTables& tables = PeanoTables::serpentine()) {
  detail::check_curve(spec, Curve::kPeano, "peano_encode");
  detail::check_coord(idx, spec);
  detail::PlainOps ops;
  return detail::peano_encode_core(idx.i, idx.j, spec.m, tables, ops);
}

inline CartesianIndex peano_decode(LinearIndex z, const LayoutSpec& spec,
                                   const PeanoTables& tables = PeanoTables::serpentine()) {
  detail::check_curve(spec, Curve::kPeano, "peano_decode");
  detail::check_linear(z, spec);
  detail::PlainOps ops;
  return detail::peano_decode_core(z, spec.m, tables, ops);
}

/// Curve-dispatching entry points.
LinearIndex encode(CartesianIndex idx, const LayoutSpec& spec);
CartesianIndex decode(LinearIndex z, const LayoutSpec& spec);

/// Builds the full cell -> linear-index map by direct recursive refinement
/// (subdividing quadrants/ninths in pattern order, no bit arithmetic).
/// Result is indexed by i*side + j. Limited to test scales (m <= 6 binary,
/// m <= 4 Peano); larger specs throw std::invalid_argument.
std::vector<LinearIndex> generate_layout_oracle(const LayoutSpec& spec);

}  // namespace sfclab

#endif  // SFCLAB_CODECS_HPP
