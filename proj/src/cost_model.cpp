#include "sfclab/cost_model.hpp"

#include <ostream>

#include "sfclab/codec_core.hpp"
#include "sfclab/codecs.hpp"

namespace sfclab {

namespace {

// Tallying twin of detail::PlainOps; same algorithm bodies, one count per
// operator application.
struct CountingOps {
  OpCounter c;

  std::uint64_t shl(std::uint64_t a, unsigned s) { ++c.bit_ops; return a << s; }
  std::uint64_t shr(std::uint64_t a, unsigned s) { ++c.bit_ops; return a >> s; }
  std::uint64_t band(std::uint64_t a, std::uint64_t b) { ++c.bit_ops; return a & b; }
  std::uint64_t bor(std::uint64_t a, std::uint64_t b) { ++c.bit_ops; return a | b; }
  std::uint64_t idiv(std::uint64_t a, std::uint64_t b) { ++c.int_ops; return a / b; }
  std::uint64_t imod(std::uint64_t a, std::uint64_t b) { ++c.int_ops; return a % b; }
  std::uint64_t imul(std::uint64_t a, std::uint64_t b) { ++c.int_ops; return a * b; }
  std::uint64_t iadd(std::uint64_t a, std::uint64_t b) { ++c.int_ops; return a + b; }
  std::uint32_t fetch(std::uint8_t v) { ++c.table_lookups; return v; }
};

}  // namespace

std::pair<LinearIndex, OpCounter> counted_encode(CartesianIndex idx, const LayoutSpec& spec) {
  spec.validate();
  detail::check_coord(idx, spec);
  CountingOps ops;
  LinearIndex z = 0;
  switch (spec.curve) {
    case Curve::kRowMajor:
      z = detail::rm_encode_core(idx.i, idx.j, spec.m, ops);
      break;
    case Curve::kMorton:
      z = detail::morton_encode_core(idx.i, idx.j, spec.profile, ops);
      break;
    case Curve::kMortonHybrid:
      z = detail::mh_encode_core(idx.i, idx.j, spec.beta, spec.profile, ops);
      break;
    case Curve::kHilbert:
      z = detail::hilbert_encode_core(idx.i, idx.j, spec.m, spec.initial_pattern,
                                      HilbertTables::paper(), ops);
      break;
    case Curve::kPeano:
      z = detail::peano_encode_core(idx.i, idx.j, spec.m, PeanoTables::serpentine(), ops);
      break;
  }
  return {z, ops.c};
}

std::pair<CartesianIndex, OpCounter> counted_decode(LinearIndex z, const LayoutSpec& spec) {
  spec.validate();
  detail::check_linear(z, spec);
  CountingOps ops;
  CartesianIndex idx;
  switch (spec.curve) {
    case Curve::kRowMajor:
      idx = detail::rm_decode_core(z, spec.m, ops);
      break;
    case Curve::kMorton:
      idx = detail::morton_decode_core(z, spec.profile, ops);
      break;
    case Curve::kMortonHybrid:
      idx = detail::mh_decode_core(z, spec.beta, spec.profile, ops);
      break;
    case Curve::kHilbert:
      idx = detail::hilbert_decode_core(z, spec.m, spec.initial_pattern, HilbertTables::paper(),
                                        ops);
      break;
    case Curve::kPeano:
      idx = detail::peano_decode_core(z, spec.m, PeanoTables::serpentine(), ops);
      break;
  }
  return {idx, ops.c};
}

std::vector<CostRow> report_counts(const std::vector<LayoutSpec>& specs) {
  std::vector<CostRow> rows;
  rows.reserve(specs.size());
  for (const auto& spec : specs) {
    CostRow row;
    row.layout = curve_name(spec.curve);
    row.m = spec.m;
    row.beta = spec.curve == Curve::kMortonHybrid ? spec.beta : 0;
    row.encode = counted_encode({0, 0}, spec).second;
    row.decode = counted_decode(0, spec).second;
    rows.push_back(row);
  }
  return rows;
}

void write_counts_csv(std::ostream& out, const std::vector<CostRow>& rows) {
  out << "layout,m,beta,encode_bit_ops,decode_bit_ops,encode_lookups,decode_lookups,"
         "encode_int_ops,decode_int_ops\n";
  for (const auto& r : rows) {
    out << r.layout << ',' << r.m << ',' << r.beta << ',' << r.encode.bit_ops << ','
        << r.decode.bit_ops << ',' << r.encode.table_lookups << ',' << r.decode.table_lookups
        << ',' << r.encode.int_ops << ',' << r.decode.int_ops << '\n';
  }
}

}  // namespace sfclab
