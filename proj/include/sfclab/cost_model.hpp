#ifndef SFCLAB_COST_MODEL_HPP
#define SFCLAB_COST_MODEL_HPP

// Deterministic operation accounting for the codecs. The counters come from
// instantiating the shared algorithm bodies of codec_core.hpp with a tallying
// operation policy, so the counted result always equals the fast path and the
// counts can be audited against the algorithm text one operator at a time.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sfclab/layout.hpp"

namespace sfclab {

struct OpCounter {
  std::uint64_t bit_ops = 0;        // &, |, <<, >>
  std::uint64_t int_ops = 0;        // +, *, /, % (Peano's base-3 work)
  std::uint64_t table_lookups = 0;  // state-table reads

  friend bool operator==(const OpCounter& a, const OpCounter& b) {
    return a.bit_ops == b.bit_ops && a.int_ops == b.int_ops &&
           a.table_lookups == b.table_lookups;
  }
};

/// Same contract and result as encode()/decode(), plus the operation tally.
std::pair<LinearIndex, OpCounter> counted_encode(CartesianIndex idx, const LayoutSpec& spec);
std::pair<CartesianIndex, OpCounter> counted_decode(LinearIndex z, const LayoutSpec& spec);

struct CostRow {
  std::string layout;
  std::uint32_t m = 0;
  std::uint32_t beta = 0;
  OpCounter encode;
  OpCounter decode;
};

/// One row per spec; counts are input-independent (straight-line codecs, and
/// the iterative ones loop m times regardless of the value), so they are
/// measured at the origin cell.
std::vector<CostRow> report_counts(const std::vector<LayoutSpec>& specs);

/// CSV: layout,m,beta,encode_bit_ops,decode_bit_ops,encode_lookups,
/// decode_lookups,encode_int_ops,decode_int_ops
void write_counts_csv(std::ostream& out, const std::vector<CostRow>& rows);

}  // namespace sfclab

#endif  // SFCLAB_COST_MODEL_HPP
