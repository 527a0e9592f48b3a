#ifndef SFCLAB_MATRIX_HPP
#define SFCLAB_MATRIX_HPP

// Layout-aware finite-field matrix container: an n x n matrix over GF(p)
// stored in one linear array whose offset semantics come from a LayoutSpec.
// Every access goes through the index codecs; programs written against the
// Cartesian accessors observe identical state under every layout.
//
// Concurrency: one writer or many concurrent readers; disjoint views of one
// parent may be written concurrently only if the caller guarantees
// disjointness. No internal locking.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "sfclab/codecs.hpp"
#include "sfclab/field.hpp"
#include "sfclab/layout.hpp"

namespace sfclab {

enum class Quadrant : std::uint8_t { kNW, kNE, kSW, kSE };

class LayoutMatrix;

/// Non-copying window onto a sub-matrix. Local (r, c) translates to parent
/// (origin_i + r, origin_j + c) before encoding.
class QuadrantView {
 public:
  QuadrantView(LayoutMatrix& parent, std::uint32_t origin_i, std::uint32_t origin_j,
               std::uint32_t rows, std::uint32_t cols);

  std::uint32_t origin_i() const { return origin_i_; }
  std::uint32_t origin_j() const { return origin_j_; }
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  LayoutMatrix& parent() const { return *parent_; }

  std::uint32_t residue(std::uint32_t r, std::uint32_t c) const;
  void set_residue(std::uint32_t r, std::uint32_t c, std::uint32_t value);

  /// Sub-window at (r0, c0) of the given extent.
  QuadrantView window(std::uint32_t r0, std::uint32_t c0, std::uint32_t rows,
                      std::uint32_t cols) const;

  /// One of the four half-splits; extent must be even in both dimensions,
  /// else std::invalid_argument.
  QuadrantView quadrant(Quadrant which) const;

 private:
  LayoutMatrix* parent_;
  std::uint32_t origin_i_, origin_j_, rows_, cols_;
};

class LayoutMatrix {
 public:
  /// Zero-filled n x n matrix, n = spec.side().
  LayoutMatrix(GaloisField field, LayoutSpec spec);

  /// Matrix whose row-major Cartesian scan is the given seeded SplitMix64
  /// residue stream; same (field, side, seed) gives the same Cartesian image
  /// under every layout.
  static LayoutMatrix random(GaloisField field, LayoutSpec spec, std::uint64_t seed);

  std::uint32_t n() const { return n_; }
  const LayoutSpec& spec() const { return spec_; }
  const GaloisField& field() const { return field_; }

  /// Offset of Cartesian (i, j) in storage, i.e. encode(i, j, spec).
  LinearIndex offset_of(std::uint32_t i, std::uint32_t j) const {
    detail::PlainOps ops;
    switch (spec_.curve) {
      case Curve::kRowMajor:
        return detail::rm_encode_core(i, j, spec_.m, ops);
      case Curve::kMorton:
        return detail::morton_encode_core(i, j, spec_.profile, ops);
      case Curve::kMortonHybrid:
        return detail::mh_encode_core(i, j, spec_.beta, spec_.profile, ops);
      case Curve::kHilbert:
        return detail::hilbert_encode_core(i, j, spec_.m, spec_.initial_pattern,
                                           HilbertTables::paper(), ops);
      case Curve::kPeano:
        return detail::peano_encode_core(i, j, spec_.m, PeanoTables::serpentine(), ops);
    }
    return 0;  // unreachable
  }

  std::uint32_t residue(std::uint32_t i, std::uint32_t j) const {
    check_range(i, j);
    return storage_[offset_of(i, j)];
  }
  void set_residue(std::uint32_t i, std::uint32_t j, std::uint32_t value);

  FieldElement get(CartesianIndex idx) const {
    return {residue(idx.i, idx.j), field_.modulus()};
  }
  void set(CartesianIndex idx, FieldElement value);

  void swap_rows(std::uint32_t i1, std::uint32_t i2);
  void swap_cols(std::uint32_t j1, std::uint32_t j2);

  /// Same Cartesian image under the target spec (target side must equal n;
  /// else std::invalid_argument).
  LayoutMatrix relayout(const LayoutSpec& target) const;

  QuadrantView view() { return QuadrantView(*this, 0, 0, n_, n_); }
  QuadrantView quadrant(Quadrant which) { return view().quadrant(which); }

  std::span<const std::uint32_t> storage() const { return storage_; }
  std::span<std::uint32_t> storage() { return storage_; }

  /// 64-bit FNV-1a over the row-major Cartesian scan, each residue as four
  /// little-endian bytes.
  std::uint64_t checksum() const;

  bool cartesian_equal(const LayoutMatrix& other) const;

  /// Text format: header `sfc-matrix v1 p=<modulus> n=<side>`, then n lines
  /// of n space-separated residues in row-major order, regardless of the
  /// in-memory layout.
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;

  /// Loads the text format; the container layout is row-major for 2^m sides
  /// and Peano for 3^m sides. Malformed input throws std::runtime_error.
  static LayoutMatrix load(std::istream& in);
  static LayoutMatrix load_file(const std::string& path);

  // Row/column traversal: visits exactly n cells, ascending j (resp. i);
  // each dereference performs one encode.
  class RowColIter {
   public:
    RowColIter(const LayoutMatrix& m, std::uint32_t fixed, std::uint32_t pos, bool row)
        : m_(&m), fixed_(fixed), pos_(pos), row_(row) {}
    std::pair<CartesianIndex, FieldElement> operator*() const {
      const CartesianIndex idx = row_ ? CartesianIndex{fixed_, pos_} : CartesianIndex{pos_, fixed_};
      return {idx, m_->get(idx)};
    }
    RowColIter& operator++() {
      ++pos_;
      return *this;
    }
    friend bool operator!=(const RowColIter& a, const RowColIter& b) { return a.pos_ != b.pos_; }

   private:
    const LayoutMatrix* m_;
    std::uint32_t fixed_, pos_;
    bool row_;
  };

  class RowColRange {
   public:
    RowColRange(const LayoutMatrix& m, std::uint32_t fixed, bool row)
        : m_(&m), fixed_(fixed), row_(row) {}
    RowColIter begin() const { return {*m_, fixed_, 0, row_}; }
    RowColIter end() const { return {*m_, fixed_, m_->n(), row_}; }

   private:
    const LayoutMatrix* m_;
    std::uint32_t fixed_;
    bool row_;
  };

  RowColRange row_iter(std::uint32_t i) const;
  RowColRange col_iter(std::uint32_t j) const;

 private:
  void check_range(std::uint32_t i, std::uint32_t j) const;

  GaloisField field_;
  LayoutSpec spec_;
  std::uint32_t n_;
  std::vector<std::uint32_t> storage_;
};

}  // namespace sfclab

#endif  // SFCLAB_MATRIX_HPP
