#include "sfclab/matrix.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sfclab/rng.hpp"

namespace sfclab {

QuadrantView::QuadrantView(LayoutMatrix& parent, std::uint32_t origin_i, std::uint32_t origin_j,
                           std::uint32_t rows, std::uint32_t cols)
    : parent_(&parent), origin_i_(origin_i), origin_j_(origin_j), rows_(rows), cols_(cols) {
  if (origin_i + rows > parent.n() || origin_j + cols > parent.n())
    throw std::out_of_range("view exceeds parent bounds");
}

std::uint32_t QuadrantView::residue(std::uint32_t r, std::uint32_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("view access out of range");
  return parent_->residue(origin_i_ + r, origin_j_ + c);
}

void QuadrantView::set_residue(std::uint32_t r, std::uint32_t c, std::uint32_t value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("view access out of range");
  parent_->set_residue(origin_i_ + r, origin_j_ + c, value);
}

QuadrantView QuadrantView::window(std::uint32_t r0, std::uint32_t c0, std::uint32_t rows,
                                  std::uint32_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_)
    throw std::out_of_range("sub-window exceeds view bounds");
  return QuadrantView(*parent_, origin_i_ + r0, origin_j_ + c0, rows, cols);
}

QuadrantView QuadrantView::quadrant(Quadrant which) const {
  if (rows_ % 2 != 0 || cols_ % 2 != 0)
    throw std::invalid_argument("quadrant split requires even extent, got " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
  const std::uint32_t hr = rows_ / 2;
  const std::uint32_t hc = cols_ / 2;
  switch (which) {
    case Quadrant::kNW: return window(0, 0, hr, hc);
    case Quadrant::kNE: return window(0, hc, hr, hc);
    case Quadrant::kSW: return window(hr, 0, hr, hc);
    case Quadrant::kSE: return window(hr, hc, hr, hc);
  }
  throw std::invalid_argument("unknown quadrant");
}

LayoutMatrix::LayoutMatrix(GaloisField field, LayoutSpec spec)
    : field_(field), spec_(spec), n_(spec.side()) {
  spec_.validate();
  storage_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

LayoutMatrix LayoutMatrix::random(GaloisField field, LayoutSpec spec, std::uint64_t seed) {
  LayoutMatrix m(field, spec);
  SplitMix64 rng(seed);
  const std::uint32_t p = field.modulus();
  for (std::uint32_t i = 0; i < m.n_; ++i)
    for (std::uint32_t j = 0; j < m.n_; ++j)
      m.storage_[m.offset_of(i, j)] = rng.next_residue(p);
  return m;
}

void LayoutMatrix::check_range(std::uint32_t i, std::uint32_t j) const {
  if (i >= n_) detail::throw_axis_range('i', i, n_);
  if (j >= n_) detail::throw_axis_range('j', j, n_);
}

void LayoutMatrix::set_residue(std::uint32_t i, std::uint32_t j, std::uint32_t value) {
  check_range(i, j);
  if (value >= field_.modulus())
    throw std::out_of_range("residue " + std::to_string(value) + " not reduced mod " +
                            std::to_string(field_.modulus()));
  storage_[offset_of(i, j)] = value;
}

void LayoutMatrix::set(CartesianIndex idx, FieldElement value) {
  if (value.p != field_.modulus())
    throw std::domain_error("element of GF(" + std::to_string(value.p) +
                            ") stored into a GF(" + std::to_string(field_.modulus()) +
                            ") matrix");
  set_residue(idx.i, idx.j, value.value);
}

void LayoutMatrix::swap_rows(std::uint32_t i1, std::uint32_t i2) {
  check_range(i1, 0);
  check_range(i2, 0);
  if (i1 == i2) return;
  for (std::uint32_t j = 0; j < n_; ++j)
    std::swap(storage_[offset_of(i1, j)], storage_[offset_of(i2, j)]);
}

void LayoutMatrix::swap_cols(std::uint32_t j1, std::uint32_t j2) {
  check_range(0, j1);
  check_range(0, j2);
  if (j1 == j2) return;
  for (std::uint32_t i = 0; i < n_; ++i)
    std::swap(storage_[offset_of(i, j1)], storage_[offset_of(i, j2)]);
}

LayoutMatrix LayoutMatrix::relayout(const LayoutSpec& target) const {
  if (target.side() != n_)
    throw std::invalid_argument("relayout target side " + std::to_string(target.side()) +
                                " != matrix side " + std::to_string(n_));
  LayoutMatrix out(field_, target);
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = 0; j < n_; ++j)
      out.storage_[out.offset_of(i, j)] = storage_[offset_of(i, j)];
  return out;
}

std::uint64_t LayoutMatrix::checksum() const {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a offset basis
  constexpr std::uint64_t kPrime = 1099511628211ull;
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      std::uint32_t v = storage_[offset_of(i, j)];
      for (int b = 0; b < 4; ++b) {
        h = (h ^ (v & 0xFF)) * kPrime;
        v >>= 8;
      }
    }
  }
  return h;
}

bool LayoutMatrix::cartesian_equal(const LayoutMatrix& other) const {
  if (n_ != other.n_ || field_.modulus() != other.field_.modulus()) return false;
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = 0; j < n_; ++j)
      if (storage_[offset_of(i, j)] != other.storage_[other.offset_of(i, j)]) return false;
  return true;
}

void LayoutMatrix::save(std::ostream& out) const {
  out << "sfc-matrix v1 p=" << field_.modulus() << " n=" << n_ << '\n';
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (j) out << ' ';
      out << storage_[offset_of(i, j)];
    }
    out << '\n';
  }
}

void LayoutMatrix::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  save(out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

namespace {

bool is_power_of(std::uint32_t n, std::uint32_t base, std::uint32_t& exp) {
  exp = 0;
  std::uint64_t v = 1;
  while (v < n) {
    v *= base;
    ++exp;
  }
  return v == n;
}

}  // namespace

LayoutMatrix LayoutMatrix::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("matrix file: missing header");
  std::istringstream header(line);
  std::string magic, version, p_field, n_field;
  header >> magic >> version >> p_field >> n_field;
  if (magic != "sfc-matrix" || version != "v1" || p_field.rfind("p=", 0) != 0 ||
      n_field.rfind("n=", 0) != 0)
    throw std::runtime_error("matrix file: bad header '" + line + "'");
  const auto p = static_cast<std::uint32_t>(std::stoul(p_field.substr(2)));
  const auto n = static_cast<std::uint32_t>(std::stoul(n_field.substr(2)));

  std::uint32_t m = 0;
  LayoutSpec spec;
  if (is_power_of(n, 2, m)) {
    spec = LayoutSpec::row_major(m);
  } else if (is_power_of(n, 3, m)) {
    spec = LayoutSpec::peano(m);
  } else {
    throw std::runtime_error("matrix file: side " + std::to_string(n) +
                             " is neither 2^m nor 3^m");
  }

  LayoutMatrix out(GaloisField(p), spec);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint64_t v = 0;
      if (!(in >> v)) throw std::runtime_error("matrix file: truncated at row " +
                                               std::to_string(i));
      if (v >= p)
        throw std::runtime_error("matrix file: entry " + std::to_string(v) +
                                 " not reduced mod " + std::to_string(p));
      out.storage_[out.offset_of(i, j)] = static_cast<std::uint32_t>(v);
    }
  }
  return out;
}

LayoutMatrix LayoutMatrix::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load(in);
}

LayoutMatrix::RowColRange LayoutMatrix::row_iter(std::uint32_t i) const {
  check_range(i, 0);
  return RowColRange(*this, i, true);
}

LayoutMatrix::RowColRange LayoutMatrix::col_iter(std::uint32_t j) const {
  check_range(0, j);
  return RowColRange(*this, j, false);
}

}  // namespace sfclab
