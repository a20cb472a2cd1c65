#include "ttt/tensor_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ttt/kernels.hpp"

namespace ttt {
namespace {

void check_partition(std::span<const Cell> row_cells, std::span<const Cell> col_cells) {
  std::array<int, kCells> seen{};
  for (auto group : {row_cells, col_cells}) {
    for (Cell c : group) {
      if (c < 1 || c > kCells) throw std::invalid_argument("cell out of range in grouping");
      if (seen[static_cast<std::size_t>(c - 1)]++ != 0) {
        throw std::invalid_argument("cell " + std::to_string(c) + " appears twice in grouping");
      }
    }
  }
  for (int n : seen) {
    if (n == 0) throw std::invalid_argument("grouping does not cover all nine cells");
  }
}

std::size_t pow3(std::size_t n) {
  std::size_t p = 1;
  while (n-- > 0) p *= 3;
  return p;
}

// Base-3 number spelled by `cells` of the board with the given code.
std::size_t group_index(std::uint32_t code, std::span<const Cell> cells) {
  std::array<std::uint32_t, kCells> digits{};
  for (auto& d : digits) {
    d = code % 3;
    code /= 3;
  }
  std::size_t idx = 0;
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
    idx = idx * 3 + digits[static_cast<std::size_t>(*it - 1)];
  }
  return idx;
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data size mismatch");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

DenseMatrix DenseMatrix::left_columns(std::size_t n) const {
  if (n > cols_) throw std::out_of_range("left_columns: too many columns");
  DenseMatrix out(rows_, n);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = (*this)(r, c);
  }
  return out;
}

DenseMatrix DenseMatrix::top_rows(std::size_t n) const {
  if (n > rows_) throw std::out_of_range("top_rows: too many rows");
  return DenseMatrix(n, cols_, std::vector<double>(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(n * cols_)));
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik != 0.0) kernels::axpy(aik, b.row(k), out);
    }
  }
  return c;
}

double frobenius_norm(std::span<const double> values) {
  return std::sqrt(kernels::sum_squares(values));
}

DenseMatrix matricize(std::span<const double> tensor, std::span<const Cell> row_cells,
                      std::span<const Cell> col_cells) {
  if (tensor.size() != static_cast<std::size_t>(kStateCount)) {
    throw std::invalid_argument("matricize expects a 3^9 tensor");
  }
  check_partition(row_cells, col_cells);
  DenseMatrix m(pow3(row_cells.size()), pow3(col_cells.size()));
  for (std::uint32_t code = 0; code < static_cast<std::uint32_t>(kStateCount); ++code) {
    m(group_index(code, row_cells), group_index(code, col_cells)) = tensor[code];
  }
  return m;
}

std::vector<double> dematricize(const DenseMatrix& m, std::span<const Cell> row_cells,
                                std::span<const Cell> col_cells) {
  check_partition(row_cells, col_cells);
  if (m.rows() != pow3(row_cells.size()) || m.cols() != pow3(col_cells.size())) {
    throw std::invalid_argument("dematricize: matrix shape does not match grouping");
  }
  std::vector<double> out(kStateCount);
  for (std::uint32_t code = 0; code < static_cast<std::uint32_t>(kStateCount); ++code) {
    out[code] = m(group_index(code, row_cells), group_index(code, col_cells));
  }
  return out;
}

Tensor3::Tensor3(std::array<std::size_t, 3> d, std::vector<double> values)
    : dims(d), data(std::move(values)) {
  if (data.size() != dims[0] * dims[1] * dims[2]) {
    throw std::invalid_argument("Tensor3 data size mismatch");
  }
}

Tensor3 mode_product(const Tensor3& t, int mode, const DenseMatrix& a) {
  if (mode < 0 || mode > 2) throw std::invalid_argument("mode must be 0, 1 or 2");
  const auto [d0, d1, d2] = t.dims;
  if (a.cols() != t.dims[static_cast<std::size_t>(mode)]) {
    throw std::invalid_argument("mode_product: matrix columns do not match tensor mode");
  }
  const std::size_t p = a.rows();
  std::span<const double> src = t.data;

  if (mode == 0) {
    // Each mode-0 fibre is contiguous: y = A x per (j, k).
    Tensor3 y(p, d1, d2);
    for (std::size_t jk = 0; jk < d1 * d2; ++jk) {
      const auto fibre = src.subspan(jk * d0, d0);
      for (std::size_t q = 0; q < p; ++q) y.data[q + p * jk] = kernels::dot(a.row(q), fibre);
    }
    return y;
  }
  if (mode == 1) {
    Tensor3 y(d0, p, d2);
    std::span<double> dst = y.data;
    for (std::size_t k = 0; k < d2; ++k) {
      for (std::size_t q = 0; q < p; ++q) {
        auto out = dst.subspan(d0 * (q + p * k), d0);
        for (std::size_t j = 0; j < d1; ++j) {
          const double w = a(q, j);
          if (w != 0.0) kernels::axpy(w, src.subspan(d0 * (j + d1 * k), d0), out);
        }
      }
    }
    return y;
  }
  Tensor3 y(d0, d1, p);
  std::span<double> dst = y.data;
  const std::size_t slab = d0 * d1;
  for (std::size_t q = 0; q < p; ++q) {
    auto out = dst.subspan(slab * q, slab);
    for (std::size_t k = 0; k < d2; ++k) {
      const double w = a(q, k);
      if (w != 0.0) kernels::axpy(w, src.subspan(slab * k, slab), out);
    }
  }
  return y;
}

}  // namespace ttt
