#pragma once

// Dense linear algebra on the evaluation tensor: unfoldings of the 9th-order
// tensor, a one-sided Jacobi SVD, Frobenius norms and mode-n products on the
// 27 x 27 x 27 view.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ttt/game.hpp"

namespace ttt {

// Row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  DenseMatrix transposed() const;
  // Leading `n` columns / rows.
  DenseMatrix left_columns(std::size_t n) const;
  DenseMatrix top_rows(std::size_t n) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

double frobenius_norm(std::span<const double> values);
inline double frobenius_norm(const DenseMatrix& m) { return frobenius_norm(m.data()); }

// Unfolding of a 3^9 tensor. Entry (a, b) is the value of the state whose
// row cells spell `a` and column cells spell `b` in base 3, the first listed
// cell being least significant. The two lists must partition {1..9}.
DenseMatrix matricize(std::span<const double> tensor, std::span<const Cell> row_cells,
                      std::span<const Cell> col_cells);
std::vector<double> dematricize(const DenseMatrix& m, std::span<const Cell> row_cells,
                                std::span<const Cell> col_cells);

struct SvdFactors {
  DenseMatrix u;                        // m x k, orthonormal columns
  std::vector<double> singular_values;  // descending, k = min(m, n)
  DenseMatrix vt;                       // k x n, orthonormal rows

  DenseMatrix v() const { return vt.transposed(); }
  // U diag(sigma) Vt using the leading `rank` triplets.
  DenseMatrix reconstruct(std::size_t rank) const;
};

// One-sided (Hestenes) Jacobi with cyclic sweeps. A pair is rotated while
// |<a_i, a_j>| > 1e-14 * |a_i| |a_j|. Singular vectors for exactly-zero
// singular values are completed to an orthonormal set. Each singular pair is
// signed so that the largest-magnitude entry of the U column is positive.
// Throws std::invalid_argument on non-finite input and std::runtime_error if
// the sweeps fail to converge.
SvdFactors svd(const DenseMatrix& a);

inline constexpr double kJacobiTolerance = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

// Third-order tensor with the first index fastest: (i, j, k) -> i + d0*(j + d1*k).
// Under this layout the 3^9 evaluation array is the 27 x 27 x 27 tensor over
// cell groups (1,2,3), (4,5,6), (7,8,9) without any copying of indices.
struct Tensor3 {
  std::array<std::size_t, 3> dims{};
  std::vector<double> data;

  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : dims{d0, d1, d2}, data(d0 * d1 * d2, 0.0) {}
  Tensor3(std::array<std::size_t, 3> d, std::vector<double> values);

  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data[i + dims[0] * (j + dims[1] * k)];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data[i + dims[0] * (j + dims[1] * k)];
  }
};

// Y = T x_mode A, i.e. Y(.., p, ..) = sum_x A(p, x) T(.., x, ..).
// A must have dims[mode] columns; the result has A.rows() along `mode`.
Tensor3 mode_product(const Tensor3& t, int mode, const DenseMatrix& a);

}  // namespace ttt
