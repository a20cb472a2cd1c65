#pragma once

// Rank-r approximations of the evaluation tensor.
//
// Simple SVD unfolds the tensor over cells (1,2,3,4) x (5,6,7,8,9) into an
// 81 x 243 matrix and keeps r singular triplets, splitting sqrt(sigma) into
// both factors. HOSVD views it as 27 x 27 x 27 over the board columns
// (1,2,3), (4,5,6), (7,8,9), takes one factor per mode from the SVD of the
// matching 729 x 27 unfolding and keeps a shared rank r in every mode.

#include <array>
#include <cstddef>

#include "ttt/eval_tensor.hpp"
#include "ttt/tensor_ops.hpp"

namespace ttt {

inline constexpr int kSvdMaxRank = 81;
inline constexpr int kHosvdMaxRank = 27;

inline constexpr std::array<Cell, 4> kSvdRowCells{1, 2, 3, 4};
inline constexpr std::array<Cell, 5> kSvdColCells{5, 6, 7, 8, 9};

struct SvdModel {
  int rank = 0;
  DenseMatrix q;  // 81 x r
  DenseMatrix s;  // r x 243
  std::size_t element_count() const { return q.size() + s.size(); }
};

struct TuckerModel {
  int rank = 0;
  std::array<DenseMatrix, 3> factors;  // L, M, R: 27 x r, orthonormal columns
  Tensor3 core;                        // r x r x r
  std::size_t element_count() const {
    return factors[0].size() + factors[1].size() + factors[2].size() + core.data.size();
  }
};

// Full SVD of the 81 x 243 unfolding; truncations are read off it.
struct SvdBasis {
  SvdFactors factors;
  static SvdBasis compute(const EvalTensor& exact);
};

// One 27 x 27 orthogonal factor per mode. Column a of factor d is the a-th
// right singular vector of the unfolding whose columns are mode d's cells.
struct HosvdBasis {
  std::array<DenseMatrix, 3> factors;
  std::array<std::vector<double>, 3> mode_spectra;
  Tensor3 tensor;  // the 27 x 27 x 27 view of the source
  static HosvdBasis compute(const EvalTensor& exact);
};

// Cell groups of the three modes and the row groups used for their unfoldings.
inline constexpr std::array<std::array<Cell, 3>, 3> kHosvdModeCells{{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}};
inline constexpr std::array<std::array<Cell, 6>, 3> kHosvdRowCells{{
    {4, 5, 6, 7, 8, 9},
    {1, 2, 3, 7, 8, 9},
    {1, 2, 3, 4, 5, 6},
}};

// Throw std::out_of_range for r outside [0, 81] resp. [0, 27].
SvdModel compress_svd(const SvdBasis& basis, int r);
SvdModel compress_svd(const EvalTensor& exact, int r);
EvalTensor reconstruct_svd(const SvdModel& model);

std::array<DenseMatrix, 3> hosvd_factors(const EvalTensor& exact);
TuckerModel compress_hosvd(const HosvdBasis& basis, int r);
TuckerModel compress_hosvd(const EvalTensor& exact, int r);
EvalTensor reconstruct_hosvd(const TuckerModel& model);

// Convenience: compress and reconstruct in one step.
EvalTensor approximate(const SvdBasis& basis, int r);
EvalTensor approximate(const HosvdBasis& basis, int r);

}  // namespace ttt
