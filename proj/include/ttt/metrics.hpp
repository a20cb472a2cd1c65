#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "ttt/eval_tensor.hpp"

namespace ttt {

// Stored elements of a rank-r model: 324 r for simple SVD, 81 r + r^3 for HOSVD.
std::size_t element_count(Method method, int r);

// element_count / 3^9. Throws std::out_of_range for r outside the method's
// range and std::invalid_argument for Method::Exact.
double compression_ratio(Method method, int r);

// ||exact - approx||_F / ||exact||_F. Throws std::invalid_argument when the
// exact tensor has zero norm.
double relative_error(const EvalTensor& exact, const EvalTensor& approx);

struct CompressionPoint {
  Method method = Method::Svd;
  int rank = 0;
  double cr = 0.0;
  double relative_error = 0.0;
};

inline constexpr const char* kCompressionCsvHeader = "method,r,cr,rel_error";
std::string to_csv_row(const CompressionPoint& p);

struct RankMatch {
  double target_cr = 0.0;
  int svd_rank = 0;
  int hosvd_rank = 0;
  double svd_cr = 0.0;
  double hosvd_cr = 0.0;
  // The nearest simple-SVD rank can overshoot an uncompressed tensor
  // (Cr(61) = 244/243). Reported, not clipped.
  bool svd_exceeds_original() const { return svd_cr > 1.0; }
  bool hosvd_exceeds_original() const { return hosvd_cr > 1.0; }
};

// For each method the rank whose Cr is nearest the target, ties to the
// smaller rank. Throws std::out_of_range unless 0 <= target_cr <= 1.
RankMatch match_ranks(double target_cr);

// The eight compression columns of the published rank table.
inline constexpr std::array<double, 8> kTableOneTargets{0.0, 0.049, 0.13, 0.20, 0.31, 0.43, 0.80, 1.0};

// "%.17g": round-trips every double exactly.
std::string format_real(double x);

}  // namespace ttt
