#include "ttt/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ttt/compression.hpp"
#include "ttt/tensor_ops.hpp"

namespace ttt {
namespace {

int max_rank(Method method) {
  switch (method) {
    case Method::Svd: return kSvdMaxRank;
    case Method::Hosvd: return kHosvdMaxRank;
    case Method::Exact: break;
  }
  throw std::invalid_argument("compression ratio is defined for svd and hosvd only");
}

int nearest_rank(Method method, double target) {
  int best = 0;
  double best_gap = std::abs(compression_ratio(method, 0) - target);
  for (int r = 1; r <= max_rank(method); ++r) {
    const double gap = std::abs(compression_ratio(method, r) - target);
    if (gap < best_gap) {
      best = r;
      best_gap = gap;
    }
  }
  return best;
}

}  // namespace

std::size_t element_count(Method method, int r) {
  if (r < 0 || r > max_rank(method)) {
    throw std::out_of_range("rank " + std::to_string(r) + " out of range for " + std::string(to_string(method)));
  }
  const auto n = static_cast<std::size_t>(r);
  if (method == Method::Svd) return (81 + 243) * n;
  return 81 * n + n * n * n;
}

double compression_ratio(Method method, int r) {
  return static_cast<double>(element_count(method, r)) / static_cast<double>(kStateCount);
}

double relative_error(const EvalTensor& exact, const EvalTensor& approx) {
  const double norm = frobenius_norm(exact.values);
  if (norm == 0.0) throw std::invalid_argument("relative error against a zero tensor");
  std::vector<double> diff(exact.values.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = exact.values[i] - approx.values[i];
  return frobenius_norm(diff) / norm;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv_row(const CompressionPoint& p) {
  return std::string(to_string(p.method)) + "," + std::to_string(p.rank) + "," + format_real(p.cr) + "," +
         format_real(p.relative_error);
}

RankMatch match_ranks(double target_cr) {
  if (!(target_cr >= 0.0 && target_cr <= 1.0)) {
    throw std::out_of_range("target compression ratio must be in [0, 1]");
  }
  RankMatch m;
  m.target_cr = target_cr;
  m.svd_rank = nearest_rank(Method::Svd, target_cr);
  m.hosvd_rank = nearest_rank(Method::Hosvd, target_cr);
  m.svd_cr = compression_ratio(Method::Svd, m.svd_rank);
  m.hosvd_cr = compression_ratio(Method::Hosvd, m.hosvd_rank);
  return m;
}

}  // namespace ttt
