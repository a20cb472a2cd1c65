#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ttt/kernels.hpp"
#include "ttt/tensor_ops.hpp"

namespace ttt {
namespace {

// n column vectors of length m, stored contiguously.
struct ColumnSet {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<double> data;

  std::span<double> col(std::size_t j) { return {data.data() + j * m, m}; }
  std::span<const double> col(std::size_t j) const { return {data.data() + j * m, m}; }
};

struct JacobiResult {
  ColumnSet left;  // m x n, orthonormal
  std::vector<double> sigma;
  ColumnSet right;  // n x n, orthogonal
};

// Orthonormalises the slots listed in `missing` against every other column,
// drawing candidates from the standard basis in ascending order.
void complete_basis(ColumnSet& cols, const std::vector<bool>& missing) {
  std::vector<double> v(cols.m);
  std::size_t next_candidate = 0;
  for (std::size_t j = 0; j < cols.n; ++j) {
    if (!missing[j]) continue;
    bool placed = false;
    while (!placed && next_candidate < cols.m) {
      std::fill(v.begin(), v.end(), 0.0);
      v[next_candidate++] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t q = 0; q < cols.n; ++q) {
          if (q == j || (missing[q] && q > j)) continue;
          kernels::axpy(-kernels::dot(cols.col(q), v), cols.col(q), v);
        }
      }
      const double norm = std::sqrt(kernels::sum_squares(v));
      if (norm > 0.5) {
        auto dst = cols.col(j);
        for (std::size_t i = 0; i < cols.m; ++i) dst[i] = v[i] / norm;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("svd: could not complete orthonormal basis");
  }
}

// Requires a.rows() >= a.cols().
JacobiResult hestenes(const DenseMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ColumnSet w{m, n, std::vector<double>(m * n)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.data[j * m + i] = a(i, j);
  }
  ColumnSet v{n, n, std::vector<double>(n * n, 0.0)};
  for (std::size_t j = 0; j < n; ++j) v.data[j * n + j] = 1.0;

  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    std::size_t rotations = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double alpha = kernels::sum_squares(w.col(i));
        const double beta = kernels::sum_squares(w.col(j));
        if (alpha == 0.0 || beta == 0.0) continue;
        const double gamma = kernels::dot(w.col(i), w.col(j));
        if (std::abs(gamma) <= kJacobiTolerance * std::sqrt(alpha) * std::sqrt(beta)) continue;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        kernels::rotate(w.col(i), w.col(j), c, s);
        kernels::rotate(v.col(i), v.col(j), c, s);
        ++rotations;
      }
    }
    converged = rotations == 0;
  }
  if (!converged) throw std::runtime_error("svd: Jacobi sweeps did not converge");

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = std::sqrt(kernels::sum_squares(w.col(j)));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  JacobiResult out{ColumnSet{m, n, std::vector<double>(m * n, 0.0)}, std::vector<double>(n),
                   ColumnSet{n, n, std::vector<double>(n * n)}};
  std::vector<bool> missing(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t j = order[p];
    const double sigma = norms[j];
    auto vdst = out.right.col(p);
    std::copy(v.col(j).begin(), v.col(j).end(), vdst.begin());
    if (sigma < std::numeric_limits<double>::min()) {
      out.sigma[p] = 0.0;
      missing[p] = true;
      continue;
    }
    out.sigma[p] = sigma;
    auto udst = out.left.col(p);
    const auto src = w.col(j);
    for (std::size_t i = 0; i < m; ++i) udst[i] = src[i] / sigma;
  }
  if (std::find(missing.begin(), missing.end(), true) != missing.end()) {
    complete_basis(out.left, missing);
  }
  return out;
}

// Flip pairs so the largest-magnitude entry of each `lead` column is positive.
void fix_signs(ColumnSet& lead, ColumnSet& partner) {
  for (std::size_t j = 0; j < lead.n; ++j) {
    auto col = lead.col(j);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < col.size(); ++i) {
      if (std::abs(col[i]) > std::abs(col[arg])) arg = i;
    }
    if (col[arg] < 0.0) {
      for (double& x : col) x = -x;
      for (double& x : partner.col(j)) x = -x;
    }
  }
}

}  // namespace

SvdFactors svd(const DenseMatrix& a) {
  for (double x : a.data()) {
    if (!std::isfinite(x)) throw std::invalid_argument("svd: non-finite matrix entry");
  }
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const bool wide = m < n;
  JacobiResult r = hestenes(wide ? a.transposed() : a);
  const std::size_t k = std::min(m, n);

  // For a wide matrix A^T = W S V^T, so A = V S W^T.
  ColumnSet& u_cols = wide ? r.right : r.left;
  ColumnSet& v_cols = wide ? r.left : r.right;
  fix_signs(u_cols, v_cols);

  SvdFactors f{DenseMatrix(m, k), std::move(r.sigma), DenseMatrix(k, n)};
  for (std::size_t p = 0; p < k; ++p) {
    const auto uc = u_cols.col(p);
    for (std::size_t i = 0; i < m; ++i) f.u(i, p) = uc[i];
    const auto vc = v_cols.col(p);
    std::copy(vc.begin(), vc.end(), f.vt.row(p).begin());
  }
  return f;
}

DenseMatrix SvdFactors::reconstruct(std::size_t rank) const {
  if (rank > singular_values.size()) throw std::out_of_range("reconstruct: rank too large");
  DenseMatrix out(u.rows(), vt.cols());
  for (std::size_t i = 0; i < u.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t p = 0; p < rank; ++p) {
      const double w = u(i, p) * singular_values[p];
      if (w != 0.0) kernels::axpy(w, vt.row(p), dst);
    }
  }
  return out;
}

}  // namespace ttt
