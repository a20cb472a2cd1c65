#include "ttt/compression.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

namespace ttt {
namespace {

void check_rank(int r, int max_rank, std::string_view method) {
  if (r < 0 || r > max_rank) {
    throw std::out_of_range(std::string(method) + " rank must be in [0, " + std::to_string(max_rank) +
                            "], got " + std::to_string(r));
  }
}

constexpr std::size_t kModeDim = 27;

}  // namespace

SvdBasis SvdBasis::compute(const EvalTensor& exact) {
  return SvdBasis{svd(matricize(exact.values, kSvdRowCells, kSvdColCells))};
}

SvdModel compress_svd(const SvdBasis& basis, int r) {
  check_rank(r, kSvdMaxRank, "svd");
  const auto& f = basis.factors;
  const auto rank = static_cast<std::size_t>(r);
  SvdModel model{r, DenseMatrix(f.u.rows(), rank), DenseMatrix(rank, f.vt.cols())};
  for (std::size_t p = 0; p < rank; ++p) {
    const double root = std::sqrt(f.singular_values[p]);
    for (std::size_t i = 0; i < f.u.rows(); ++i) model.q(i, p) = f.u(i, p) * root;
    const auto src = f.vt.row(p);
    auto dst = model.s.row(p);
    for (std::size_t j = 0; j < src.size(); ++j) dst[j] = root * src[j];
  }
  return model;
}

SvdModel compress_svd(const EvalTensor& exact, int r) {
  check_rank(r, kSvdMaxRank, "svd");
  return compress_svd(SvdBasis::compute(exact), r);
}

EvalTensor reconstruct_svd(const SvdModel& model) {
  return EvalTensor{dematricize(multiply(model.q, model.s), kSvdRowCells, kSvdColCells),
                    Provenance{Method::Svd, model.rank}};
}

HosvdBasis HosvdBasis::compute(const EvalTensor& exact) {
  // The three mode SVDs are independent; each is deterministic, so running
  // them concurrently cannot change the result.
  std::array<std::future<SvdFactors>, 3> jobs;
  for (std::size_t d = 0; d < 3; ++d) {
    jobs[d] = std::async(std::launch::async, [&exact, d] {
      return svd(matricize(exact.values, kHosvdRowCells[d], kHosvdModeCells[d]));
    });
  }
  HosvdBasis basis;
  for (std::size_t d = 0; d < 3; ++d) {
    SvdFactors f = jobs[d].get();
    basis.factors[d] = f.v();
    basis.mode_spectra[d] = std::move(f.singular_values);
  }
  basis.tensor = Tensor3({kModeDim, kModeDim, kModeDim}, exact.values);
  return basis;
}

std::array<DenseMatrix, 3> hosvd_factors(const EvalTensor& exact) {
  return HosvdBasis::compute(exact).factors;
}

TuckerModel compress_hosvd(const HosvdBasis& basis, int r) {
  check_rank(r, kHosvdMaxRank, "hosvd");
  TuckerModel model;
  model.rank = r;
  Tensor3 core = basis.tensor;
  for (int d = 0; d < 3; ++d) {
    const auto du = static_cast<std::size_t>(d);
    model.factors[du] = basis.factors[du].left_columns(static_cast<std::size_t>(r));
    core = mode_product(core, d, model.factors[du].transposed());
  }
  model.core = std::move(core);
  return model;
}

TuckerModel compress_hosvd(const EvalTensor& exact, int r) {
  check_rank(r, kHosvdMaxRank, "hosvd");
  return compress_hosvd(HosvdBasis::compute(exact), r);
}

EvalTensor reconstruct_hosvd(const TuckerModel& model) {
  Tensor3 x = model.core;
  for (int d = 0; d < 3; ++d) x = mode_product(x, d, model.factors[static_cast<std::size_t>(d)]);
  return EvalTensor{std::move(x.data), Provenance{Method::Hosvd, model.rank}};
}

EvalTensor approximate(const SvdBasis& basis, int r) { return reconstruct_svd(compress_svd(basis, r)); }

EvalTensor approximate(const HosvdBasis& basis, int r) {
  return reconstruct_hosvd(compress_hosvd(basis, r));
}

}  // namespace ttt
