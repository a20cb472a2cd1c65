#pragma once

// Dense double-precision inner loops used by the SVD, contraction and norm
// code. Every kernel has a scalar reference implementation; on x86-64 an
// AVX2+FMA variant is selected at runtime when the CPU supports it.
//
// The active instruction set is process-wide. It is chosen on first use from
// CPU detection, and the TTT_SIMD environment variable ("scalar" or "avx2")
// may force a choice.

#include <cstddef>
#include <span>
#include <string_view>

namespace ttt::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*sum_squares)(const double* x, std::size_t n);
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // (x, y) <- (c*x - s*y, s*x + c*y)
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
};

const KernelTable& scalar_table();
#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_table();
#endif

bool isa_supported(Isa isa);
Isa detect_isa();
Isa active_isa();
// Throws std::invalid_argument if the ISA is not supported on this CPU.
void set_isa(Isa isa);
const KernelTable& table(Isa isa);
std::string_view isa_name(Isa isa);

// RAII override used by equivalence tests.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_isa(isa); }
  ~ScopedIsa() { set_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

const KernelTable& active();

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}
inline double sum_squares(std::span<const double> x) {
  return active().sum_squares(x.data(), x.size());
}
inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}
inline void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  active().rotate(x.data(), y.data(), x.size(), c, s);
}

}  // namespace ttt::kernels
