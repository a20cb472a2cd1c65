#include "ttt/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ttt::kernels {
namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("TTT_SIMD")) {
    const std::string_view v{env};
    if (v == "scalar") return Isa::Scalar;
    if (v == "avx2" && isa_supported(Isa::Avx2)) return Isa::Avx2;
  }
  return detect_isa();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> ptr{&table(initial_isa())};
  return ptr;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() { return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

const KernelTable& table(Isa isa) {
#if defined(__x86_64__) || defined(_M_X64)
  if (isa == Isa::Avx2) return avx2_table();
#endif
  (void)isa;
  return scalar_table();
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

Isa active_isa() { return &active() == &scalar_table() ? Isa::Scalar : Isa::Avx2; }

void set_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("instruction set not supported on this CPU: " +
                                std::string(isa_name(isa)));
  }
  current().store(&table(isa), std::memory_order_release);
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace ttt::kernels
