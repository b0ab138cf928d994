#include <atomic>
#include <string>

#include "f1zeta/error.hpp"
#include "f1zeta/kernels.hpp"

namespace f1zeta::kernels {

namespace {

Isa detect() {
#if defined(F1ZETA_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::avx2;
#endif
  return Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

const char* to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::scalar || detect() == Isa::avx2; }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_available(isa)) throw InvalidInput(std::string("ISA not available on this CPU: ") + to_string(isa));
  current().store(isa, std::memory_order_relaxed);
}

#if defined(F1ZETA_HAVE_AVX2_KERNELS)
void submul_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len) {
  if (active_isa() == Isa::avx2)
    avx2::submul_mod(dst, src, f, p, len);
  else
    scalar::submul_mod(dst, src, f, p, len);
}

void axpy_i32(std::int32_t* dst, const std::int32_t* src, std::int32_t f, std::size_t len) {
  if (active_isa() == Isa::avx2)
    avx2::axpy_i32(dst, src, f, len);
  else
    scalar::axpy_i32(dst, src, f, len);
}
#else
void submul_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len) {
  scalar::submul_mod(dst, src, f, p, len);
}

void axpy_i32(std::int32_t* dst, const std::int32_t* src, std::int32_t f, std::size_t len) {
  scalar::axpy_i32(dst, src, f, len);
}

namespace avx2 {
void submul_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len) {
  scalar::submul_mod(dst, src, f, p, len);
}
void axpy_i32(std::int32_t* dst, const std::int32_t* src, std::int32_t f, std::size_t len) {
  scalar::axpy_i32(dst, src, f, len);
}
}  // namespace avx2
#endif

}  // namespace f1zeta::kernels
