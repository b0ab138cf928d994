#include "f1zeta/kernels.hpp"

namespace f1zeta::kernels::scalar {

void submul_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t r = static_cast<std::uint64_t>(f) * src[i] % p;
    std::uint64_t d = dst[i];
    dst[i] = static_cast<std::uint32_t>(d >= r ? d - r : d + p - r);
  }
}

void axpy_i32(std::int32_t* dst, const std::int32_t* src, std::int32_t f, std::size_t len) {
  const auto uf = static_cast<std::uint32_t>(f);
  for (std::size_t i = 0; i < len; ++i)
    dst[i] = static_cast<std::int32_t>(static_cast<std::uint32_t>(dst[i]) + uf * static_cast<std::uint32_t>(src[i]));
}

}  // namespace f1zeta::kernels::scalar
