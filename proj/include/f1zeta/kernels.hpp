#pragma once

// Inner loops with a portable scalar version and an AVX2 version picked
// at runtime. Both must produce bit-identical results.

#include <cstddef>
#include <cstdint>

namespace f1zeta::kernels {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);
bool isa_available(Isa isa);
// The ISA used by the dispatching entry points below.
Isa active_isa();
// Forces an ISA (tests, benchmarks). Throws InvalidInput if unavailable.
void set_isa(Isa isa);

// dst[i] = (dst[i] - f * src[i]) mod p, for p < 2^26 and all inputs < p.
void submul_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len);
// dst[i] += f * src[i] with two's complement wraparound.
void axpy_i32(std::int32_t* dst, const std::int32_t* src, std::int32_t f, std::size_t len);

namespace scalar {
void submul_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len);
void axpy_i32(std::int32_t* dst, const std::int32_t* src, std::int32_t f, std::size_t len);
}  // namespace scalar

namespace avx2 {
void submul_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len);
void axpy_i32(std::int32_t* dst, const std::int32_t* src, std::int32_t f, std::size_t len);
}  // namespace avx2

}  // namespace f1zeta::kernels
