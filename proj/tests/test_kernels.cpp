#include <doctest.h>

#include <random>
#include <vector>

#include "f1zeta/det.hpp"
#include "f1zeta/kernels.hpp"

using namespace f1zeta;
namespace k = f1zeta::kernels;

namespace {

struct IsaRestore {
  k::Isa saved = k::active_isa();
  ~IsaRestore() { k::set_isa(saved); }
};

}  // namespace

TEST_CASE("scalar is always available") {
  CHECK(k::isa_available(k::Isa::scalar));
  IsaRestore r;
  k::set_isa(k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  MESSAGE("avx2 available: " << k::isa_available(k::Isa::avx2));
}

TEST_CASE("submul_mod matches a direct reduction") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 65521u, (1u << 26) - 5u}) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 100u}) {
      std::vector<std::uint32_t> dst(len), src(len);
      for (auto& x : dst) x = d(rng);
      for (auto& x : src) x = d(rng);
      const std::uint32_t f = d(rng);
      auto expect = dst;
      for (std::size_t i = 0; i < len; ++i) {
        std::uint64_t prod = static_cast<std::uint64_t>(f) * src[i] % p;
        expect[i] = static_cast<std::uint32_t>((expect[i] + p - prod) % p);
      }
      k::scalar::submul_mod(dst.data(), src.data(), f, p, len);
      CHECK(dst == expect);
    }
  }
}

TEST_CASE("avx2 kernels agree with scalar kernels") {
  if (!k::isa_available(k::Isa::avx2)) {
    MESSAGE("avx2 not available on this machine, skipping");
    return;
  }
  std::mt19937_64 rng(2);
  const std::uint32_t edge_primes[] = {2u, 3u, 7u, 65521u, 16777213u, (1u << 26) - 5u};
  for (std::uint32_t p : edge_primes)
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t len = trial % 67;
      std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
      std::vector<std::uint32_t> a(len), src(len);
      for (auto& x : a) x = trial % 3 == 0 ? p - 1 : d(rng);
      for (auto& x : src) x = trial % 5 == 0 ? p - 1 : d(rng);
      std::uint32_t f = trial % 7 == 0 ? p - 1 : d(rng);
      auto b = a;
      k::scalar::submul_mod(a.data(), src.data(), f, p, len);
      k::avx2::submul_mod(b.data(), src.data(), f, p, len);
      CHECK(a == b);
    }
  std::uniform_int_distribution<std::int32_t> d(INT32_MIN, INT32_MAX);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t len = trial % 41;
    std::vector<std::int32_t> a(len), src(len);
    for (auto& x : a) x = d(rng);
    for (auto& x : src) x = trial % 2 ? d(rng) : (d(rng) % 5);
    std::int32_t f = trial % 3 ? d(rng) % 7 : d(rng);
    auto b = a;
    k::scalar::axpy_i32(a.data(), src.data(), f, len);
    k::avx2::axpy_i32(b.data(), src.data(), f, len);
    CHECK(a == b);
  }
}

TEST_CASE("det_mod_p is the same under every available isa") {
  IsaRestore restore;
  std::mt19937_64 rng(4);
  const auto primes = modular_primes(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 23;
    for (std::uint32_t p : primes) {
      std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
      std::vector<std::uint32_t> m(n * n);
      for (auto& x : m) x = d(rng);
      std::vector<std::uint32_t> results;
      for (auto isa : {k::Isa::scalar, k::Isa::avx2}) {
        if (!k::isa_available(isa)) continue;
        k::set_isa(isa);
        auto copy = m;
        results.push_back(det_mod_p(copy, n, p));
      }
      for (auto r : results) CHECK(r == results[0]);
    }
  }
}
