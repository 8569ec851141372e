#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cpslint {

// Deterministic random source used by the corruptor and the test fixtures.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard, so the same seed yields the same bytes on every platform.
// Standard-library distributions are not portable, so bounded draws and
// shuffles are implemented here instead.
class Rng {
public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Uniform in [0, n), n > 0. Rejection sampling, no modulo bias.
  uint64_t below(uint64_t n) {
    const uint64_t bound = UINT64_MAX / n * n;
    uint64_t x = next();
    while (x >= bound)
      x = next();
    return x % n;
  }

  size_t index(size_t n) { return static_cast<size_t>(below(n)); }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return (next() & 1u) != 0; }

  template <typename T> void shuffle(std::vector<T> &v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct values from [0, n), in draw order.
  std::vector<size_t> sample(size_t n, size_t k) {
    std::vector<size_t> pool(n);
    for (size_t i = 0; i < n; ++i)
      pool[i] = i;
    std::vector<size_t> out;
    out.reserve(k);
    for (size_t i = 0; i < k && i < n; ++i) {
      size_t j = i + index(n - i);
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

private:
  std::mt19937_64 engine_;
};

} // namespace cpslint
