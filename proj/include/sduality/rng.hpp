#pragma once

#include <cstdint>
#include <random>

namespace sduality {

/// Seeded random stream. mt19937_64 has a bit-exact standardized output
/// sequence, and we draw bounded values by plain remainder, so every run with
/// the same seed produces the same values on every platform. (The remainder
/// bias is irrelevant at the range sizes used here.)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  /// Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (engine_() & 1u) != 0; }

  /// Child stream with a decorrelated seed; used to make independent trials
  /// reproducible regardless of evaluation order.
  Rng fork(std::uint64_t salt) {
    return Rng(engine_() ^ (salt * 0x9e3779b97f4a7c15ull));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sduality
