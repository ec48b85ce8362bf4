#pragma once

#include <cstdint>
#include <random>

namespace promisecc {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used only to derive
/// independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seeded random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Stream `index` of seed `s` is seeded with
/// splitmix64(s ^ splitmix64(index + 1)), so shot j of a sampling run can be
/// replayed without generating shots 0..j-1. Bounded integers and unit-interval
/// doubles are derived by hand instead of through <random> distributions,
/// whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t index = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double unit();
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace promisecc
