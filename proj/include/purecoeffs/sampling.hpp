#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace purecoeffs {

/// mt19937_64 with a portable range reduction, so a seed reproduces the same
/// draws on every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Strictly increasing (x_1 < ... < x_len) drawn from [lo, hi], sorted.
  std::vector<std::int64_t> strict_sequence(unsigned len, std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Calls visit(seq) for every strictly increasing sequence of length len with
/// entries in [lo, hi], in lexicographic order.
void for_each_strict_sequence(unsigned len, std::int64_t lo, std::int64_t hi,
                              const std::function<void(const std::vector<std::int64_t>&)>& visit);

}  // namespace purecoeffs
