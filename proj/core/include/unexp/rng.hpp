#pragma once

#include <cstdint>
#include <random>

namespace unexp {

// Deterministic random stream with explicit state. The raw mt19937_64 output
// sequence is fully specified by the standard and bounded draws use rejection
// sampling, so sequences are reproducible across platforms and compilers.
class RngState {
 public:
  explicit RngState(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64();

  // Uniform in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi], both inclusive.
  std::int64_t integer_in(std::int64_t lo, std::int64_t hi);

  // Independent derived stream; used to split work (trials, points) without
  // sharing mutable state.
  RngState child(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace unexp
