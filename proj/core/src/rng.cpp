#include "unexp/rng.hpp"

#include <limits>

namespace unexp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RngState::RngState(std::uint64_t seed) : seed_(seed), gen_(seed) {}

std::uint64_t RngState::next_u64() { return gen_(); }

std::uint64_t RngState::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and platform-independent.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = gen_();
  } while (v >= limit);
  return v % bound;
}

std::int64_t RngState::integer_in(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

RngState RngState::child(std::uint64_t stream) const {
  return RngState(splitmix64(seed_ ^ splitmix64(stream + 0x100000001b3ULL)));
}

}  // namespace unexp
