#pragma once

#include <cstdint>

namespace phantomlab {

// splitmix64: tiny, seedable, identical across platforms. Used everywhere a
// "random" choice is made so runs are reproducible byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  Rng fork() { return Rng(next() ^ 0xa02bdbf7bb3c0a7ULL); }

 private:
  std::uint64_t state_;
};

}  // namespace phantomlab
