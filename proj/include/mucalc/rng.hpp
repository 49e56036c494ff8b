#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace mucalc {

// Seeded randomness for walks and generated test suites.  The generator is
// std::mt19937_64 seeded directly with the given value; index selection uses
// rejection sampling, so the produced sequence is identical on every standard
// library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform on [0, n).  Exact: rejects draws from the truncated final block.
  std::size_t uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: empty range");
    if (n == 1) return 0;
    const std::uint64_t nn = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = UINT64_MAX - (UINT64_MAX % nn);
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= threshold);
    return static_cast<std::size_t>(v % nn);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mucalc
