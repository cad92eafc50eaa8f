#pragma once

#include <cstdint>
#include <random>

#include "univoque/words.hpp"

namespace univoque::test {

// Seed for the randomized suites: --seed=N on the command line, else
// $UNIVOQUE_SEED, else a fixed default.
std::uint64_t seed();
void set_seed_from_args(int& argc, char** argv);

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t salt = 0) { return Rng(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline BinaryWord random_word(Rng& rng, std::size_t len) {
  std::vector<Bit> bits(len);
  for (auto& b : bits) b = static_cast<Bit>(rng() & 1);
  return BinaryWord(std::move(bits));
}

inline PeriodicSeq random_periodic(Rng& rng, std::size_t max_pre, std::size_t max_per) {
  BinaryWord pre = random_word(rng, uniform(rng, 0, max_pre));
  BinaryWord per = random_word(rng, uniform(rng, 1, max_per));
  return PeriodicSeq(std::move(pre), std::move(per));
}

inline PeriodicSeq random_purely_periodic(Rng& rng, std::size_t max_per) {
  return PeriodicSeq::purely(random_word(rng, uniform(rng, 1, max_per)));
}

// All binary words of length n, as integers read most significant bit first.
inline BinaryWord word_from_bits(std::uint64_t v, std::size_t n) {
  std::vector<Bit> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<Bit>((v >> (n - 1 - i)) & 1);
  return BinaryWord(std::move(bits));
}

}  // namespace univoque::test
