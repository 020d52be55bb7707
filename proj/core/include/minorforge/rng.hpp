#ifndef MINORFORGE_RNG_HPP
#define MINORFORGE_RNG_HPP

#include <cstdint>

namespace minorforge {

// SplitMix64 generator (Steele, Lea, Vigna). Small state, full 64-bit output,
// cheap enough to construct one stream per (seed, trial, vertex) triple.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit mantissa.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) without modulo bias (Lemire reduction).
  std::uint64_t next_below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    return static_cast<std::uint64_t>(m >> 64);
  }
};

// Stream splitting: substream(seed, a, b) keys an independent SplitMix64
// stream per (a, b) pair. Each component passes through a full mix before
// the next one enters, so distinct (seed, a, b) triples land on unrelated
// streams. Draw order inside one substream is fixed by the caller, so
// results do not depend on scheduling or on how many other substreams were
// consumed.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  SplitMix64 s0(seed ^ 0x6a09e667f3bcc909ull);
  SplitMix64 s1(s0.next() + a);
  SplitMix64 s2(s1.next() + b);
  return s2.next();
}

}  // namespace minorforge

#endif
