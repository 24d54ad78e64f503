#pragma once

#include <cstdint>
#include <string_view>

#include "gpdual/fp.hpp"

namespace gpdual {

/* splitmix64.  Chosen over std:: engines because the standard distributions
 * are not bit-reproducible across library implementations, and reports here
 * must be byte-identical for a fixed seed. */
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /* uniform on [0, bound), rejection sampled so there is no modulo bias */
  std::uint32_t below(std::uint32_t bound) {
    if (bound == 0) throw InvariantError("Rng::below(0)");
    std::uint64_t limit = ~0ULL - (~0ULL % bound + 1) % bound;
    for (;;) {
      std::uint64_t v = next();
      if (v <= limit) return static_cast<std::uint32_t>(v % bound);
    }
  }

  std::uint32_t nonzero_below(std::uint32_t bound) { return 1 + below(bound - 1); }

  std::uint32_t field_element(const PrimeField& f) { return below(f.modulus()); }

private:
  std::uint64_t state_;
};

/* Distinct deterministic streams for the samplers and checks: hash a tag into
 * the user seed (FNV-1a).  Same (seed, tag) always yields the same stream. */
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
  h *= 0x100000001b3ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace gpdual
