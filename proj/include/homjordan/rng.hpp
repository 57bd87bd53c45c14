#pragma once

#include <cstdint>

#include "homjordan/matrix.hpp"

namespace homjordan {

// Deterministic seeded generator (splitmix64). All randomized searches draw
// from one of these so identical seeds give identical outputs everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Field element: uniform residue over GF(p); a small integer in [-4, 4]
  // over Q (plenty for probing subspace structure, keeps bignums small).
  Scalar scalar(const FieldDescriptor& f) {
    if (f.kind == FieldKind::PrimeField) return Scalar::residue(below(f.p), f.p);
    return Scalar::in_field(static_cast<long>(below(9)) - 4, f);
  }

  Vec vector(const FieldDescriptor& f, Index n) {
    Vec v = zero_vector(f, n);
    for (Index i = 0; i < n; ++i) v(i) = scalar(f);
    return v;
  }

  Vec nonzero_vector(const FieldDescriptor& f, Index n) {
    for (int attempt = 0; attempt < 256; ++attempt) {
      Vec v = vector(f, n);
      for (Index i = 0; i < n; ++i)
        if (!v(i).is_zero()) return v;
    }
    // n == 0 or absurdly unlucky; caller must cope with a zero vector.
    return zero_vector(f, n);
  }

 private:
  std::uint64_t state_;
};

}  // namespace homjordan
