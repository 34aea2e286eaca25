#pragma once

// Seeded random instances for property checks and the verify suites. Draws
// use raw 64-bit Mersenne Twister output reduced modulo the range so that a
// seed yields the same instances on every platform.

#include <cstdint>
#include <random>

#include "logmonoid/monoid.hpp"
#include "logmonoid/morphism.hpp"

namespace logmonoid {

class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// A positively graded monoid in Z^k, 1 <= k <= max_rank, with 1..max_gens
/// generators whose entries lie in [0, max_entry].
Monoid random_graded_monoid(InstanceRng& rng, std::size_t max_rank, std::size_t max_gens,
                            long max_entry);

struct KummerInstanceOptions {
  std::size_t max_rank = 2;
  /// Upper bound on |gp(Q)/h(gp(P))|.
  long max_index = 4;
  bool allow_torsion = true;
};

/// A Kummer hom h: P -> Q of fs monoids. P is a saturated full-rank monoid
/// in Z^r, h is a nonsingular triangular map and Q is the saturation of the
/// image together with extra lattice points of the same cone, optionally
/// with a finite cyclic summand in the ambient group of Q.
MonoidHom random_kummer_instance(InstanceRng& rng, const KummerInstanceOptions& options);

}  // namespace logmonoid
