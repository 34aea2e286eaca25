#pragma once

// Shared helpers and brute-force oracles for the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "logmonoid/lattice.hpp"
#include "logmonoid/monoid.hpp"

namespace lmtest {

using namespace logmonoid;

inline Vector V(std::initializer_list<long> xs) { return make_vector(xs); }

inline std::vector<Vector> Vs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) out.push_back(make_vector(r));
  return out;
}

inline GroupStructure S(std::size_t free_rank, std::initializer_list<long> factors) {
  GroupStructure g;
  g.free_rank = free_rank;
  for (long f : factors) g.invariant_factors.emplace_back(f);
  return g;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo,
                               long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

/// Product of random elementary matrices.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a == b) continue;
    u.add_row_multiple(a, b, Integer(uniform(rng, -2, 2)));
    if (rng() % 3 == 0) u.swap_rows(a, b);
  }
  return u;
}

inline Integer gcd_of(const std::vector<Integer>& xs) {
  Integer g = 0;
  for (const auto& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

/// Determinantal divisors: gcd of all k×k minors, k = 1..min(r,c).
std::vector<Integer> determinantal_divisors(const IntMatrix& m);

/// Invariant factors derived from determinantal divisors (may contain 0 and 1).
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m);

/// |Hom(A, Z/n)| and, for every k ≥ 1, the number of homs killed by k, by
/// enumerating tuples on the Smith generators.
std::vector<Integer> hom_cyclic_kernel_profile(const GroupStructure& a, long n);
/// Same profile read off a structure Z/n-module.
std::vector<Integer> structure_kernel_profile(const GroupStructure& b, long n);

/// a ∈ P^sat decided by searching n·a ∈ P for n = 1..bound.
bool saturation_by_search(MembershipOracle& oracle, const GroupElement& a, long bound);

/// Irreducible points of cone(gens) ∩ lattice with coordinates in [lo, box],
/// lattice = rows of basis (or Z^n), cone membership decided by exact
/// rational Carathéodory search.
std::vector<Vector> brute_hilbert_basis(const std::vector<Vector>& gens, std::size_t n, long box,
                                        const std::vector<Vector>& lattice_basis = {},
                                        long lo = 0);

/// Exact rational cone membership by searching nonnegative solutions over
/// every linearly independent subset of generators.
bool in_rational_cone(const std::vector<Vector>& gens, const Vector& x);

}  // namespace lmtest
