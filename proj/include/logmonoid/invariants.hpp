#pragma once

// Closed-form invariants of a strict local fs log scheme with chart P and
// residue characteristic p. Only the log part of each H^1 is computed; the
// classical part depends on the ring and is not modelled. Tate twists are
// recorded as labels only.

#include <cstddef>
#include <string>
#include <vector>

#include "logmonoid/monoid.hpp"

namespace logmonoid {

/// (Ẑ^(p'))(1)^free_rank ⊕ ⊕ Z/finite_factors[i] (1), where Ẑ^(p') is the
/// prime-to-p completion of Z (all of Ẑ when p = 0).
struct ProfiniteDescriptor {
  std::size_t free_rank = 0;
  Vector finite_factors;
  Integer excluded_prime = 0;

  std::string to_string() const;
  friend bool operator==(const ProfiniteDescriptor&, const ProfiniteDescriptor&) = default;
};

/// G_m^torus_rank × ∏ μ_{mu_orders[i]}.
struct GroupSchemeDescriptor {
  std::size_t torus_rank = 0;
  Vector mu_orders;

  static GroupSchemeDescriptor mu(const Integer& m);
  static GroupSchemeDescriptor gm(std::size_t rank = 1);
  void validate() const;
};

/// A finite abelian group plus a number of (Q/Z) summands.
struct TorsionGroup {
  GroupStructure finite;
  std::size_t qz_rank = 0;

  std::string to_string() const;
  friend bool operator==(const TorsionGroup&, const TorsionGroup&) = default;
};

/// p must be 0 or a prime. Throws NotSaturated.
ProfiniteDescriptor pi1_log(const Monoid& p, const Integer& residue_char);
TorsionGroup r1_eps_fiber(const Monoid& p, const GroupSchemeDescriptor& g);
GroupStructure h1_kummer(const Monoid& p, const Integer& m);

/// Structure-level versions used by the monoid entry points.
ProfiniteDescriptor pi1_log(const GroupStructure& gp, const Integer& residue_char);
TorsionGroup r1_eps_fiber(const GroupStructure& gp, const GroupSchemeDescriptor& g);

/// Finite group given by its Cayley table; elements are 0..order-1.
class FiniteGroupTable {
 public:
  /// Validates closure, associativity, identity and inverses.
  FiniteGroupTable(std::vector<std::vector<std::size_t>> table, std::size_t identity);

  static FiniteGroupTable cyclic(std::size_t n);
  /// Permutations of {0..k-1} in lexicographic order; index 0 is the identity.
  static FiniteGroupTable symmetric(std::size_t k);
  static FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, const Integer& k) const;
  std::size_t element_order(std::size_t a) const;
  bool commute(std::size_t a, std::size_t b) const { return multiply(a, b) == multiply(b, a); }
  bool is_abelian() const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
};

/// Conjugacy classes of homomorphisms H_n(k) = Hom(gp(P), Z/n) -> G. A hom is
/// recorded by the images of the Smith generators of H, one per invariant
/// factor of `source`; each representative is the lexicographically least
/// member of its class.
struct FiniteTorsorClasses {
  GroupStructure source;
  std::vector<std::vector<std::size_t>> representatives;
  std::size_t hom_count = 0;

  std::size_t class_count() const { return representatives.size(); }
};

/// Throws NotInvertible when gcd(n, p) > 1, NotSaturated.
FiniteTorsorClasses h1_finite_group(const Monoid& p, const Integer& residue_char, const Integer& n,
                                    const FiniteGroupTable& g);
FiniteTorsorClasses h1_finite_group(const GroupStructure& gp, const Integer& residue_char,
                                    const Integer& n, const FiniteGroupTable& g);

/// a ⊗ 1/m in gp(P) ⊗ Q/Z. `fractions` are the free Smith coordinates of a
/// divided by m and reduced into [0, 1); torsion of gp(P) is dropped.
struct QmodZElement {
  GroupElement base;
  Integer denominator = 1;
  std::vector<Rational> fractions;

  bool is_zero() const;
  std::string to_string() const;
  friend bool operator==(const QmodZElement& a, const QmodZElement& b) {
    return a.fractions == b.fractions;
  }
  friend bool operator<(const QmodZElement& a, const QmodZElement& b) {
    return a.fractions < b.fractions;
  }
};

/// Class of a locally free module of rank components.size(): a multiset of
/// elements of gp(P) ⊗ Q/Z in sorted order.
struct BundleClass {
  Monoid base;
  std::vector<QmodZElement> components;

  std::size_t rank() const { return components.size(); }
  std::string to_string() const;
  friend bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.base == b.base && a.components == b.components;
  }
};

/// Entries are (element of gp(P) in ambient coordinates, m >= 1).
BundleClass bundle_class(const Monoid& p, const std::vector<std::pair<Vector, Integer>>& raw);
bool is_classical(const BundleClass& c);
/// Throws MismatchedBase.
BundleClass direct_sum(const BundleClass& a, const BundleClass& b);

}  // namespace logmonoid
