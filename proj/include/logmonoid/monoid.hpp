#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "logmonoid/lattice.hpp"

namespace logmonoid {

/// The submonoid of a finitely generated abelian group generated by a finite
/// list. Generators are stored in canonical form, sorted, without zero and
/// without duplicates; the empty list is the trivial monoid.
class Monoid {
 public:
  Monoid() = default;
  Monoid(FgAbelianGroup ambient, const std::vector<Vector>& generators);
  Monoid(FgAbelianGroup ambient, const std::vector<GroupElement>& generators);

  /// N^k inside Z^k.
  static Monoid free(std::size_t k);

  const FgAbelianGroup& ambient() const { return ambient_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  std::vector<Vector> generator_vectors() const;
  std::size_t rank() const { return ambient_.ambient_rank(); }

  std::string to_string() const;

  /// Same ambient group and generator list.
  friend bool operator==(const Monoid& a, const Monoid& b) {
    return a.ambient_ == b.ambient_ && a.generators_ == b.generators_;
  }

 private:
  FgAbelianGroup ambient_;
  std::vector<GroupElement> generators_;
};

/// Integer functional on the ambient cover, vanishing on relations, positive
/// on infinite-order generators and zero on torsion.
struct Grading {
  Vector weights;

  Integer weight(const GroupElement& x) const { return dot(weights, x.coords); }
  Integer weight(const Vector& x) const { return dot(weights, x); }
};

std::optional<Grading> find_positive_grading(const Monoid& p);
/// Throws UngradedMonoid when no positive grading exists.
Grading require_grading(const Monoid& p);

/// The subgroup of the ambient group generated by P, presented on the
/// generators of P.
SubgroupHull gp(const Monoid& p);

/// Graded membership oracle. Elements are enumerated by exact degree, each
/// layer closed under the torsion generators; layers are extended on demand.
class MembershipOracle {
 public:
  explicit MembershipOracle(const Monoid& p);
  MembershipOracle(const Monoid& p, Grading grading);
  MembershipOracle(const MembershipOracle&) = delete;
  MembershipOracle& operator=(const MembershipOracle&) = delete;
  MembershipOracle(MembershipOracle&&) = default;
  MembershipOracle& operator=(MembershipOracle&&) = default;

  const Monoid& monoid() const { return monoid_; }
  const Grading& grading() const { return grading_; }

  bool contains(const GroupElement& x);
  bool contains(const Vector& x) { return contains(monoid_.ambient().normalize(x)); }
  /// Nonnegative coefficients on the generators, or nullopt.
  std::optional<Vector> decompose(const GroupElement& x);
  /// Every element of degree <= d, sorted by (degree, canonical form).
  std::vector<GroupElement> elements_up_to(const Integer& d);

 private:
  struct Node {
    std::size_t generator;  ///< generator used last; npos for 0
    const GroupElement* previous;
  };
  void extend_to(std::size_t degree);
  void close_layer(std::size_t degree);

  Monoid monoid_;
  Grading grading_;
  std::vector<std::size_t> torsion_gens_;
  std::vector<std::pair<std::size_t, std::size_t>> positive_gens_;  ///< (index, weight)
  std::map<GroupElement, Node> nodes_;
  std::vector<std::vector<const GroupElement*>> layers_;
};

/// Throws UngradedMonoid.
bool contains(const Monoid& p, const GroupElement& x);
bool contains(const Monoid& p, const Vector& x);
std::optional<Vector> decompose(const Monoid& p, const GroupElement& x);

/// Minimal generating set of cone(generators) ∩ lattice, sorted. The lattice
/// is Z^n when no basis is given, otherwise the row span of lattice_basis;
/// generators must lie in its rational span. Throws NonPointedCone.
std::vector<Vector> hilbert_basis(const std::vector<Vector>& generators, std::size_t n,
                                  const std::optional<IntMatrix>& lattice_basis = std::nullopt);

/// P^sat inside gp(P): preimage of the saturated torsion-free image together
/// with all torsion of gp(P). Generators are sorted and minimal modulo
/// torsion. Throws UngradedMonoid.
Monoid saturation(const Monoid& p);
bool is_saturated(const Monoid& p);
/// Throws NotSaturated.
void require_saturated(const Monoid& p);

}  // namespace logmonoid
