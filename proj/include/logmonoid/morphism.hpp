#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logmonoid/lattice.hpp"
#include "logmonoid/monoid.hpp"

namespace logmonoid {

/// A monoid homomorphism given on the ambient covers: x ↦ ambient_map · x,
/// with ambient_map of size target rank × source rank.
struct MonoidHom {
  Monoid source;
  Monoid target;
  IntMatrix ambient_map;

  MonoidHom(Monoid source, Monoid target, IntMatrix ambient_map);

  static MonoidHom identity(const Monoid& p);

  GroupElement apply(const GroupElement& x) const;
  GroupElement apply(const Vector& x) const;
  /// The underlying map of ambient groups.
  GroupHom ambient_hom() const;
  /// Images of the source generators, in source generator order.
  std::vector<GroupElement> generator_images() const;
};

struct ValidationReport {
  bool ok = true;
  std::string error;  ///< "relations not respected" or "generator image outside target monoid"
  std::optional<GroupElement> offending_generator;
};

/// Checks both structural conditions without throwing.
ValidationReport check(const MonoidHom& h);
/// Throws InvalidInput with the report message.
void validate(const MonoidHom& h);

/// gp(Q) / h(gp(P)), presented on the generators of Q.
struct GpCokernel {
  FgAbelianGroup group;
  SubgroupHull target_hull;

  /// Class of a target ambient element lying in gp(Q).
  GroupElement project(const Vector& x) const;
};

GpCokernel gp_cokernel(const MonoidHom& h);

struct KummerWitness {
  GroupElement generator;  ///< target generator a
  std::optional<Integer> order;  ///< m, the order of a in the cokernel
  std::optional<GroupElement> preimage;  ///< b in the source ambient with h(b) = m·a
  bool verdict = false;  ///< b ∈ P^sat
};

struct KummerCertificate {
  bool kummer = false;
  bool injective = false;
  bool finite_cokernel = false;
  GroupStructure cokernel;
  std::vector<KummerWitness> witnesses;
  std::string reason;
};

/// Decides whether h is injective and every element of Q has a positive
/// multiple in h(P). Throws UngradedMonoid when P admits no positive grading.
KummerCertificate is_kummer(const MonoidHom& h);
/// Throws NotKummer.
void require_kummer(const MonoidHom& h);

MonoidHom compose(const MonoidHom& g, const MonoidHom& f);

/// True when h is bijective on group hulls and every target generator lies
/// in h(P) (so h(P) = Q).
bool is_isomorphism(const MonoidHom& h);

/// The image monoid h(P) inside the target ambient group.
Monoid image(const MonoidHom& h);

}  // namespace logmonoid
