#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logmonoid/monoid.hpp"
#include "logmonoid/morphism.hpp"

namespace logmonoid {

/// Pushout of P1 <- P0 -> P2. The ambient group of result is
/// (A1 ⊕ A2) / ⟨(h1(x), -h2(x)) : x a generator of P0⟩, generated on the
/// images of the generators of P1 and P2.
struct FsPushout {
  Monoid result;
  MonoidHom leg1;
  MonoidHom leg2;
  /// gp(result) presented on the generators of result.
  FgAbelianGroup gp_presentation;
};

/// The integral image of the pushout (no saturation). Throws
/// UngradedMonoid("ungraded pushout") when the image has no positive grading.
FsPushout pushout_int(const MonoidHom& h1, const MonoidHom& h2);
/// Saturated pushout.
FsPushout pushout_fs(const MonoidHom& h1, const MonoidHom& h2);

/// P^{1/n} as a copy of P with structural map ×n. Throws NotSaturated.
struct KummerRoot {
  Monoid root;
  MonoidHom map;
};
KummerRoot kummer_root(const Monoid& p, const Integer& n);

/// Adjoins b with n·b = a: L = gp(P) + Z·b and Q = {x ∈ L : n·x ∈ P}.
struct RootBySection {
  Monoid q;
  MonoidHom map;
  GroupElement root;
};
RootBySection root_by_section(const Monoid& p, const Vector& a, const Integer& n);

/// Compares the fs pushout of Q <-h- P -h-> Q with Q ⊕ (Q^gp/P^gp) along
/// the map induced by a ↦ (a, 0) and a ↦ (a, ā).
struct SelfProductReport {
  bool isomorphism = false;
  FsPushout pushout;
  /// Q ⊕ (Q^gp/P^gp).
  Monoid comparison_target;
  MonoidHom comparison;
  GroupStructure pushout_gp;
  GroupStructure comparison_gp;
};
/// Throws NotKummer.
SelfProductReport self_product_check(const MonoidHom& h);

struct PowerWitness {
  GroupElement generator;
  std::optional<Integer> n;  ///< n with n·a in the image of P'
};

struct BaseChangeReport {
  bool passed = false;
  FsPushout pushout;  ///< Q' with legs Q -> Q' and P' -> Q'
  GroupStructure torsion;  ///< Δ
  bool torsion_in_monoid = false;
  bool injective_mod_torsion = false;
  std::vector<PowerWitness> witnesses;  ///< non-torsion generators of Q'
  std::string failure;
};
/// Diagnostics for the base change Q' of a Kummer h: P -> Q along g: P -> P'.
/// Witnesses are searched among multiples k·m, k <= 64, of the cokernel
/// order m. Throws NotKummer, UngradedMonoid.
BaseChangeReport kummer_base_change(const MonoidHom& h, const MonoidHom& g);

}  // namespace logmonoid
