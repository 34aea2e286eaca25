#pragma once

// Degree-bounded verification of the splitting and equalizer identities for
// a Kummer hom over R0[P] with R0 = Z or Z/N, the Čech complex of the sheaf
// G_m,log/G_m on a Kummer cover, and H^1 of a finite abelian group by
// inhomogeneous cochains.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logmonoid/morphism.hpp"

namespace logmonoid {

/// Finite R0-linear combination of monomials of a monoid. Keys are
/// canonical ambient elements; coefficients are nonzero and, for N >= 2,
/// reduced into [0, N).
class MonoidAlgebraElement {
 public:
  MonoidAlgebraElement(const Monoid* base, Integer modulus);
  static MonoidAlgebraElement monomial(const Monoid* base, const Integer& modulus,
                                       const GroupElement& key, const Integer& coeff = 1);

  const Monoid& base() const { return *base_; }
  const Integer& modulus() const { return modulus_; }
  const std::map<GroupElement, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const GroupElement& key, const Integer& coeff);
  MonoidAlgebraElement& operator+=(const MonoidAlgebraElement& other);
  MonoidAlgebraElement& operator-=(const MonoidAlgebraElement& other);
  MonoidAlgebraElement scaled(const Integer& k) const;

  /// Checks the stored-form invariants, including membership of every key.
  bool well_formed(MembershipOracle& oracle) const;
  std::string to_string() const;

  friend bool operator==(const MonoidAlgebraElement& a, const MonoidAlgebraElement& b) {
    return a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
  }

 private:
  Integer reduce(const Integer& c) const;

  const Monoid* base_;
  Integer modulus_;
  std::map<GroupElement, Integer> terms_;
};

/// A failing input: the identity that broke, the monomial it broke on and
/// both sides after evaluation.
struct Certificate {
  std::string identity;
  std::string element;
  std::string expected;
  std::string actual;
};

struct CochainComplexReport {
  std::string check;
  bool passed = true;
  /// Monomials, elements or cochains examined.
  std::size_t checked = 0;
  std::optional<std::size_t> h0_dimension;
  std::optional<std::size_t> h1_dimension;
  std::vector<std::string> notes;
  std::optional<Certificate> certificate;

  void fail(Certificate c);
};

struct SplittingOptions {
  /// 0 means integer coefficients.
  Integer coeff_modulus = 0;
  Integer degree_bound = 6;
  /// Negative control: swap the two cases in the definition of ι.
  bool corrupt_iota = false;
  /// When false a non-Kummer hom is evaluated anyway and is expected to fail.
  bool require_kummer = true;
};

/// Evaluates s∘α = id on every monomial p of P and α∘s + ι∘(β2 − β1) = id on
/// every monomial a of Q, with weights taken from a positive grading of Q
/// (pulled back along h for P) up to the degree bound. Throws NotKummer,
/// UngradedMonoid.
CochainComplexReport splitting_check(const MonoidHom& h, const SplittingOptions& options = {});

struct EqualizerReport {
  CochainComplexReport report;
  /// The equalized elements, sorted by (degree, canonical form).
  std::vector<GroupElement> equalized;
};

/// For every a in Q up to the degree bound: (a, 0) = (a, ā) in
/// Q ⊕ (Q^gp/P^gp) iff a ∈ h(P). Throws NotKummer.
EqualizerReport equalizer_check(const MonoidHom& h, const Integer& degree_bound = 6,
                                bool require_kummer = true);

/// R = Q^r with r the free rank of gp(P), S = {1..n'}. Reports dim H^0 as the
/// dimension of the image of δ0 (the copy of R inside Map(S, R)) and
/// dim H^1 = dim ker δ1 − dim im δ0. Requires n' | n.
CochainComplexReport gmlog_complex(const Monoid& p, const Integer& n, const Integer& n_prime);

/// H^1(H, M) for a finite group H presented on its ambient unit vectors,
/// acting on M by action[i] for the i-th unit vector. Throws
/// InconsistentAction when the matrices do not define an action.
GroupStructure group_h1(const FgAbelianGroup& h, const FgAbelianGroup& m,
                        const std::vector<IntMatrix>& action);
/// Trivial action.
GroupStructure group_h1(const FgAbelianGroup& h, const FgAbelianGroup& m);

}  // namespace logmonoid
