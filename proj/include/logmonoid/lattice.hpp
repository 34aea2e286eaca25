#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "logmonoid/errors.hpp"

namespace logmonoid {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Integer>;

Vector make_vector(std::initializer_list<long> values);
Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Integer& k, const Vector& v);
Integer dot(const Vector& a, const Vector& b);
/// gcd of all entries (0 for the zero vector).
Integer content(const Vector& v);
std::string to_string(const Vector& v);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<Vector>& columns,
                                std::size_t rows);
  static IntMatrix diagonal(const Vector& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> row_vectors() const;

  IntMatrix transpose() const;
  /// Vertical concatenation; column counts must agree.
  IntMatrix stack(const IntMatrix& below) const;
  /// Horizontal concatenation; row counts must agree.
  IntMatrix beside(const IntMatrix& right) const;
  IntMatrix block_diagonal(const IntMatrix& other) const;
  IntMatrix submatrix(std::size_t row0, std::size_t rows, std::size_t col0,
                      std::size_t cols) const;

  /// M x for a column vector x.
  Vector apply(const Vector& x) const;
  /// x M for a row vector x.
  Vector apply_left(const Vector& x) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row(dst) += k * row(src)
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col(dst) += k * col(src)
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);

  bool is_zero() const;
  bool is_diagonal() const;
  /// Fraction-free (Bareiss) determinant; square matrices only.
  Integer determinant() const;
  /// Rank over the rationals.
  std::size_t rank() const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& k, const IntMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// u * m * v == d with u, v unimodular, d diagonal, d_1 | d_2 | ... and all
/// diagonal entries nonnegative. v_inverse is tracked alongside v.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix v_inverse;
  std::size_t rank = 0;

  /// The first min(rows, cols) diagonal entries of d.
  Vector diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice: echelon rows with
/// positive pivots, entries above each pivot reduced into [0, pivot), zero
/// rows removed.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Basis (rows) of the lattice {y : y m = 0}.
IntMatrix left_kernel(const IntMatrix& m);
/// Basis (rows) of the lattice {x : m x = 0}.
IntMatrix right_kernel(const IntMatrix& m);
/// Basis (rows) of the saturated lattice Z^n ∩ span_Q(rows of m).
IntMatrix saturated_span(const IntMatrix& m);
/// Rational solve of c * basis = target for a full-row-rank basis.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& basis,
                                                    const Vector& target);

/// Free rank plus invariant factors d_1 | d_2 | ... (all >= 2).
struct GroupStructure {
  std::size_t free_rank = 0;
  Vector invariant_factors;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Order of the torsion part.
  Integer torsion_order() const;
  /// Exponent of the torsion part (1 when torsion-free).
  Integer exponent() const;
  std::string to_string() const;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// Canonicalises Z^free ⊕ ⊕ Z/orders[i]; orders equal to 0 count as free
/// summands, orders equal to 1 vanish.
GroupStructure canonical_structure(std::size_t free_rank, const Vector& orders);

/// Canonical representative of a coset of the relation lattice.
struct GroupElement {
  Vector coords;

  bool is_zero() const { return logmonoid::is_zero(coords); }
  std::string to_string() const { return logmonoid::to_string(coords); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.coords < b.coords;
  }
};

/// Coordinates with respect to the Smith basis Z^r ⊕ ⊕ Z/d_i.
struct StructureCoordinates {
  Vector free;
  Vector torsion;  ///< entry i reduced into [0, d_i)
};

namespace detail {
struct GroupData;
}

/// Z^k modulo the row span of a relation matrix. Immutable; copies share the
/// precomputed normal forms.
class FgAbelianGroup {
 public:
  FgAbelianGroup() : FgAbelianGroup(0, IntMatrix(0, 0)) {}
  FgAbelianGroup(std::size_t ambient_rank, const IntMatrix& relations);

  static FgAbelianGroup free(std::size_t rank);
  static FgAbelianGroup cyclic(const Integer& n);
  static FgAbelianGroup direct_sum(const FgAbelianGroup& a,
                                   const FgAbelianGroup& b);

  std::size_t ambient_rank() const;
  const IntMatrix& relations() const;
  /// HNF of the relation lattice; defines the canonical form.
  const IntMatrix& relation_basis() const;
  const GroupStructure& structure() const;

  GroupElement normalize(const Vector& v) const;
  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement subtract(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement multiply(const Integer& k, const GroupElement& a) const;
  /// Ambient unit vector e_i.
  GroupElement unit(std::size_t i) const;
  bool in_relation_lattice(const Vector& v) const;

  StructureCoordinates coordinates(const GroupElement& x) const;
  GroupElement from_coordinates(const Vector& free, const Vector& torsion) const;
  /// Linear functional on the ambient cover reading off free coordinate i.
  Vector free_coordinate_functional(std::size_t i) const;

  /// nullopt means infinite order.
  std::optional<Integer> element_order(const GroupElement& x) const;
  bool is_torsion(const GroupElement& x) const {
    return element_order(x).has_value();
  }

  /// Smith generators of the torsion subgroup, one per invariant factor.
  std::vector<GroupElement> torsion_generators() const;
  /// Every torsion element in canonical sorted order.
  std::vector<GroupElement> torsion_elements(std::size_t limit = 1u << 20) const;

  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b);

 private:
  std::shared_ptr<const detail::GroupData> data_;
};

/// The torsion subgroup Δ with its generators.
struct TorsionSubgroup {
  std::vector<GroupElement> generators;
  GroupStructure structure;
};
TorsionSubgroup torsion_subgroup(const FgAbelianGroup& a);
GroupStructure structure(const FgAbelianGroup& a);
GroupElement normalize(const FgAbelianGroup& a, const Vector& v);
std::optional<Integer> element_order(const FgAbelianGroup& a,
                                     const GroupElement& x);

/// Homomorphism between presented groups given on ambient covers:
/// x ↦ matrix * x (matrix is target rank × source rank).
struct GroupHom {
  FgAbelianGroup source;
  FgAbelianGroup target;
  IntMatrix matrix;

  GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);

  GroupElement operator()(const GroupElement& x) const;
  /// Every source relation maps into the target relation lattice.
  bool is_well_defined() const;
  void require_well_defined() const;
};

struct Cokernel {
  FgAbelianGroup group;
  GroupHom projection;
};

/// Throws InvalidInput when the map does not respect relations.
Cokernel cokernel(const GroupHom& f);
bool kernel_is_trivial(const GroupHom& f);
/// Generators (ambient source vectors) of ker f modulo relations.
std::vector<Vector> kernel_generators(const GroupHom& f);

/// Hom(A, Z/n).
GroupStructure hom_to_cyclic(const FgAbelianGroup& a, const Integer& n);
GroupStructure hom_to_cyclic(const GroupStructure& a, const Integer& n);
/// Ext^1(A, B) = ⊕_i B / d_i B over the invariant factors of A.
GroupStructure ext1(const GroupStructure& a, const GroupStructure& b);
/// Hom(A, B) for arbitrary finitely generated A, B.
GroupStructure hom_group(const GroupStructure& a, const GroupStructure& b);
/// A / nA.
GroupStructure tensor_cyclic(const GroupStructure& a, const Integer& n);

/// Solves sum c_j g_j = t in a presented group for a fixed generator list.
/// The Smith form of the stacked system is computed once.
class SubgroupSolver {
 public:
  SubgroupSolver() = default;
  SubgroupSolver(const FgAbelianGroup& group, std::vector<Vector> generators);

  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<Vector>& generators() const { return generators_; }
  /// Integer coefficients, or nullopt when t is outside the subgroup.
  std::optional<Vector> solve(const Vector& t) const;
  /// Basis of the coefficient vectors c with sum c_j g_j = 0.
  const IntMatrix& relation_module() const { return relation_module_; }

 private:
  std::vector<Vector> generators_;
  std::size_t ambient_rank_ = 0;
  SmithForm snf_;
  IntMatrix relation_module_;
};

/// The subgroup generated by a list of elements, presented intrinsically as
/// Z^m / (relations among the generators).
struct SubgroupHull {
  FgAbelianGroup group;
  /// ambient rank × m, column j is generator j.
  IntMatrix inclusion;
  SubgroupSolver solver;

  SubgroupHull(const FgAbelianGroup& ambient, const std::vector<Vector>& gens);

  /// Hull element for an ambient element, or nullopt if outside.
  std::optional<GroupElement> to_hull(const Vector& x) const;
  Vector to_ambient(const GroupElement& h) const;

 private:
  FgAbelianGroup ambient_;
};

}  // namespace logmonoid
