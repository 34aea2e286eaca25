#pragma once

// Rational polyhedral cones generated by integer vectors. Internal to the
// library; the public entry points live in monoid.hpp.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "logmonoid/lattice.hpp"

namespace logmonoid::detail {

/// Calls fn on every k-subset of {0..n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn);

/// A cone in Q^n described inside the saturated lattice spanned by its
/// generators, where it is full-dimensional.
struct ConeData {
  std::size_t dim = 0;
  std::size_t rank = 0;
  /// n × rank; x * to_span gives span coordinates of x (x in the span).
  IntMatrix to_span;
  /// rank × n; rows form a basis of Z^n ∩ span.
  IntMatrix from_span;
  /// Nonzero generators in span coordinates.
  std::vector<Vector> generators;
  /// Inward primitive facet normals in span coordinates.
  std::vector<Vector> facets;
  bool pointed = false;
  /// Sum of facet normals; strictly positive on the nonzero cone when pointed.
  Vector grading;

  bool in_span(const Vector& x) const;
  Vector span_coordinates(const Vector& x) const;
  Vector ambient_vector(const Vector& y) const;
  bool contains_span(const Vector& y) const;
  /// Ambient functional extending the grading.
  Vector ambient_grading() const;
};

ConeData analyze_cone(const std::vector<Vector>& generators, std::size_t dim);

/// Hilbert basis of the cone intersected with Z^n, in ambient coordinates,
/// sorted. Throws NonPointedCone.
std::vector<Vector> hilbert_basis_of(const ConeData& cone);

}  // namespace logmonoid::detail
