#include "cone.hpp"

#include <algorithm>

namespace logmonoid::detail {

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool ConeData::in_span(const Vector& x) const {
  return ambient_vector(span_coordinates(x)) == x;
}

Vector ConeData::span_coordinates(const Vector& x) const { return to_span.apply_left(x); }

Vector ConeData::ambient_vector(const Vector& y) const { return from_span.apply_left(y); }

bool ConeData::contains_span(const Vector& y) const {
  for (const auto& f : facets)
    if (dot(f, y) < 0) return false;
  return true;
}

Vector ConeData::ambient_grading() const {
  if (rank == 0) return zero_vector(dim);
  return to_span.apply(grading);
}

ConeData analyze_cone(const std::vector<Vector>& generators, std::size_t dim) {
  ConeData c;
  c.dim = dim;
  std::vector<Vector> gens;
  for (const auto& g : generators) {
    if (g.size() != dim) throw InvalidInput("cone generator has wrong length");
    if (!is_zero(g)) gens.push_back(g);
  }
  if (gens.empty()) {
    c.to_span = IntMatrix(dim, 0);
    c.from_span = IntMatrix(0, dim);
    c.pointed = true;
    return c;
  }
  SmithForm s = smith_normal_form(IntMatrix::from_rows(gens, dim));
  c.rank = s.rank;
  c.from_span = s.v_inverse.submatrix(0, s.rank, 0, dim);
  c.to_span = s.v.submatrix(0, dim, 0, s.rank);
  for (const auto& g : gens) c.generators.push_back(c.span_coordinates(g));
  std::sort(c.generators.begin(), c.generators.end());
  c.generators.erase(std::unique(c.generators.begin(), c.generators.end()),
                     c.generators.end());

  const std::size_t r = c.rank;
  const auto& gs = c.generators;
  if (r == 1) {
    bool pos = false, neg = false;
    for (const auto& g : gs) (g[0] > 0 ? pos : neg) = true;
    if (pos && !neg) c.facets.push_back(make_vector({1}));
    if (neg && !pos) c.facets.push_back(make_vector({-1}));
  } else {
    for_each_combination(gs.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vector> rows;
      for (std::size_t i : idx) rows.push_back(gs[i]);
      IntMatrix m = IntMatrix::from_rows(rows, r);
      if (m.rank() != r - 1) return;
      Vector n = right_kernel(m).row(0);
      bool pos = false, neg = false;
      for (const auto& g : gs) {
        Integer v = dot(n, g);
        if (v > 0) pos = true;
        if (v < 0) neg = true;
      }
      if (pos && neg) return;
      if (neg) n = Integer(-1) * n;
      c.facets.push_back(n);
    });
    std::sort(c.facets.begin(), c.facets.end());
    c.facets.erase(std::unique(c.facets.begin(), c.facets.end()), c.facets.end());
  }

  if (!c.facets.empty()) {
    c.grading = zero_vector(r);
    for (const auto& f : c.facets) c.grading = c.grading + f;
    c.pointed = std::all_of(gs.begin(), gs.end(),
                            [&](const Vector& g) { return dot(c.grading, g) > 0; });
  }
  return c;
}

namespace {

// Nonzero lattice points of the half-open parallelepiped spanned by the rows
// of basis (square, nonsingular).
std::vector<Vector> parallelepiped_points(const IntMatrix& basis) {
  const std::size_t r = basis.rows();
  const Integer det = basis.determinant();
  const Integer vol = abs(det);
  std::vector<Vector> out;
  if (vol == 1) return out;

  // adj(basis) = det * basis^{-1}, column by column.
  IntMatrix adj(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    Vector e = zero_vector(r);
    e[j] = 1;
    // c * basis = e  gives row j of basis^{-1}.
    auto c = solve_rational(basis, e);
    for (std::size_t i = 0; i < r; ++i) {
      Rational v = (*c)[i] * Rational(det);
      adj(j, i) = v.get_num();
    }
  }

  SmithForm s = smith_normal_form(basis);
  Vector d = s.diagonal();
  Vector y = zero_vector(r);
  for (;;) {
    Vector x = s.v_inverse.apply_left(y);
    Vector lam = adj.apply_left(x);
    Vector p = zero_vector(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer li = det > 0 ? lam[i] : Integer(-lam[i]);
      Integer ri;
      mpz_fdiv_r(ri.get_mpz_t(), li.get_mpz_t(), vol.get_mpz_t());
      if (ri == 0) continue;
      for (std::size_t j = 0; j < r; ++j) p[j] += ri * basis(i, j);
    }
    for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), vol.get_mpz_t());
    if (!is_zero(p)) out.push_back(std::move(p));

    std::size_t k = 0;
    for (; k < r; ++k) {
      y[k] += 1;
      if (y[k] < d[k]) break;
      y[k] = 0;
    }
    if (k == r) break;
  }
  return out;
}

}  // namespace

std::vector<Vector> hilbert_basis_of(const ConeData& cone) {
  if (!cone.pointed) throw NonPointedCone();
  const std::size_t r = cone.rank;
  if (r == 0) return {};
  const auto& gs = cone.generators;

  std::vector<Vector> cand = gs;
  for_each_combination(gs.size(), r, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> rows;
    for (std::size_t i : idx) rows.push_back(gs[i]);
    IntMatrix b = IntMatrix::from_rows(rows, r);
    if (b.determinant() == 0) return;
    for (auto& p : parallelepiped_points(b)) cand.push_back(std::move(p));
  });
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<std::pair<Integer, Vector>> by_degree;
  by_degree.reserve(cand.size());
  for (auto& v : cand) by_degree.emplace_back(dot(cone.grading, v), std::move(v));
  std::sort(by_degree.begin(), by_degree.end());

  std::vector<std::pair<Integer, Vector>> basis;
  for (const auto& [deg, v] : by_degree) {
    bool reducible = false;
    for (const auto& [hdeg, h] : basis) {
      if (hdeg >= deg) break;
      if (cone.contains_span(v - h)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.emplace_back(deg, v);
  }

  std::vector<Vector> out;
  for (const auto& [deg, v] : basis) out.push_back(cone.ambient_vector(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace logmonoid::detail
