#include "support.hpp"

#include <algorithm>
#include <functional>

namespace lmtest {

namespace {

// Cofactor expansion; deliberately independent of the library determinant.
Integer laplace_det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    Integer t = a[0][j] * laplace_det(minor);
    s += (j % 2 == 0) ? t : Integer(-t);
  }
  return s;
}

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      fn(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
  std::vector<Integer> out;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer g = 0;
    subsets(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
      subsets(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
        std::vector<std::vector<Integer>> a;
        for (std::size_t i : rs) {
          std::vector<Integer> row;
          for (std::size_t j : cs) row.push_back(m(i, j));
          a.push_back(row);
        }
        Integer d = laplace_det(a);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    out.push_back(g);
  }
  return out;
}

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<Integer> dd = determinantal_divisors(m);
  std::vector<Integer> out;
  Integer prev = 1;
  for (const auto& d : dd) {
    if (d == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

std::vector<Integer> hom_cyclic_kernel_profile(const GroupStructure& a, long n) {
  // Possible images of each Smith generator.
  std::vector<std::vector<long>> choices;
  for (std::size_t i = 0; i < a.free_rank; ++i) {
    std::vector<long> c;
    for (long x = 0; x < n; ++x) c.push_back(x);
    choices.push_back(c);
  }
  for (const auto& d : a.invariant_factors) {
    std::vector<long> c;
    long dl = d.get_si();
    for (long x = 0; x < n; ++x)
      if ((dl * x) % n == 0) c.push_back(x);
    choices.push_back(c);
  }
  std::vector<Integer> profile(static_cast<std::size_t>(n), Integer(0));
  std::vector<long> tuple(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      for (long k = 1; k <= n; ++k) {
        bool killed = std::all_of(tuple.begin(), tuple.end(), [&](long x) { return (k * x) % n == 0; });
        if (killed) profile[static_cast<std::size_t>(k - 1)] += 1;
      }
      return;
    }
    for (long x : choices[i]) {
      tuple[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return profile;
}

std::vector<Integer> structure_kernel_profile(const GroupStructure& b, long n) {
  std::vector<Integer> profile;
  for (long k = 1; k <= n; ++k) {
    Integer c = 1;
    for (const auto& e : b.invariant_factors) {
      Integer g;
      Integer kk = k;
      mpz_gcd(g.get_mpz_t(), kk.get_mpz_t(), e.get_mpz_t());
      c *= g;
    }
    profile.push_back(c);
  }
  return profile;
}

bool saturation_by_search(MembershipOracle& oracle, const GroupElement& a, long bound) {
  const FgAbelianGroup& amb = oracle.monoid().ambient();
  for (long n = 1; n <= bound; ++n)
    if (oracle.contains(amb.multiply(Integer(n), a))) return true;
  return false;
}

bool in_rational_cone(const std::vector<Vector>& gens, const Vector& x) {
  if (is_zero(x)) return true;
  bool found = false;
  for (std::size_t k = 1; k <= gens.size() && !found; ++k) {
    subsets(gens.size(), k, [&](const std::vector<std::size_t>& idx) {
      if (found) return;
      std::vector<Vector> rows;
      for (std::size_t i : idx) rows.push_back(gens[i]);
      IntMatrix b = IntMatrix::from_rows(rows, x.size());
      if (b.rank() != k) return;
      auto c = solve_rational(b, x);
      if (!c) return;
      if (std::all_of(c->begin(), c->end(), [](const Rational& q) { return q >= 0; })) found = true;
    });
  }
  return found;
}

std::vector<Vector> brute_hilbert_basis(const std::vector<Vector>& gens, std::size_t n, long box,
                                        const std::vector<Vector>& lattice_basis, long lo) {
  auto in_lattice = [&](const Vector& x) {
    if (lattice_basis.empty()) return true;
    auto c = solve_rational(IntMatrix::from_rows(lattice_basis, n), x);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rational& q) { return q.get_den() == 1; });
  };
  auto in_monoid = [&](const Vector& x) { return in_lattice(x) && in_rational_cone(gens, x); };

  std::vector<Vector> points;
  Vector x(n, Integer(lo));
  for (;;) {
    if (!is_zero(x) && in_monoid(x)) points.push_back(x);
    std::size_t i = 0;
    for (; i < n; ++i) {
      x[i] += 1;
      if (x[i] <= box) break;
      x[i] = lo;
    }
    if (i == n) break;
  }
  std::vector<Vector> out;
  for (const auto& p : points) {
    bool reducible = false;
    for (const auto& q : points) {
      if (q == p) continue;
      Vector r = p - q;
      if (!is_zero(r) && in_monoid(r)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lmtest
