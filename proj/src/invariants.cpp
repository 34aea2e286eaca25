#include "logmonoid/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace logmonoid {

namespace {

void require_residue_char(const Integer& p) {
  if (p < 0 || (p != 0 && mpz_probab_prime_p(p.get_mpz_t(), 25) == 0))
    throw InvalidInput("residue characteristic must be 0 or a prime, got " + p.get_str());
}

// Ties on the class are broken by the representative so the order is total.
bool component_less(const QmodZElement& a, const QmodZElement& b) {
  if (a.fractions != b.fractions) return a.fractions < b.fractions;
  return std::tie(a.base, a.denominator) < std::tie(b.base, b.denominator);
}

Integer prime_to_part(Integer d, const Integer& p) {
  if (p == 0) return d;
  while (d % p == 0) d /= p;
  return d;
}

GroupStructure gp_structure(const Monoid& p) {
  require_saturated(p);
  return gp(p).group.structure();
}

}  // namespace

std::string ProfiniteDescriptor::to_string() const {
  std::string completion = excluded_prime == 0 ? "Zhat" : "Zhat^(" + excluded_prime.get_str() + "')";
  std::string s;
  if (free_rank > 0) s = completion + "(1)^" + std::to_string(free_rank);
  for (const auto& d : finite_factors) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str() + "(1)";
  }
  return s.empty() ? "0" : s;
}

GroupSchemeDescriptor GroupSchemeDescriptor::mu(const Integer& m) {
  GroupSchemeDescriptor g;
  g.mu_orders.push_back(m);
  return g;
}

GroupSchemeDescriptor GroupSchemeDescriptor::gm(std::size_t rank) {
  GroupSchemeDescriptor g;
  g.torus_rank = rank;
  return g;
}

void GroupSchemeDescriptor::validate() const {
  for (const auto& m : mu_orders)
    if (m < 1) throw InvalidInput("mu order must be >= 1, got " + m.get_str());
}

std::string TorsionGroup::to_string() const {
  std::string s = finite.is_trivial() ? "" : finite.to_string();
  if (qz_rank > 0) {
    if (!s.empty()) s += " + ";
    s += "(Q/Z)^" + std::to_string(qz_rank);
  }
  return s.empty() ? "0" : s;
}

ProfiniteDescriptor pi1_log(const GroupStructure& gp, const Integer& residue_char) {
  require_residue_char(residue_char);
  ProfiniteDescriptor d;
  d.free_rank = gp.free_rank;
  d.excluded_prime = residue_char;
  for (const auto& f : gp.invariant_factors) {
    Integer part = prime_to_part(f, residue_char);
    if (part != 1) d.finite_factors.push_back(part);
  }
  return d;
}

ProfiniteDescriptor pi1_log(const Monoid& p, const Integer& residue_char) {
  require_residue_char(residue_char);
  return pi1_log(gp_structure(p), residue_char);
}

TorsionGroup r1_eps_fiber(const GroupStructure& gp, const GroupSchemeDescriptor& g) {
  g.validate();
  TorsionGroup out;
  Vector orders;
  for (const auto& m : g.mu_orders) {
    GroupStructure t = tensor_cyclic(gp, m);
    orders.insert(orders.end(), t.invariant_factors.begin(), t.invariant_factors.end());
  }
  out.finite = canonical_structure(0, orders);
  out.qz_rank = gp.free_rank * g.torus_rank;
  return out;
}

TorsionGroup r1_eps_fiber(const Monoid& p, const GroupSchemeDescriptor& g) {
  return r1_eps_fiber(gp_structure(p), g);
}

GroupStructure h1_kummer(const Monoid& p, const Integer& m) {
  if (m < 1) throw InvalidInput("m must be >= 1");
  return tensor_cyclic(gp_structure(p), m);
}

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::size_t>> table, std::size_t identity)
    : table_(std::move(table)), identity_(identity) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidInput("group table is empty");
  if (identity_ >= n) throw InvalidInput("identity index out of range");
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidInput("group table is not square");
    for (std::size_t x : row)
      if (x >= n) throw InvalidInput("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table_[identity_][a] != a || table_[a][identity_] != a)
      throw InvalidInput("identity law fails at element " + std::to_string(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InvalidInput("associativity fails at (" + std::to_string(a) + ", " +
                             std::to_string(b) + ", " + std::to_string(c) + ")");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] == n) throw InvalidInput("element " + std::to_string(a) + " has no inverse");
}

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group order must be >= 1");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroupTable(std::move(t), 0);
}

FiniteGroupTable FiniteGroupTable::symmetric(std::size_t k) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  // (a b)(x) = a(b(x))
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> c(k);
      for (std::size_t x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroupTable(std::move(t), 0);
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      t[x][y] = a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
  return FiniteGroupTable(std::move(t), a.identity() * nb + b.identity());
}

std::size_t FiniteGroupTable::power(std::size_t a, const Integer& k) const {
  Integer e = k % Integer(element_order(a));
  if (e < 0) e += element_order(a);
  std::size_t r = identity_;
  for (unsigned long i = 0; i < e.get_ui(); ++i) r = multiply(r, a);
  return r;
}

std::size_t FiniteGroupTable::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = multiply(x, a)) ++k;
  return k;
}

bool FiniteGroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (!commute(a, b)) return false;
  return true;
}

FiniteTorsorClasses h1_finite_group(const GroupStructure& gp, const Integer& residue_char,
                                    const Integer& n, const FiniteGroupTable& g) {
  require_residue_char(residue_char);
  if (n < 1) throw InvalidInput("n must be >= 1");
  if (residue_char != 0 && gcd(n, residue_char) != 1) throw NotInvertible();

  FiniteTorsorClasses out;
  out.source = hom_to_cyclic(gp, n);
  const Vector& orders = out.source.invariant_factors;
  const std::size_t k = orders.size();

  // Candidate images per generator: elements whose order divides e_i.
  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t x = 0; x < g.order(); ++x)
      if (orders[i] % Integer(g.element_order(x)) == 0) candidates[i].push_back(x);

  std::set<std::vector<std::size_t>> classes;
  std::vector<std::size_t> tuple;
  auto canonical = [&](const std::vector<std::size_t>& t) {
    std::vector<std::size_t> best = t;
    for (std::size_t c = 0; c < g.order(); ++c) {
      std::vector<std::size_t> conj(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) conj[i] = g.multiply(g.multiply(c, t[i]), g.inverse(c));
      best = std::min(best, conj);
    }
    return best;
  };
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      ++out.hom_count;
      classes.insert(canonical(tuple));
      return;
    }
    for (std::size_t x : candidates[i]) {
      bool ok = true;
      for (std::size_t y : tuple) ok = ok && g.commute(x, y);
      if (!ok) continue;
      tuple.push_back(x);
      self(self, i + 1);
      tuple.pop_back();
    }
  };
  search(search, 0);
  out.representatives.assign(classes.begin(), classes.end());
  return out;
}

FiniteTorsorClasses h1_finite_group(const Monoid& p, const Integer& residue_char, const Integer& n,
                                    const FiniteGroupTable& g) {
  require_residue_char(residue_char);
  if (residue_char != 0 && gcd(n, residue_char) != 1) throw NotInvertible();
  return h1_finite_group(gp_structure(p), residue_char, n, g);
}

bool QmodZElement::is_zero() const {
  return std::all_of(fractions.begin(), fractions.end(), [](const Rational& q) { return q == 0; });
}

std::string QmodZElement::to_string() const {
  if (fractions.size() == 1) return fractions[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < fractions.size(); ++i) s += (i ? ", " : "") + fractions[i].get_str();
  return s + ")";
}

std::string BundleClass::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < components.size(); ++i) s += (i ? ", " : "") + components[i].to_string();
  return s + "]";
}

BundleClass bundle_class(const Monoid& p, const std::vector<std::pair<Vector, Integer>>& raw) {
  require_saturated(p);
  SubgroupHull hull = gp(p);
  BundleClass c;
  c.base = p;
  for (const auto& [x, m] : raw) {
    if (m < 1) throw InvalidInput("denominator must be >= 1, got " + m.get_str());
    if (x.size() != p.rank())
      throw InvalidInput("element " + to_string(x) + " has length " + std::to_string(x.size()) +
                         ", expected " + std::to_string(p.rank()));
    auto h = hull.to_hull(x);
    if (!h) throw InvalidInput("element " + to_string(x) + " is outside gp(P)");
    QmodZElement e;
    e.base = p.ambient().normalize(x);
    e.denominator = m;
    for (const auto& f : hull.group.coordinates(*h).free) {
      Integer r = f % m;
      if (r < 0) r += m;
      Rational q(r, m);
      q.canonicalize();
      e.fractions.push_back(q);
    }
    c.components.push_back(std::move(e));
  }
  std::sort(c.components.begin(), c.components.end(), component_less);
  return c;
}

bool is_classical(const BundleClass& c) {
  return std::all_of(c.components.begin(), c.components.end(),
                     [](const QmodZElement& e) { return e.is_zero(); });
}

BundleClass direct_sum(const BundleClass& a, const BundleClass& b) {
  if (!(a.base == b.base)) throw MismatchedBase();
  BundleClass c = a;
  c.components.insert(c.components.end(), b.components.begin(), b.components.end());
  std::sort(c.components.begin(), c.components.end(), component_less);
  return c;
}

}  // namespace logmonoid
