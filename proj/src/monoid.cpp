#include "logmonoid/monoid.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "cone.hpp"

namespace logmonoid {

namespace {

constexpr std::size_t kNoGenerator = std::numeric_limits<std::size_t>::max();
// Membership layers are materialized up to this degree.
constexpr unsigned long kMaxDegree = 200000;

std::vector<GroupElement> canonical_list(const FgAbelianGroup& a,
                                         const std::vector<GroupElement>& gens) {
  std::vector<GroupElement> out;
  for (const auto& g : gens) {
    GroupElement n = a.normalize(g.coords);
    if (!n.is_zero()) out.push_back(std::move(n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Monoid::Monoid(FgAbelianGroup ambient, const std::vector<Vector>& generators)
    : ambient_(std::move(ambient)) {
  std::vector<GroupElement> gens;
  gens.reserve(generators.size());
  for (const auto& v : generators) gens.push_back(GroupElement{v});
  generators_ = canonical_list(ambient_, gens);
}

Monoid::Monoid(FgAbelianGroup ambient, const std::vector<GroupElement>& generators)
    : ambient_(std::move(ambient)), generators_(canonical_list(ambient_, generators)) {}

Monoid Monoid::free(std::size_t k) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Vector e = zero_vector(k);
    e[i] = 1;
    gens.push_back(e);
  }
  return Monoid(FgAbelianGroup::free(k), gens);
}

std::vector<Vector> Monoid::generator_vectors() const {
  std::vector<Vector> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.coords);
  return out;
}

std::string Monoid::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ",";
    s += generators_[i].to_string();
  }
  return s + "> in " + ambient_.to_string();
}

// ---------------------------------------------------------------- grading

std::optional<Grading> find_positive_grading(const Monoid& p) {
  const FgAbelianGroup& a = p.ambient();
  const std::size_t fr = a.structure().free_rank;
  std::vector<Vector> images;
  for (const auto& g : p.generators()) images.push_back(a.coordinates(g).free);
  detail::ConeData cone = detail::analyze_cone(images, fr);
  if (!cone.pointed) return std::nullopt;
  Vector w_free = cone.ambient_grading();
  Vector w = zero_vector(a.ambient_rank());
  for (std::size_t i = 0; i < fr; ++i) {
    if (w_free[i] == 0) continue;
    w = w + w_free[i] * a.free_coordinate_functional(i);
  }
  Integer c = content(w);
  if (c > 1)
    for (auto& x : w) x /= c;
  return Grading{w};
}

Grading require_grading(const Monoid& p) {
  auto g = find_positive_grading(p);
  if (!g) throw UngradedMonoid();
  return *g;
}

SubgroupHull gp(const Monoid& p) { return SubgroupHull(p.ambient(), p.generator_vectors()); }

// ---------------------------------------------------------------- membership

MembershipOracle::MembershipOracle(const Monoid& p) : MembershipOracle(p, require_grading(p)) {}

MembershipOracle::MembershipOracle(const Monoid& p, Grading grading)
    : monoid_(p), grading_(std::move(grading)) {
  const auto& gens = monoid_.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Integer w = grading_.weight(gens[i]);
    if (w < 0) throw InvalidInput("grading is negative on a generator");
    if (w == 0) {
      if (!monoid_.ambient().is_torsion(gens[i]))
        throw InvalidInput("grading vanishes on an infinite-order generator");
      torsion_gens_.push_back(i);
    } else {
      if (!w.fits_ulong_p() || w.get_ui() > kMaxDegree)
        throw InvalidInput("generator weight too large");
      positive_gens_.emplace_back(i, w.get_ui());
    }
  }
}

void MembershipOracle::close_layer(std::size_t degree) {
  auto& layer = layers_[degree];
  const auto& gens = monoid_.generators();
  const FgAbelianGroup& a = monoid_.ambient();
  std::deque<const GroupElement*> queue(layer.begin(), layer.end());
  while (!queue.empty()) {
    const GroupElement* e = queue.front();
    queue.pop_front();
    for (std::size_t gi : torsion_gens_) {
      GroupElement x = a.add(*e, gens[gi]);
      auto [it, inserted] = nodes_.emplace(std::move(x), Node{gi, e});
      if (!inserted) continue;
      layer.push_back(&it->first);
      queue.push_back(&it->first);
    }
  }
  std::sort(layer.begin(), layer.end(),
            [](const GroupElement* l, const GroupElement* r) { return *l < *r; });
}

void MembershipOracle::extend_to(std::size_t degree) {
  const auto& gens = monoid_.generators();
  const FgAbelianGroup& a = monoid_.ambient();
  while (layers_.size() <= degree) {
    const std::size_t d = layers_.size();
    layers_.emplace_back();
    if (d == 0) {
      auto [it, inserted] = nodes_.emplace(a.zero(), Node{kNoGenerator, nullptr});
      layers_[0].push_back(&it->first);
    } else {
      for (const auto& [gi, w] : positive_gens_) {
        if (w > d) continue;
        for (const GroupElement* e : layers_[d - w]) {
          auto [it, inserted] = nodes_.emplace(a.add(*e, gens[gi]), Node{gi, e});
          if (inserted) layers_[d].push_back(&it->first);
        }
      }
    }
    close_layer(d);
  }
}

bool MembershipOracle::contains(const GroupElement& x) {
  if (x.coords.size() != monoid_.rank()) throw InvalidInput("element has wrong length");
  GroupElement n = monoid_.ambient().normalize(x.coords);
  Integer w = grading_.weight(n);
  if (w < 0) return false;
  if (!w.fits_ulong_p() || w.get_ui() > kMaxDegree)
    throw InvalidInput("degree " + w.get_str() + " exceeds the membership bound");
  extend_to(w.get_ui());
  return nodes_.count(n) > 0;
}

std::optional<Vector> MembershipOracle::decompose(const GroupElement& x) {
  if (!contains(x)) return std::nullopt;
  GroupElement n = monoid_.ambient().normalize(x.coords);
  Vector coeff = zero_vector(monoid_.generators().size());
  const GroupElement* cur = &nodes_.find(n)->first;
  for (;;) {
    const Node& node = nodes_.find(*cur)->second;
    if (node.generator == kNoGenerator) break;
    coeff[node.generator] += 1;
    cur = node.previous;
  }
  return coeff;
}

std::vector<GroupElement> MembershipOracle::elements_up_to(const Integer& d) {
  std::vector<GroupElement> out;
  if (d < 0) return out;
  if (!d.fits_ulong_p() || d.get_ui() > kMaxDegree)
    throw InvalidInput("degree bound too large");
  extend_to(d.get_ui());
  for (std::size_t k = 0; k <= d.get_ui(); ++k)
    for (const GroupElement* e : layers_[k]) out.push_back(*e);
  return out;
}

bool contains(const Monoid& p, const GroupElement& x) {
  MembershipOracle oracle(p);
  return oracle.contains(x);
}

bool contains(const Monoid& p, const Vector& x) { return contains(p, GroupElement{x}); }

std::optional<Vector> decompose(const Monoid& p, const GroupElement& x) {
  MembershipOracle oracle(p);
  return oracle.decompose(x);
}

// ---------------------------------------------------------------- saturation

std::vector<Vector> hilbert_basis(const std::vector<Vector>& generators, std::size_t n,
                                  const std::optional<IntMatrix>& lattice_basis) {
  if (!lattice_basis) return detail::hilbert_basis_of(detail::analyze_cone(generators, n));

  const IntMatrix& b = *lattice_basis;
  if (b.cols() != n) throw InvalidInput("lattice basis has wrong width");
  if (b.rank() != b.rows()) throw InvalidInput("lattice basis rows are dependent");
  const std::size_t s = b.rows();
  std::vector<Vector> coords;
  for (const auto& g : generators) {
    if (g.size() != n) throw InvalidInput("cone generator has wrong length");
    auto c = solve_rational(b, g);
    if (!c) throw InvalidInput("cone generator " + to_string(g) + " is outside the lattice span");
    Integer den = 1;
    for (const auto& q : *c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    Vector v(s);
    for (std::size_t i = 0; i < s; ++i) {
      Rational q = (*c)[i] * Rational(den);
      v[i] = q.get_num();
    }
    coords.push_back(std::move(v));
  }
  std::vector<Vector> out;
  for (const auto& h : detail::hilbert_basis_of(detail::analyze_cone(coords, s)))
    out.push_back(b.apply_left(h));
  std::sort(out.begin(), out.end());
  return out;
}

Monoid saturation(const Monoid& p) {
  require_grading(p);
  SubgroupHull hull = gp(p);
  const FgAbelianGroup& h = hull.group;
  const std::size_t fr = h.structure().free_rank;
  const std::size_t nt = h.structure().invariant_factors.size();

  std::vector<Vector> images;
  for (std::size_t j = 0; j < h.ambient_rank(); ++j)
    images.push_back(h.coordinates(h.unit(j)).free);
  detail::ConeData cone = detail::analyze_cone(images, fr);
  if (!cone.pointed) throw UngradedMonoid();

  const std::vector<GroupElement> torsion = h.torsion_elements();
  std::vector<Vector> gens;
  for (const auto& b : detail::hilbert_basis_of(cone)) {
    GroupElement base = h.from_coordinates(b, zero_vector(nt));
    for (const auto& t : torsion) gens.push_back(hull.to_ambient(h.add(base, t)));
  }
  for (const auto& t : torsion)
    if (!t.is_zero()) gens.push_back(hull.to_ambient(t));
  return Monoid(p.ambient(), gens);
}

bool is_saturated(const Monoid& p) {
  Monoid sat = saturation(p);
  MembershipOracle oracle(p);
  for (const auto& g : sat.generators())
    if (!oracle.contains(g)) return false;
  return true;
}

void require_saturated(const Monoid& p) {
  if (!is_saturated(p)) throw NotSaturated();
}

}  // namespace logmonoid
