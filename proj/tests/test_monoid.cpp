#include <doctest.h>

#include "support.hpp"

using namespace logmonoid;
using namespace lmtest;

namespace {

Monoid in_z(std::initializer_list<long> gens) {
  std::vector<Vector> g;
  for (long x : gens) g.push_back(V({x}));
  return Monoid(FgAbelianGroup::free(1), g);
}

// Z ⊕ Z/2 with the torsion in the second coordinate.
FgAbelianGroup z_plus_z2() { return FgAbelianGroup(2, IntMatrix{{0, 2}}); }

}  // namespace

TEST_CASE("monoid construction is canonical") {
  Monoid p(FgAbelianGroup::free(2), Vs({{1, 2}, {0, 0}, {1, 0}, {1, 2}}));
  CHECK(p.generator_vectors() == Vs({{1, 0}, {1, 2}}));
  Monoid q(z_plus_z2(), Vs({{1, 3}, {1, 1}, {0, 2}}));
  CHECK(q.generator_vectors() == Vs({{1, 1}}));
  CHECK(Monoid::free(0).generators().empty());
}

TEST_CASE("group hulls") {
  CHECK(gp(Monoid::free(2)).group.structure() == S(2, {}));
  SubgroupHull h = gp(Monoid(FgAbelianGroup::free(2), Vs({{1, 0}, {1, 2}})));
  CHECK(h.group.structure() == S(2, {}));
  CHECK(!h.to_hull(V({0, 1})));
  CHECK(h.to_hull(V({0, 2})));
  CHECK(gp(in_z({2, 3})).group.structure() == S(1, {}));
  CHECK(gp(Monoid(z_plus_z2(), Vs({{1, 0}, {1, 1}}))).group.structure() == S(1, {2}));
}

TEST_CASE("positive gradings") {
  auto g = find_positive_grading(in_z({2, 3}));
  REQUIRE(g);
  CHECK(g->weights == V({1}));
  CHECK(!find_positive_grading(Monoid(FgAbelianGroup::free(2), Vs({{1, 0}, {-1, 0}}))));
  auto t = find_positive_grading(Monoid(z_plus_z2(), Vs({{1, 0}, {1, 1}})));
  REQUIRE(t);
  CHECK(t->weights == V({1, 0}));
  auto torsion_only = find_positive_grading(Monoid(z_plus_z2(), Vs({{0, 1}})));
  REQUIRE(torsion_only);
  CHECK(torsion_only->weight(V({0, 1})) == 0);
  CHECK_THROWS_AS(require_grading(in_z({1, -1})), UngradedMonoid);
}

TEST_CASE("membership") {
  Monoid p = in_z({2, 3});
  CHECK(!contains(p, V({1})));
  CHECK(contains(p, V({5})));
  CHECK(contains(p, V({0})));
  CHECK(!contains(p, V({-2})));
  // Exhaustive check of 2a + 3b.
  MembershipOracle oracle(p);
  for (long x = -3; x <= 20; ++x) {
    bool expect = false;
    for (long a = 0; 2 * a <= x; ++a)
      if ((x - 2 * a) % 3 == 0) expect = true;
    CHECK(oracle.contains(V({x})) == expect);
  }
  auto dec = oracle.decompose(GroupElement{V({7})});
  REQUIRE(dec);
  CHECK(Integer(2) * (*dec)[0] + Integer(3) * (*dec)[1] == 7);
  CHECK_THROWS_AS(contains(in_z({1, -1}), V({0})), UngradedMonoid);

  Monoid t(z_plus_z2(), Vs({{1, 0}, {1, 1}}));
  MembershipOracle to(t);
  CHECK(to.contains(V({2, 0})));
  CHECK(to.contains(V({2, 1})));
  CHECK(to.contains(V({1, 1})));
  CHECK(!to.contains(V({0, 1})));
}

TEST_CASE("membership witnesses are genuine") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vector> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_matrix(rng, 1, 2, 0, 3).row(0));
    Monoid p(FgAbelianGroup(2, IntMatrix{{0, 3}}), gens);
    auto g = find_positive_grading(p);
    if (!g) continue;
    MembershipOracle oracle(p, *g);
    for (const auto& e : oracle.elements_up_to(6)) {
      auto c = oracle.decompose(e);
      REQUIRE(c);
      Vector sum = zero_vector(2);
      for (std::size_t i = 0; i < c->size(); ++i) sum = sum + (*c)[i] * p.generators()[i].coords;
      CHECK(p.ambient().normalize(sum) == e);
    }
  }
}

TEST_CASE("hilbert bases") {
  CHECK(hilbert_basis(Vs({{1}}), 1) == Vs({{1}}));
  CHECK(hilbert_basis(Vs({{1, 0}, {1, 2}}), 2) == Vs({{1, 0}, {1, 1}, {1, 2}}));
  CHECK(hilbert_basis(Vs({{1, 0}, {1, 2}}), 2, IntMatrix{{1, 0}, {0, 2}}) == Vs({{1, 0}, {1, 2}}));
  CHECK(brute_hilbert_basis(Vs({{1, 0}, {1, 2}}), 2, 6) == Vs({{1, 0}, {1, 1}, {1, 2}}));
  CHECK(brute_hilbert_basis(Vs({{1, 0}, {1, 2}}), 2, 6, Vs({{1, 0}, {0, 2}})) ==
        Vs({{1, 0}, {1, 2}}));
  CHECK_THROWS_AS(hilbert_basis(Vs({{1, 0}, {-1, 0}}), 2), NonPointedCone);
  CHECK(hilbert_basis(Vs({{1, 3}}), 2) == Vs({{1, 3}}));
  CHECK(hilbert_basis(Vs({{2, 4}}), 2) == Vs({{1, 2}}));
  CHECK(hilbert_basis({}, 3).empty());
}

TEST_CASE("hilbert bases agree with lattice point enumeration") {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 40) {
    std::size_t n = 2 + rng() % 2;
    std::vector<Vector> gens;
    std::size_t m = 2 + rng() % 3;
    for (std::size_t i = 0; i < m; ++i) gens.push_back(random_matrix(rng, 1, n, 0, 3).row(0));
    std::vector<Vector> hb;
    try {
      hb = hilbert_basis(gens, n);
    } catch (const NonPointedCone&) {
      continue;
    }
    // Basis elements lie in parallelepipeds of at most n generators with entries <= 3.
    std::vector<Vector> brute = brute_hilbert_basis(gens, n, 3 * static_cast<long>(n));
    std::string msg;
    for (const auto& g : gens) msg += to_string(g);
    msg += " ->";
    for (const auto& h : hb) msg += to_string(h);
    msg += " vs";
    for (const auto& h : brute) msg += to_string(h);
    INFO(msg);
    CHECK(hb == brute);
    ++checked;
  }
}

TEST_CASE("saturation examples") {
  CHECK(saturation(in_z({2, 3})).generator_vectors() == Vs({{1}}));
  for (std::size_t k = 0; k <= 4; ++k) CHECK(saturation(Monoid::free(k)) == Monoid::free(k));
  Monoid t(z_plus_z2(), Vs({{1, 0}, {1, 1}}));
  CHECK(saturation(t).generator_vectors() == Vs({{0, 1}, {1, 0}, {1, 1}}));

  CHECK(is_saturated(Monoid::free(2)));
  CHECK(!is_saturated(in_z({2, 3})));
  CHECK(is_saturated(Monoid(FgAbelianGroup::free(2), Vs({{1, 0}, {1, 2}}))));
  CHECK_THROWS_AS(saturation(in_z({1, -1})), UngradedMonoid);
}

TEST_CASE("saturation of the torsion example matches the search oracle") {
  // a in P^sat iff n a in P for some n <= 8, over a in {-8..8} x Z/2.
  Monoid t(z_plus_z2(), Vs({{1, 0}, {1, 1}}));
  MembershipOracle p_oracle(t);
  MembershipOracle sat_oracle(saturation(t));
  for (long a = -8; a <= 8; ++a)
    for (long b = 0; b <= 1; ++b) {
      GroupElement x = t.ambient().normalize(V({a, b}));
      CHECK(sat_oracle.contains(x) == saturation_by_search(p_oracle, x, 8));
    }
  Monoid p = in_z({2, 3});
  MembershipOracle po(p);
  MembershipOracle so(saturation(p));
  for (long a = -8; a <= 8; ++a) {
    GroupElement x{V({a})};
    CHECK(so.contains(x) == saturation_by_search(po, x, 8));
  }
}

TEST_CASE("saturation properties on random monoids") {
  std::mt19937_64 rng(99);
  int done = 0;
  while (done < 40) {
    std::size_t k = 1 + rng() % 3;
    bool torsion = rng() % 3 == 0;
    FgAbelianGroup amb = torsion ? FgAbelianGroup(k + 1, [&] {
      IntMatrix r(1, k + 1);
      r(0, k) = 2 + static_cast<long>(rng() % 2);
      return r;
    }())
                                 : FgAbelianGroup::free(k);
    std::vector<Vector> gens;
    std::size_t m = 1 + rng() % 4;
    for (std::size_t i = 0; i < m; ++i)
      gens.push_back(random_matrix(rng, 1, amb.ambient_rank(), 0, 4).row(0));
    Monoid p(amb, gens);
    if (!find_positive_grading(p)) continue;
    Monoid sat = saturation(p);
    CHECK(saturation(sat) == sat);
    CHECK(is_saturated(sat));
    MembershipOracle so(sat);
    for (const auto& g : p.generators()) CHECK(so.contains(g));
    // Same group hull.
    SubgroupHull hp = gp(p);
    for (const auto& g : sat.generators()) CHECK(hp.to_hull(g.coords).has_value());
    ++done;
  }
}
