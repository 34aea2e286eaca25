#include "logmonoid/fscat.hpp"

namespace logmonoid {

namespace {

constexpr long kWitnessSearch = 64;

IntMatrix first_block(std::size_t k1, std::size_t k2) {
  return IntMatrix::identity(k1).stack(IntMatrix(k2, k1));
}

IntMatrix second_block(std::size_t k1, std::size_t k2) {
  return IntMatrix(k1, k2).stack(IntMatrix::identity(k2));
}

// Rows of a relation matrix placed at column offset within a wider cover.
void append_shifted(std::vector<Vector>& rows, const IntMatrix& rel, std::size_t offset,
                    std::size_t width) {
  for (std::size_t i = 0; i < rel.rows(); ++i) {
    Vector r = zero_vector(width);
    for (std::size_t j = 0; j < rel.cols(); ++j) r[offset + j] = rel(i, j);
    rows.push_back(std::move(r));
  }
}

FgAbelianGroup presented(std::size_t width, const std::vector<Vector>& rows) {
  return FgAbelianGroup(width, rows.empty() ? IntMatrix(0, width) : IntMatrix::from_rows(rows, width));
}

}  // namespace

FsPushout pushout_int(const MonoidHom& h1, const MonoidHom& h2) {
  if (!(h1.source == h2.source)) throw InvalidInput("pushout: the two homs have different sources");
  validate(h1);
  validate(h2);
  const std::size_t k1 = h1.target.rank();
  const std::size_t k2 = h2.target.rank();
  const std::size_t k = k1 + k2;

  std::vector<Vector> rows;
  append_shifted(rows, h1.target.ambient().relations(), 0, k);
  append_shifted(rows, h2.target.ambient().relations(), k1, k);
  for (const auto& x : h1.source.generators()) {
    Vector a = h1.ambient_map.apply(x.coords);
    Vector b = h2.ambient_map.apply(x.coords);
    Vector r(k);
    for (std::size_t j = 0; j < k1; ++j) r[j] = a[j];
    for (std::size_t j = 0; j < k2; ++j) r[k1 + j] = -b[j];
    rows.push_back(std::move(r));
  }
  FgAbelianGroup amb = presented(k, rows);

  IntMatrix i1 = first_block(k1, k2);
  IntMatrix i2 = second_block(k1, k2);
  std::vector<Vector> gens;
  for (const auto& p : h1.target.generators()) gens.push_back(i1.apply(p.coords));
  for (const auto& q : h2.target.generators()) gens.push_back(i2.apply(q.coords));
  Monoid result(amb, gens);
  if (!find_positive_grading(result)) throw UngradedMonoid("ungraded pushout");
  return FsPushout{result, MonoidHom(h1.target, result, i1), MonoidHom(h2.target, result, i2),
                   gp(result).group};
}

FsPushout pushout_fs(const MonoidHom& h1, const MonoidHom& h2) {
  FsPushout p = pushout_int(h1, h2);
  Monoid sat = saturation(p.result);
  return FsPushout{sat, MonoidHom(p.leg1.source, sat, p.leg1.ambient_map),
                   MonoidHom(p.leg2.source, sat, p.leg2.ambient_map), gp(sat).group};
}

KummerRoot kummer_root(const Monoid& p, const Integer& n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  require_saturated(p);
  return KummerRoot{p, MonoidHom(p, p, n * IntMatrix::identity(p.rank()))};
}

RootBySection root_by_section(const Monoid& p, const Vector& a, const Integer& n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  if (a.size() != p.rank()) throw InvalidInput("element has wrong length");
  require_saturated(p);
  if (!contains(p, a)) throw InvalidInput("a not in P");
  const std::size_t k = p.rank();
  std::vector<Vector> rows;
  append_shifted(rows, p.ambient().relations(), 0, k + 1);
  Vector r(k + 1);
  for (std::size_t j = 0; j < k; ++j) r[j] = -a[j];
  r[k] = n;
  rows.push_back(std::move(r));
  FgAbelianGroup l = presented(k + 1, rows);

  IntMatrix inc = first_block(k, 1);
  std::vector<Vector> gens;
  for (const auto& g : p.generators()) gens.push_back(inc.apply(g.coords));
  Vector b = zero_vector(k + 1);
  b[k] = 1;
  gens.push_back(b);
  Monoid q = saturation(Monoid(l, gens));
  return RootBySection{q, MonoidHom(p, q, inc), l.normalize(b)};
}

SelfProductReport self_product_check(const MonoidHom& h) {
  require_kummer(h);
  SelfProductReport rep{false, pushout_fs(h, h), Monoid(), MonoidHom::identity(Monoid()), {}, {}};
  const std::size_t k = h.target.rank();
  const IntMatrix& rel = h.target.ambient().relations();

  std::vector<Vector> rows;
  append_shifted(rows, rel, 0, 2 * k);
  append_shifted(rows, rel, k, 2 * k);
  for (const auto& img : h.generator_images()) {
    Vector r = zero_vector(2 * k);
    for (std::size_t j = 0; j < k; ++j) r[k + j] = img.coords[j];
    rows.push_back(std::move(r));
  }
  FgAbelianGroup w = presented(2 * k, rows);
  IntMatrix i1 = first_block(k, k);
  IntMatrix i2 = second_block(k, k);
  std::vector<Vector> gens;
  for (const auto& q : h.target.generators()) {
    gens.push_back(i1.apply(q.coords));
    gens.push_back(i2.apply(q.coords));
  }
  rep.comparison_target = Monoid(w, gens);

  // (x, y) ↦ (x + y, y)
  IntMatrix phi = IntMatrix::identity(2 * k);
  for (std::size_t j = 0; j < k; ++j) phi(j, k + j) = 1;
  rep.comparison = MonoidHom(rep.pushout.result, rep.comparison_target, phi);
  rep.pushout_gp = rep.pushout.gp_presentation.structure();
  rep.comparison_gp = gp(rep.comparison_target).group.structure();
  rep.isomorphism = is_isomorphism(rep.comparison);
  return rep;
}

BaseChangeReport kummer_base_change(const MonoidHom& h, const MonoidHom& g) {
  require_kummer(h);
  validate(g);
  BaseChangeReport rep{false, pushout_fs(h, g), {}, false, false, {}, {}};
  const Monoid& qp = rep.pushout.result;
  const MonoidHom& leg = rep.pushout.leg2;

  SubgroupHull hull = gp(qp);
  const FgAbelianGroup& hq = hull.group;
  rep.torsion = torsion_subgroup(hq).structure;

  MembershipOracle q_oracle(qp);
  rep.torsion_in_monoid = true;
  for (const auto& t : hq.torsion_generators())
    if (!q_oracle.contains(hull.to_ambient(t))) rep.torsion_in_monoid = false;

  // gp(P') -> gp(Q')/Δ
  std::vector<Vector> rows = hq.relations().row_vectors();
  for (const auto& t : hq.torsion_generators()) rows.push_back(t.coords);
  FgAbelianGroup mod_torsion = presented(hq.ambient_rank(), rows);
  SubgroupHull hp = gp(g.target);
  std::vector<Vector> cols;
  for (const auto& p : g.target.generators()) {
    auto c = hull.solver.solve(leg.apply(p).coords);
    if (!c) throw InvalidInput("leg image outside gp of the pushout");
    cols.push_back(*c);
  }
  IntMatrix m = cols.empty() ? IntMatrix(hq.ambient_rank(), 0)
                             : IntMatrix::from_columns(cols, hq.ambient_rank());
  rep.injective_mod_torsion = kernel_is_trivial(GroupHom(hp.group, mod_torsion, m));

  GpCokernel cok = gp_cokernel(leg);
  Monoid img = image(leg);
  MembershipOracle img_oracle(img, q_oracle.grading());
  bool all = true;
  for (const auto& a : qp.generators()) {
    if (qp.ambient().is_torsion(a)) continue;
    PowerWitness w{a, std::nullopt};
    auto order = cok.group.element_order(cok.project(a.coords));
    if (order) {
      for (long s = 1; s <= kWitnessSearch && !w.n; ++s) {
        Integer n = Integer(s) * (*order);
        if (img_oracle.contains(qp.ambient().multiply(n, a))) w.n = n;
      }
    }
    if (!w.n) all = false;
    rep.witnesses.push_back(std::move(w));
  }

  if (!rep.torsion_in_monoid)
    rep.failure = "torsion of gp(Q') not contained in Q'";
  else if (!rep.injective_mod_torsion)
    rep.failure = "gp(P') -> gp(Q')/torsion not injective";
  else if (!all)
    rep.failure = "no power witness for a generator";
  rep.passed = rep.torsion_in_monoid && rep.injective_mod_torsion && all;
  return rep;
}

}  // namespace logmonoid
