#include "logmonoid/morphism.hpp"

namespace logmonoid {

MonoidHom::MonoidHom(Monoid src, Monoid tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), ambient_map(std::move(m)) {
  if (ambient_map.rows() != target.rank() || ambient_map.cols() != source.rank())
    throw InvalidInput("ambient_map is " + std::to_string(ambient_map.rows()) + "x" +
                       std::to_string(ambient_map.cols()) + ", expected " +
                       std::to_string(target.rank()) + "x" + std::to_string(source.rank()));
}

MonoidHom MonoidHom::identity(const Monoid& p) {
  return MonoidHom(p, p, IntMatrix::identity(p.rank()));
}

GroupElement MonoidHom::apply(const GroupElement& x) const { return apply(x.coords); }

GroupElement MonoidHom::apply(const Vector& x) const {
  return target.ambient().normalize(ambient_map.apply(x));
}

GroupHom MonoidHom::ambient_hom() const {
  return GroupHom(source.ambient(), target.ambient(), ambient_map);
}

std::vector<GroupElement> MonoidHom::generator_images() const {
  std::vector<GroupElement> out;
  for (const auto& g : source.generators()) out.push_back(apply(g));
  return out;
}

ValidationReport check(const MonoidHom& h) {
  ValidationReport r;
  if (!h.ambient_hom().is_well_defined()) {
    r.ok = false;
    r.error = "relations not respected";
    return r;
  }
  if (h.source.generators().empty()) return r;
  MembershipOracle oracle(h.target);
  for (const auto& g : h.source.generators()) {
    if (!oracle.contains(h.apply(g))) {
      r.ok = false;
      r.error = "generator image outside target monoid";
      r.offending_generator = g;
      return r;
    }
  }
  return r;
}

void validate(const MonoidHom& h) {
  ValidationReport r = check(h);
  if (!r.ok) {
    std::string msg = r.error;
    if (r.offending_generator) msg += ": " + r.offending_generator->to_string();
    throw InvalidInput(msg);
  }
}

GroupElement GpCokernel::project(const Vector& x) const {
  auto c = target_hull.solver.solve(x);
  if (!c) throw InvalidInput("element " + to_string(x) + " is outside gp of the target");
  return group.normalize(*c);
}

GpCokernel gp_cokernel(const MonoidHom& h) {
  SubgroupHull hull = gp(h.target);
  IntMatrix rel = hull.group.relations();
  std::vector<Vector> rows = rel.row_vectors();
  for (const auto& img : h.generator_images()) {
    auto c = hull.solver.solve(img.coords);
    if (!c) throw InvalidInput("generator image outside gp of the target");
    rows.push_back(*c);
  }
  const std::size_t m = hull.group.ambient_rank();
  FgAbelianGroup q(m, rows.empty() ? IntMatrix(0, m) : IntMatrix::from_rows(rows, m));
  return GpCokernel{q, hull};
}

namespace {

bool gp_injective(const MonoidHom& h) {
  SubgroupHull hp = gp(h.source);
  GroupHom f(hp.group, h.target.ambient(), h.ambient_map * hp.inclusion);
  return kernel_is_trivial(f);
}

}  // namespace

KummerCertificate is_kummer(const MonoidHom& h) {
  validate(h);
  require_grading(h.source);
  KummerCertificate cert;
  cert.injective = gp_injective(h);
  GpCokernel cok = gp_cokernel(h);
  cert.cokernel = cok.group.structure();
  cert.finite_cokernel = cert.cokernel.is_finite();

  std::vector<Vector> images;
  for (const auto& img : h.generator_images()) images.push_back(img.coords);
  SubgroupSolver image_solver(h.target.ambient(), images);
  MembershipOracle sat(saturation(h.source));

  bool all = true;
  for (const auto& a : h.target.generators()) {
    KummerWitness w;
    w.generator = a;
    w.order = cok.group.element_order(cok.project(a.coords));
    if (w.order) {
      Vector ma = (*w.order) * a.coords;
      auto c = image_solver.solve(ma);
      if (c) {
        Vector b = zero_vector(h.source.rank());
        const auto& gens = h.source.generators();
        for (std::size_t j = 0; j < gens.size(); ++j) b = b + (*c)[j] * gens[j].coords;
        w.preimage = h.source.ambient().normalize(b);
        w.verdict = sat.contains(*w.preimage);
      }
    }
    if (!w.verdict) all = false;
    cert.witnesses.push_back(std::move(w));
  }

  if (!cert.injective)
    cert.reason = "not injective on group hulls";
  else if (!cert.finite_cokernel)
    cert.reason = "infinite cokernel " + cert.cokernel.to_string();
  else if (!all)
    cert.reason = "a generator has no multiple in the image";
  cert.kummer = cert.injective && cert.finite_cokernel && all;
  return cert;
}

void require_kummer(const MonoidHom& h) {
  KummerCertificate c = is_kummer(h);
  if (!c.kummer) throw NotKummer("not Kummer: " + c.reason);
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  if (!(f.target.ambient() == g.source.ambient()))
    throw InvalidInput("compose: ambient groups do not match");
  return MonoidHom(f.source, g.target, g.ambient_map * f.ambient_map);
}

Monoid image(const MonoidHom& h) { return Monoid(h.target.ambient(), h.generator_images()); }

bool is_isomorphism(const MonoidHom& h) {
  ValidationReport r = check(h);
  if (!r.ok) {
    if (r.error == "relations not respected") throw InvalidInput(r.error);
    return false;
  }
  if (!gp_injective(h)) return false;
  if (!gp_cokernel(h).group.structure().is_trivial()) return false;
  Monoid img = image(h);
  if (h.target.generators().empty()) return true;
  MembershipOracle oracle(img, require_grading(h.target));
  for (const auto& a : h.target.generators())
    if (!oracle.contains(a)) return false;
  return true;
}

}  // namespace logmonoid
