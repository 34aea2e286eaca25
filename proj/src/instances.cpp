#include "logmonoid/instances.hpp"

#include "cone.hpp"

namespace logmonoid {

long InstanceRng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

namespace {

Vector random_vector(InstanceRng& rng, std::size_t n, long lo, long hi) {
  Vector v(n);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

}  // namespace

Monoid random_graded_monoid(InstanceRng& rng, std::size_t max_rank, std::size_t max_gens,
                            long max_entry) {
  for (;;) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_rank)));
    const auto m = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_gens)));
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < m; ++i) gens.push_back(random_vector(rng, k, 0, max_entry));
    Monoid p(FgAbelianGroup::free(k), gens);
    if (p.generators().empty()) continue;
    if (find_positive_grading(p)) return p;
  }
}

MonoidHom random_kummer_instance(InstanceRng& rng, const KummerInstanceOptions& options) {
  for (;;) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(options.max_rank)));
    std::vector<Vector> pg;
    const long count = rng.uniform(static_cast<long>(r), static_cast<long>(r) + 2);
    for (long i = 0; i < count; ++i) pg.push_back(random_vector(rng, r, 0, 3));
    if (IntMatrix::from_rows(pg, r).rank() != r) continue;
    Monoid p = saturation(Monoid(FgAbelianGroup::free(r), pg));

    IntMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      m(i, i) = rng.uniform(1, 2);
      for (std::size_t j = i + 1; j < r; ++j) m(i, j) = rng.uniform(0, 1);
    }

    const long t = options.allow_torsion && rng.coin() ? rng.uniform(2, 3) : 0;
    const std::size_t kq = r + (t ? 1 : 0);
    FgAbelianGroup qamb = FgAbelianGroup::free(kq);
    if (t) {
      IntMatrix rel(1, kq);
      rel(0, r) = t;
      qamb = FgAbelianGroup(kq, rel);
    }
    IntMatrix map(kq, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) map(i, j) = m(i, j);

    std::vector<Vector> qg;
    std::vector<Vector> images;
    for (const auto& g : p.generators()) {
      images.push_back(m.apply(g.coords));
      qg.push_back(map.apply(g.coords));
    }
    detail::ConeData cone = detail::analyze_cone(images, r);
    const long extras = rng.uniform(0, 2);
    for (long e = 0; e < extras; ++e) {
      Vector y = random_vector(rng, r, 0, 3);
      if (is_zero(y) || !cone.contains_span(cone.span_coordinates(y))) continue;
      if (t) y.push_back(Integer(rng.uniform(0, t - 1)));
      qg.push_back(y);
    }
    if (t && rng.coin()) {
      Vector tor = zero_vector(kq);
      tor[r] = 1;
      qg.push_back(tor);
    }
    Monoid q = saturation(Monoid(qamb, qg));
    MonoidHom h(p, q, map);
    GroupStructure cok = gp_cokernel(h).group.structure();
    if (!cok.is_finite() || cok.torsion_order() > options.max_index) continue;
    return h;
  }
}

}  // namespace logmonoid
