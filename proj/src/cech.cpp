#include "logmonoid/cech.hpp"

#include <deque>
#include <functional>
#include <stdexcept>

namespace logmonoid {

MonoidAlgebraElement::MonoidAlgebraElement(const Monoid* base, Integer modulus)
    : base_(base), modulus_(std::move(modulus)) {
  if (modulus_ < 0 || modulus_ == 1) throw InvalidInput("coefficient modulus must be 0 or >= 2");
}

MonoidAlgebraElement MonoidAlgebraElement::monomial(const Monoid* base, const Integer& modulus,
                                                    const GroupElement& key, const Integer& coeff) {
  MonoidAlgebraElement x(base, modulus);
  x.add_term(key, coeff);
  return x;
}

Integer MonoidAlgebraElement::reduce(const Integer& c) const {
  if (modulus_ == 0) return c;
  Integer r = c % modulus_;
  if (r < 0) r += modulus_;
  return r;
}

void MonoidAlgebraElement::add_term(const GroupElement& key, const Integer& coeff) {
  Integer c = reduce(coeff);
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second = reduce(it->second + c);
  if (it->second == 0) terms_.erase(it);
}

MonoidAlgebraElement& MonoidAlgebraElement::operator+=(const MonoidAlgebraElement& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

MonoidAlgebraElement& MonoidAlgebraElement::operator-=(const MonoidAlgebraElement& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

MonoidAlgebraElement MonoidAlgebraElement::scaled(const Integer& k) const {
  MonoidAlgebraElement x(base_, modulus_);
  for (const auto& [key, c] : terms_) x.add_term(key, k * c);
  return x;
}

bool MonoidAlgebraElement::well_formed(MembershipOracle& oracle) const {
  for (const auto& [k, c] : terms_) {
    if (c == 0 || !(reduce(c) == c)) return false;
    if (!(base_->ambient().normalize(k.coords) == k)) return false;
    if (!oracle.contains(k)) return false;
  }
  return true;
}

std::string MonoidAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*x^" + k.to_string();
  }
  return s;
}

void CochainComplexReport::fail(Certificate c) {
  if (passed) certificate = std::move(c);
  passed = false;
}

namespace {

using Algebra = MonoidAlgebraElement;
using MonomialMap = std::function<Algebra(const GroupElement&)>;

Algebra apply_linear(const MonomialMap& f, const Algebra& x, const Monoid* target) {
  Algebra out(target, x.modulus());
  for (const auto& [k, c] : x.terms()) out += f(k).scaled(c);
  return out;
}

Vector concat(const Vector& a, const Vector& b) {
  Vector v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

// Pullback of the grading of Q along h, or the grading of P when the
// pullback is not positive (h not injective on some generator).
Grading source_grading(const MonoidHom& h, const Grading& gq, std::vector<std::string>& notes) {
  Grading g{h.ambient_map.apply_left(gq.weights)};
  for (const auto& x : h.source.generators()) {
    if (h.source.ambient().is_torsion(x)) continue;
    if (g.weight(x) <= 0) {
      notes.push_back("grading of Q does not pull back to a positive grading of P; using one of P");
      return require_grading(h.source);
    }
  }
  return g;
}

void require_bound(const Integer& d) {
  if (d < 0) throw InvalidInput("degree bound must be >= 0");
}

// Shared pieces of the Kummer diagram.
struct Diagram {
  const MonoidHom& h;
  Grading gq;
  MembershipOracle image_oracle;
  std::map<GroupElement, GroupElement> preimage_of_generator;
  GpCokernel cok;

  explicit Diagram(const MonoidHom& hom)
      : h(hom),
        gq(require_grading(hom.target)),
        image_oracle(image(hom), gq),
        cok(gp_cokernel(hom)) {
    for (const auto& g : h.source.generators()) {
      GroupElement img = h.apply(g);
      if (!img.is_zero()) preimage_of_generator.emplace(img, g);
    }
  }

  GroupElement bar(const GroupElement& a) const { return cok.project(a.coords); }

  // A preimage under h when a ∈ h(P).
  std::optional<GroupElement> preimage(const GroupElement& a) {
    auto c = image_oracle.decompose(a);
    if (!c) return std::nullopt;
    const auto& gens = image_oracle.monoid().generators();
    Vector p = zero_vector(h.source.rank());
    for (std::size_t j = 0; j < gens.size(); ++j)
      p = p + (*c)[j] * preimage_of_generator.at(gens[j]).coords;
    return h.source.ambient().normalize(p);
  }
};

}  // namespace

CochainComplexReport splitting_check(const MonoidHom& h, const SplittingOptions& options) {
  require_bound(options.degree_bound);
  if (options.require_kummer)
    require_kummer(h);
  else
    validate(h);
  const Integer& n = options.coeff_modulus;

  CochainComplexReport rep;
  rep.check = "splitting";
  Diagram dg(h);
  rep.notes.push_back(n == 0 ? "A = Z[P]" : "A = Z/" + n.get_str() + "[P]");
  if (options.corrupt_iota) rep.notes.push_back("iota corrupted (negative control)");

  // Q ⊕ (Q^gp/P^gp) as a monoid in A_Q ⊕ cokernel.
  FgAbelianGroup pair_ambient = FgAbelianGroup::direct_sum(h.target.ambient(), dg.cok.group);
  std::vector<GroupElement> pair_gens;
  const std::size_t kq = h.target.rank();
  const std::size_t kc = dg.cok.group.ambient_rank();
  for (const auto& q : h.target.generators())
    pair_gens.push_back(pair_ambient.normalize(concat(q.coords, zero_vector(kc))));
  for (std::size_t i = 0; i < kc; ++i) {
    Vector e = zero_vector(kc);
    e[i] = 1;
    pair_gens.push_back(pair_ambient.normalize(concat(zero_vector(kq), e)));
    e[i] = -1;
    pair_gens.push_back(pair_ambient.normalize(concat(zero_vector(kq), e)));
  }
  const Monoid pair(pair_ambient, pair_gens);
  const Monoid* P = &h.source;
  const Monoid* Q = &h.target;
  const Monoid* T = &pair;

  MonomialMap alpha = [&](const GroupElement& p) { return Algebra::monomial(Q, n, h.apply(p)); };
  MonomialMap s = [&](const GroupElement& a) {
    auto p = dg.preimage(a);
    return p ? Algebra::monomial(P, n, *p) : Algebra(P, n);
  };
  auto pair_key = [&](const GroupElement& a, const GroupElement& b) {
    return pair_ambient.normalize(concat(a.coords, b.coords));
  };
  MonomialMap beta1 = [&](const GroupElement& a) {
    return Algebra::monomial(T, n, pair_key(a, dg.cok.group.zero()));
  };
  MonomialMap beta2 = [&](const GroupElement& a) { return Algebra::monomial(T, n, pair_key(a, dg.bar(a))); };
  MonomialMap iota = [&](const GroupElement& key) {
    Vector av(key.coords.begin(), key.coords.begin() + static_cast<std::ptrdiff_t>(kq));
    Vector bv(key.coords.begin() + static_cast<std::ptrdiff_t>(kq), key.coords.end());
    const bool b_zero = dg.cok.group.normalize(bv).is_zero();
    const bool keep = options.corrupt_iota ? b_zero : !b_zero;
    return keep ? Algebra::monomial(Q, n, h.target.ambient().normalize(av)) : Algebra(Q, n);
  };

  Grading gp_grading = source_grading(h, dg.gq, rep.notes);
  MembershipOracle source_oracle(h.source, gp_grading);
  for (const auto& p : source_oracle.elements_up_to(options.degree_bound)) {
    ++rep.checked;
    Algebra expect = Algebra::monomial(P, n, p);
    Algebra got = apply_linear(s, alpha(p), P);
    if (!(got == expect)) rep.fail({"s o alpha = id", p.to_string(), expect.to_string(), got.to_string()});
  }

  MembershipOracle target_oracle(h.target, dg.gq);
  for (const auto& a : target_oracle.elements_up_to(options.degree_bound)) {
    ++rep.checked;
    Algebra expect = Algebra::monomial(Q, n, a);
    Algebra diff = beta2(a);
    diff -= beta1(a);
    Algebra got = apply_linear(alpha, s(a), Q);
    got += apply_linear(iota, diff, Q);
    if (!(got == expect))
      rep.fail({"alpha o s + iota o (beta2 - beta1) = id", a.to_string(), expect.to_string(), got.to_string()});
  }
  return rep;
}

EqualizerReport equalizer_check(const MonoidHom& h, const Integer& degree_bound, bool require_kummer_hom) {
  require_bound(degree_bound);
  if (require_kummer_hom)
    require_kummer(h);
  else
    validate(h);
  EqualizerReport out;
  out.report.check = "equalizer";
  Diagram dg(h);
  MembershipOracle target_oracle(h.target, dg.gq);
  for (const auto& a : target_oracle.elements_up_to(degree_bound)) {
    ++out.report.checked;
    const bool equalized = dg.bar(a).is_zero();
    const bool in_image = dg.image_oracle.contains(a);
    if (equalized) out.equalized.push_back(a);
    if (equalized != in_image)
      out.report.fail({"(a, 0) = (a, a mod P^gp) iff a in h(P)", a.to_string(),
                       in_image ? "in image" : "not in image",
                       equalized ? "equalized" : "not equalized"});
  }
  return out;
}

CochainComplexReport gmlog_complex(const Monoid& p, const Integer& n, const Integer& n_prime) {
  if (n < 1 || n_prime < 1) throw InvalidInput("n and n' must be >= 1");
  if (n % n_prime != 0) throw InvalidInput("n' must divide n");
  if (n_prime > 64) throw InvalidInput("n' is limited to 64");
  require_saturated(p);
  CochainComplexReport rep;
  rep.check = "gmlog";
  const std::size_t r = gp(p).group.structure().free_rank;
  const auto s = static_cast<std::size_t>(n_prime.get_ui());

  // δ0: R -> Map(S, R), δ1: Map(S, R) -> Map(S^2, R); blocks of size r.
  IntMatrix d0(s * r, r), d1(s * s * r, s * r);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = 0; k < r; ++k) d0(i * r + k, k) = 1;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        const std::size_t row = (i * s + j) * r + k;
        d1(row, i * r + k) += 1;
        d1(row, j * r + k) -= 1;
      }
  rep.checked = s * r;
  const std::size_t rank0 = r == 0 ? 0 : d0.rank();
  const std::size_t rank1 = r == 0 ? 0 : d1.rank();
  const std::size_t ker1 = s * r - rank1;
  rep.h0_dimension = rank0;
  rep.h1_dimension = ker1 - rank0;
  rep.notes.push_back("R = Q^" + std::to_string(r) + ", S = {1.." + std::to_string(s) + "}");

  if (r > 0 && !(d1 * d0).is_zero()) rep.fail({"d1 o d0 = 0", "", "0", (d1 * d0).to_string()});
  if (rep.h0_dimension != r)
    rep.fail({"H^0 = R", "", std::to_string(r), std::to_string(*rep.h0_dimension)});
  if (*rep.h1_dimension != 0) {
    IntMatrix kernel = right_kernel(d1);
    for (const auto& v : kernel.row_vectors()) {
      if (d0.beside(IntMatrix::from_columns({v}, s * r)).rank() > rank0) {
        rep.fail({"H^1 = 0", to_string(v), "image of d0", "cocycle outside image"});
        break;
      }
    }
  }
  return rep;
}

GroupStructure group_h1(const FgAbelianGroup& h, const FgAbelianGroup& m, const std::vector<IntMatrix>& action) {
  if (!h.structure().is_finite()) throw InvalidInput("group_h1 needs a finite group H");
  if (action.size() != h.ambient_rank())
    throw InvalidInput("expected " + std::to_string(h.ambient_rank()) + " action matrices");
  const std::size_t k = m.ambient_rank();
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (action[i].rows() != k || action[i].cols() != k)
      throw InvalidInput("action matrix " + std::to_string(i) + " must be " + std::to_string(k) + "x" +
                         std::to_string(k));
    if (!GroupHom(m, m, action[i]).is_well_defined())
      throw InconsistentAction("action matrix " + std::to_string(i) + " does not respect the relations of M");
  }
  auto same_on_m = [&](const IntMatrix& a, const IntMatrix& b) {
    for (std::size_t c = 0; c < k; ++c)
      if (!(m.normalize(a.column(c)) == m.normalize(b.column(c)))) return false;
    return true;
  };

  // Action of every element, by breadth-first search over the generators.
  std::map<GroupElement, IntMatrix> act;
  std::deque<GroupElement> queue{h.zero()};
  act.emplace(h.zero(), IntMatrix::identity(k));
  while (!queue.empty()) {
    GroupElement sigma = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < action.size(); ++i) {
      GroupElement tau = h.add(sigma, h.unit(i));
      IntMatrix a = action[i] * act.at(sigma);
      auto it = act.find(tau);
      if (it == act.end()) {
        act.emplace(tau, a);
        queue.push_back(tau);
      } else if (!same_on_m(it->second, a)) {
        throw InconsistentAction("action is not compatible with the relations of H at " + tau.to_string());
      }
    }
  }

  std::vector<GroupElement> elems;
  std::map<GroupElement, std::size_t> index;
  for (const auto& [e, a] : act) {
    index.emplace(e, elems.size());
    elems.push_back(e);
  }
  const std::size_t n = elems.size();
  // Relations of Map(X, M) for |X| = count copies of M.
  auto blocks = [&](std::size_t count) {
    const IntMatrix& rel = m.relations();
    if (rel.rows() == 0) return IntMatrix(0, count * k);
    IntMatrix out = rel;
    for (std::size_t i = 1; i < count; ++i) out = out.block_diagonal(rel);
    return out;
  };
  FgAbelianGroup c1(n * k, blocks(n));
  FgAbelianGroup c2(n * n * k, blocks(n * n));

  IntMatrix d1(n * n * k, n * k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t row = (a * n + b) * k;
      const std::size_t ab = index.at(h.add(elems[a], elems[b]));
      const IntMatrix& sa = act.at(elems[a]);
      for (std::size_t x = 0; x < k; ++x) {
        d1(row + x, ab * k + x) += 1;
        d1(row + x, a * k + x) -= 1;
        for (std::size_t y = 0; y < k; ++y) d1(row + x, b * k + y) -= sa(x, y);
      }
    }
  std::vector<Vector> cocycles = kernel_generators(GroupHom(c1, c2, d1));
  if (cocycles.empty()) return GroupStructure{};
  SubgroupHull z1(c1, cocycles);

  std::vector<Vector> rows = z1.group.relations().row_vectors();
  for (std::size_t c = 0; c < k; ++c) {
    Vector cob = zero_vector(n * k);
    for (std::size_t a = 0; a < n; ++a) {
      const IntMatrix& sa = act.at(elems[a]);
      for (std::size_t x = 0; x < k; ++x) cob[a * k + x] = sa(x, c) - (x == c ? 1 : 0);
    }
    auto coords = z1.solver.solve(cob);
    if (!coords) throw std::logic_error("coboundary outside the cocycle group");
    rows.push_back(*coords);
  }
  const std::size_t zr = z1.group.ambient_rank();
  return FgAbelianGroup(zr, rows.empty() ? IntMatrix(0, zr) : IntMatrix::from_rows(rows, zr)).structure();
}

GroupStructure group_h1(const FgAbelianGroup& h, const FgAbelianGroup& m) {
  return group_h1(h, m, std::vector<IntMatrix>(h.ambient_rank(), IntMatrix::identity(m.ambient_rank())));
}

}  // namespace logmonoid
