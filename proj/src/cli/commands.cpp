#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "logmonoid/cli.hpp"
#include "logmonoid/fscat.hpp"
#include "logmonoid/instances.hpp"
#include "schema.hpp"

namespace logmonoid::cli {

namespace {

constexpr long kDefaultMaxDegree = 6;
constexpr long kDefaultCount = 50;

struct Outcome {
  std::string status = "ok";
  json payload = json::object();
  std::optional<json> certificate;
};

// Everything that identifies a run, hashed into the envelope.
struct Context {
  json inputs = {{"files", json::array()}, {"options", json::object()}};

  json file(const std::string& path) {
    json j = load_json_file(path);
    inputs["files"].push_back(j);
    return j;
  }
  Monoid monoid(const std::string& path) { return parse_monoid(file(path), path); }
  MonoidHom hom(const std::string& path) {
    json j = file(path);
    return parse_hom(j, path, std::filesystem::path(path).parent_path());
  }
  void option(const std::string& name, const json& value) { inputs["options"][name] = value; }
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return "sha256:" + s.str();
}

Integer integer_option(const std::string& text, const std::string& name) { return parse_integer(json(text), "--" + name); }

long small_option(const std::string& text, const std::string& name, long lo, long hi) {
  Integer x = integer_option(text, name);
  if (x < lo || x > hi) throw InvalidInput("--" + name + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x.get_si();
}

// "[1, 2]" or "1,2".
Vector element_option(const std::string& text, std::size_t rank) {
  std::string t = text;
  if (t.empty() || t.front() != '[') t = "[" + t + "]";
  json j = parse_json_text(t, "--element");
  return parse_vector(j, "--element", rank);
}

Integer max_degree(const std::string& flag, Context& ctx) {
  Integer d = kDefaultMaxDegree;
  if (!flag.empty()) {
    d = integer_option(flag, "max-degree");
  } else if (const char* env = std::getenv("LOGMONOID_MAX_DEGREE")) {
    d = parse_integer(json(std::string(env)), "LOGMONOID_MAX_DEGREE");
  }
  if (d < 0) throw InvalidInput("max degree must be >= 0");
  ctx.option("max_degree", to_json(d));
  return d;
}

json witness_json(const KummerWitness& w) {
  json j = {{"generator", to_json(w.generator)}, {"in_saturation", w.verdict}};
  j["order"] = w.order ? to_json(*w.order) : json(nullptr);
  j["preimage"] = w.preimage ? to_json(*w.preimage) : json(nullptr);
  return j;
}

json kummer_json(const KummerCertificate& c) {
  json ws = json::array();
  json failing = json::array();
  for (const auto& w : c.witnesses) {
    ws.push_back(witness_json(w));
    if (!w.verdict) failing.push_back(to_json(w.generator));
  }
  return {{"kummer", c.kummer},         {"injective", c.injective}, {"finite_cokernel", c.finite_cokernel},
          {"cokernel", to_json(c.cokernel)}, {"reason", c.reason}, {"witnesses", ws},
          {"failing_generators", failing}};
}

json pushout_json(const FsPushout& p, bool saturated) {
  return {{"result", to_json(p.result)},
          {"leg1", {{"ambient_map", to_json(p.leg1.ambient_map)}}},
          {"leg2", {{"ambient_map", to_json(p.leg2.ambient_map)}}},
          {"gp", to_json(p.gp_presentation.structure())},
          {"saturated", saturated}};
}

// Certificate for a hom that fails the Kummer precondition.
Certificate kummer_certificate(const KummerCertificate& k) {
  for (const auto& w : k.witnesses)
    if (!w.verdict) return {"h is Kummer", w.generator.to_string(), "a multiple in h(P)", k.reason};
  return {"h is Kummer", "", "injective with finite cokernel", k.reason};
}

FiniteGroupTable group_option(const std::string& spec, Context& ctx) {
  ctx.option("group", spec);
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const long k = small_option(spec.substr(colon + 1), "group", 1, kind == "symmetric" ? 5 : 4096);
    if (kind == "cyclic") return FiniteGroupTable::cyclic(static_cast<std::size_t>(k));
    if (kind == "symmetric") return FiniteGroupTable::symmetric(static_cast<std::size_t>(k));
    throw InvalidInput("--group: unknown kind \"" + kind + "\"");
  }
  json j = ctx.file(spec);
  const json& t = j.at("table");
  if (!t.is_array()) throw InvalidInput(spec + ".table: expected an array of rows");
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Vector row = parse_vector(t[i], spec + ".table[" + std::to_string(i) + "]", t.size());
    std::vector<std::size_t> r;
    for (const auto& x : row) {
      if (x < 0 || x >= static_cast<long>(t.size())) throw InvalidInput(spec + ".table: entry out of range");
      r.push_back(x.get_ui());
    }
    table.push_back(r);
  }
  Integer id = j.contains("identity") ? parse_integer(j["identity"], spec + ".identity") : Integer(0);
  if (id < 0 || id >= static_cast<long>(t.size())) throw InvalidInput(spec + ".identity: out of range");
  return FiniteGroupTable(std::move(table), id.get_ui());
}

// Kummer instances for the verify suites: the given hom or seeded ones.
std::vector<MonoidHom> suite_homs(const std::string& hom_file, const std::string& count_text, const std::string& seed_text,
                                  const std::string& rank_text, const std::string& index_text, Context& ctx) {
  if (!hom_file.empty()) return {ctx.hom(hom_file)};
  const long count = count_text.empty() ? kDefaultCount : small_option(count_text, "count", 0, 100000);
  const Integer seed = seed_text.empty() ? Integer(1) : integer_option(seed_text, "seed");
  if (seed < 0 || !seed.fits_ulong_p()) throw InvalidInput("--seed must be a nonnegative 64-bit integer");
  KummerInstanceOptions o;
  if (!rank_text.empty()) o.max_rank = static_cast<std::size_t>(small_option(rank_text, "max-rank", 1, 3));
  if (!index_text.empty()) o.max_index = small_option(index_text, "max-index", 1, 64);
  ctx.option("count", std::to_string(count));
  ctx.option("seed", seed.get_str());
  ctx.option("max_rank", std::to_string(o.max_rank));
  ctx.option("max_index", std::to_string(o.max_index));
  InstanceRng rng(seed.get_ui());
  std::vector<MonoidHom> out;
  for (long i = 0; i < count; ++i) out.push_back(random_kummer_instance(rng, o));
  return out;
}

struct VerifyArgs {
  std::string suite;
  std::string hom, along, monoid;
  std::string count, seed, max_rank, max_index, max_degree;
  std::vector<std::string> moduli;
  bool corrupt_iota = false;
  std::string n, n_prime;
};

// Collects per-instance results; the first failure becomes the certificate.
struct SuiteResult {
  json instances = json::array();
  std::optional<json> certificate;
  std::size_t failures = 0;

  void record(json instance, bool ok, const std::optional<Certificate>& cert) {
    instance["passed"] = ok;
    if (!ok) {
      ++failures;
      if (!certificate && cert) {
        certificate = to_json(*cert);
        (*certificate)["instance"] = std::to_string(instances.size());
      }
    }
    instances.push_back(std::move(instance));
  }

  Outcome finish(json payload) {
    Outcome o;
    payload["instances"] = instances;
    payload["instance_count"] = std::to_string(instances.size());
    payload["failures"] = std::to_string(failures);
    payload["passed"] = failures == 0;
    o.payload = std::move(payload);
    if (failures > 0) {
      o.status = "violated";
      o.certificate = certificate ? *certificate : json{{"identity", "suite"}, {"element", ""}};
    }
    return o;
  }
};

json hom_summary(const MonoidHom& h) {
  return {{"source", h.source.to_string()}, {"target", h.target.to_string()}, {"ambient_map", to_json(h.ambient_map)}};
}

Outcome verify(const VerifyArgs& a, Context& ctx) {
  ctx.option("suite", a.suite);
  SuiteResult res;
  json payload = {{"suite", a.suite}};

  if (a.suite == "gmlog") {
    std::vector<Monoid> ps;
    if (!a.monoid.empty())
      ps.push_back(ctx.monoid(a.monoid));
    else
      for (std::size_t k = 1; k <= 3; ++k) ps.push_back(Monoid::free(k));
    std::vector<long> nps;
    if (!a.n_prime.empty())
      nps.push_back(small_option(a.n_prime, "n-prime", 1, 64));
    else
      nps = {1, 2, 3, 4};
    for (const auto& p : ps)
      for (long np : nps) {
        const Integer n = a.n.empty() ? Integer(np) : integer_option(a.n, "n");
        CochainComplexReport r = gmlog_complex(p, n, np);
        json inst = {{"monoid", p.to_string()}, {"n", to_json(n)}, {"n_prime", std::to_string(np)}, {"report", to_json(r)}};
        res.record(inst, r.passed, r.certificate);
      }
    ctx.option("n", a.n);
    ctx.option("n_prime", a.n_prime);
    payload["note"] = "R is modelled as Q^r with r the free rank of gp(P)";
    return res.finish(payload);
  }

  const Integer d = max_degree(a.max_degree, ctx);
  std::vector<MonoidHom> homs = suite_homs(a.hom, a.count, a.seed, a.max_rank, a.max_index, ctx);
  payload["max_degree"] = to_json(d);

  if (a.suite == "descent") {
    std::vector<Integer> moduli;
    for (const auto& m : a.moduli) moduli.push_back(integer_option(m, "modulus"));
    if (moduli.empty()) moduli = {Integer(0), Integer(6)};
    json ms = json::array();
    for (const auto& m : moduli) ms.push_back(to_json(m));
    ctx.option("moduli", ms);
    ctx.option("corrupt_iota", a.corrupt_iota);
    payload["moduli"] = ms;
    payload["corrupt_iota"] = a.corrupt_iota;
    payload["note"] = "A is specialised to R0[P] with R0 = Z or Z/N";
    for (const auto& h : homs) {
      KummerCertificate k = is_kummer(h);
      json inst = {{"hom", hom_summary(h)}, {"kummer", k.kummer}, {"reports", json::array()}};
      std::optional<Certificate> cert;
      bool ok = k.kummer;
      for (const auto& m : moduli) {
        SplittingOptions o;
        o.coeff_modulus = m;
        o.degree_bound = d;
        o.corrupt_iota = a.corrupt_iota;
        o.require_kummer = false;
        CochainComplexReport r = splitting_check(h, o);
        inst["reports"].push_back(to_json(r));
        if (!r.passed) {
          ok = false;
          if (!cert) {
            cert = r.certificate;
            cert->identity += m == 0 ? " over Z" : " over Z/" + m.get_str();
          }
        }
      }
      if (!k.kummer && !cert) cert = kummer_certificate(k);
      res.record(inst, ok, cert);
    }
  } else if (a.suite == "equalizer") {
    for (const auto& h : homs) {
      KummerCertificate k = is_kummer(h);
      EqualizerReport e = equalizer_check(h, d, false);
      json eq = json::array();
      for (const auto& x : e.equalized) eq.push_back(to_json(x));
      json inst = {{"hom", hom_summary(h)}, {"kummer", k.kummer}, {"report", to_json(e.report)}, {"equalized", eq}};
      std::optional<Certificate> cert = e.report.certificate;
      if (!k.kummer && !cert) cert = kummer_certificate(k);
      res.record(inst, k.kummer && e.report.passed, cert);
    }
  } else if (a.suite == "selfprod") {
    for (const auto& h : homs) {
      KummerCertificate k = is_kummer(h);
      json inst = {{"hom", hom_summary(h)}, {"kummer", k.kummer}};
      if (!k.kummer) {
        res.record(inst, false, kummer_certificate(k));
        continue;
      }
      SelfProductReport r = self_product_check(h);
      inst["isomorphism"] = r.isomorphism;
      inst["pushout"] = to_json(r.pushout.result);
      inst["comparison_target"] = to_json(r.comparison_target);
      inst["pushout_gp"] = to_json(r.pushout_gp);
      inst["comparison_gp"] = to_json(r.comparison_gp);
      res.record(inst, r.isomorphism,
                 Certificate{"Q + Q^gp/P^gp -> Q x_P Q is an isomorphism", h.source.to_string() + " -> " + h.target.to_string(),
                             r.comparison_gp.to_string(), r.pushout_gp.to_string()});
    }
  } else if (a.suite == "basechange") {
    std::optional<MonoidHom> along;
    if (!a.along.empty()) along = ctx.hom(a.along);
    InstanceRng rng(7);
    for (const auto& h : homs) {
      KummerCertificate k = is_kummer(h);
      if (!k.kummer) {
        res.record({{"hom", hom_summary(h)}, {"kummer", false}}, false, kummer_certificate(k));
        continue;
      }
      std::vector<MonoidHom> gs;
      if (along) {
        if (!(along->source == h.source)) throw MismatchedBase("--along must start at the source of the hom");
        gs.push_back(*along);
      } else {
        gs.push_back(MonoidHom::identity(h.source));
        gs.push_back(kummer_root(h.source, 2).map);
        // A random map P -> N^r with nonnegative entries.
        const auto r = static_cast<std::size_t>(rng.uniform(1, 2));
        IntMatrix m(r, h.source.rank());
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < h.source.rank(); ++j) m(i, j) = rng.uniform(0, 2);
        MonoidHom g(h.source, Monoid::free(r), m);
        if (check(g).ok) gs.push_back(g);
      }
      for (const auto& g : gs) {
        BaseChangeReport b = kummer_base_change(h, g);
        json ws = json::array();
        std::string missing;
        for (const auto& w : b.witnesses) {
          ws.push_back({{"generator", to_json(w.generator)}, {"n", w.n ? to_json(*w.n) : json(nullptr)}});
          if (!w.n && missing.empty()) missing = w.generator.to_string();
        }
        json inst = {{"hom", hom_summary(h)},
                     {"along", hom_summary(g)},
                     {"base_change", to_json(b.pushout.result)},
                     {"torsion", to_json(b.torsion)},
                     {"torsion_in_monoid", b.torsion_in_monoid},
                     {"injective_mod_torsion", b.injective_mod_torsion},
                     {"witnesses", ws},
                     {"failure", b.failure}};
        res.record(inst, b.passed, Certificate{b.failure, missing, "", ""});
      }
    }
  } else {
    throw InvalidInput("unknown suite \"" + a.suite + "\"");
  }
  return res.finish(payload);
}

struct InvariantArgs {
  std::string file, residue_char = "0", what, components, group;
};

Outcome invariants(const InvariantArgs& a, Context& ctx) {
  Monoid p = ctx.monoid(a.file);
  const Integer pchar = integer_option(a.residue_char, "residue-char");
  ctx.option("residue_char", pchar.get_str());
  ctx.option("what", a.what);
  Outcome o;
  o.payload["what"] = a.what;
  o.payload["note"] = "log part only; the classical part depends on the ring and is not computed";
  auto arg_after = [&](const std::string& prefix) -> std::optional<std::string> {
    if (a.what.rfind(prefix, 0) != 0) return std::nullopt;
    return a.what.substr(prefix.size());
  };

  if (a.what == "pi1") {
    o.payload["pi1"] = to_json(pi1_log(p, pchar));
  } else if (auto m = arg_after("h1:mu:")) {
    o.payload["h1"] = to_json(r1_eps_fiber(p, GroupSchemeDescriptor::mu(integer_option(*m, "what"))));
  } else if (a.what == "h1:gm") {
    o.payload["h1"] = to_json(r1_eps_fiber(p, GroupSchemeDescriptor::gm()));
  } else if (auto s = arg_after("h1:gm:")) {
    o.payload["h1"] = to_json(r1_eps_fiber(p, GroupSchemeDescriptor::gm(static_cast<std::size_t>(small_option(*s, "what", 0, 64)))));
  } else if (auto m2 = arg_after("h1:kummer:")) {
    o.payload["h1"] = to_json(h1_kummer(p, integer_option(*m2, "what")));
  } else if (auto n = arg_after("h1:finite:")) {
    if (a.group.empty()) throw InvalidInput("h1:finite needs --group");
    FiniteGroupTable g = group_option(a.group, ctx);
    FiniteTorsorClasses c = h1_finite_group(p, pchar, integer_option(*n, "what"), g);
    json reps = json::array();
    for (const auto& r : c.representatives) {
      json row = json::array();
      for (std::size_t x : r) row.push_back(std::to_string(x));
      reps.push_back(row);
    }
    o.payload["h1"] = {{"source", to_json(c.source)},
                       {"hom_count", std::to_string(c.hom_count)},
                       {"class_count", std::to_string(c.class_count())},
                       {"representatives", reps}};
  } else if (a.what == "bundle") {
    if (a.components.empty()) throw InvalidInput("bundle needs --components");
    ctx.option("components", a.components);
    json j = parse_json_text(a.components, "--components");
    if (!j.is_array()) throw InvalidInput("--components: expected an array");
    std::vector<std::pair<Vector, Integer>> raw;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string path = "--components[" + std::to_string(i) + "]";
      if (!j[i].is_object() || !j[i].contains("element") || !j[i].contains("denominator"))
        throw InvalidInput(path + ": expected {\"element\": [...], \"denominator\": \"m\"}");
      raw.push_back({parse_vector(j[i]["element"], path + ".element", p.rank()),
                     parse_integer(j[i]["denominator"], path + ".denominator")});
    }
    o.payload["bundle"] = to_json(bundle_class(p, raw));
  } else {
    throw InvalidInput("unknown --what \"" + a.what + "\"");
  }
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"logmonoid: exact computations with fs monoids, Kummer homs and log invariants"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "write the result envelope to this file");

  std::function<Outcome(Context&)> action;
  auto sub = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };

  std::string file, file2, element, n_text, lattice = "gp";
  bool fine_only = false;

  CLI::App* c = sub("saturate", "saturation of a monoid and the structure of its group hull");
  c->add_option("monoid", file, "monoid file")->required();
  c->final_callback([&] {
    action = [&](Context& ctx) {
      Monoid p = ctx.monoid(file);
      Monoid sat = saturation(p);
      Outcome o;
      o.payload = {{"monoid", to_json(sat)}, {"gp", to_json(gp(p).group.structure())}, {"already_saturated", is_saturated(p)}};
      return o;
    };
  });

  c = sub("gp", "structure of the group hull");
  c->add_option("monoid", file, "monoid file")->required();
  c->final_callback([&] {
    action = [&](Context& ctx) {
      Monoid p = ctx.monoid(file);
      SubgroupHull hull = gp(p);
      json tors = json::array();
      for (const auto& t : hull.group.torsion_generators()) tors.push_back(to_json(hull.to_ambient(t)));
      auto g = find_positive_grading(p);
      Outcome o;
      o.payload = {{"structure", to_json(hull.group.structure())},
                   {"torsion_generators", tors},
                   {"grading", g ? to_json(g->weights) : json(nullptr)}};
      return o;
    };
  });

  c = sub("contains", "membership of an element, with a decomposition");
  c->add_option("monoid", file, "monoid file")->required();
  c->add_option("--element", element, "element as [x1, ...] or x1,x2,...")->required();
  c->final_callback([&] {
    action = [&](Context& ctx) {
      Monoid p = ctx.monoid(file);
      Vector x = element_option(element, p.rank());
      ctx.option("element", to_json(x));
      MembershipOracle oracle(p);
      GroupElement e = p.ambient().normalize(x);
      auto dec = oracle.decompose(e);
      json gens = json::array();
      for (const auto& g : p.generators()) gens.push_back(to_json(g));
      Outcome o;
      o.payload = {{"element", to_json(e)},
                   {"contains", dec.has_value()},
                   {"generators", gens},
                   {"decomposition", dec ? to_json(*dec) : json(nullptr)}};
      return o;
    };
  });

  c = sub("hilbert", "Hilbert basis of the cone of a monoid in a torsion-free ambient");
  c->add_option("monoid", file, "monoid file")->required();
  c->add_option("--lattice", lattice, "gp (default) or ambient")->check(CLI::IsMember({"gp", "ambient"}));
  c->final_callback([&] {
    action = [&](Context& ctx) {
      Monoid p = ctx.monoid(file);
      ctx.option("lattice", lattice);
      if (!p.ambient().structure().invariant_factors.empty() || p.ambient().structure().free_rank != p.rank())
        throw InvalidInput("hilbert needs a free ambient group; use saturate for monoids with torsion");
      std::optional<IntMatrix> basis;
      if (lattice == "gp" && !p.generators().empty())
        basis = hermite_normal_form(IntMatrix::from_rows(p.generator_vectors(), p.rank()));
      std::vector<Vector> hb = p.generators().empty() ? std::vector<Vector>{} : hilbert_basis(p.generator_vectors(), p.rank(), basis);
      json list = json::array();
      for (const auto& v : hb) list.push_back(to_json(v));
      Outcome o;
      o.payload = {{"hilbert_basis", list}, {"lattice", lattice}, {"count", std::to_string(hb.size())}};
      return o;
    };
  });

  c = sub("kummer", "decide whether a hom is Kummer");
  c->add_option("hom", file, "hom file")->required();
  c->final_callback([&] {
    action = [&](Context& ctx) {
      MonoidHom h = ctx.hom(file);
      Outcome o;
      o.payload = kummer_json(is_kummer(h));
      return o;
    };
  });

  c = sub("pushout", "fs pushout of P1 <- P0 -> P2");
  c->add_option("left", file, "hom file P0 -> P1")->required();
  c->add_option("right", file2, "hom file P0 -> P2")->required();
  c->add_flag("--fine-only", fine_only, "integral image only, no saturation");
  c->final_callback([&] {
    action = [&](Context& ctx) {
      MonoidHom h1 = ctx.hom(file);
      MonoidHom h2 = ctx.hom(file2);
      ctx.option("fine_only", fine_only);
      Outcome o;
      o.payload = pushout_json(fine_only ? pushout_int(h1, h2) : pushout_fs(h1, h2), !fine_only);
      return o;
    };
  });

  c = sub("root", "the Kummer cover P -> P^(1/n)");
  c->add_option("monoid", file, "monoid file")->required();
  c->add_option("--n", n_text, "n >= 1")->required();
  c->final_callback([&] {
    action = [&](Context& ctx) {
      Monoid p = ctx.monoid(file);
      const Integer n = integer_option(n_text, "n");
      ctx.option("n", to_json(n));
      KummerRoot r = kummer_root(p, n);
      Outcome o;
      o.payload = {{"root", to_json(r.root)}, {"map", to_json(r.map)}};
      return o;
    };
  });

  c = sub("root-section", "adjoin an n-th root of an element of P");
  c->add_option("monoid", file, "monoid file")->required();
  c->add_option("--element", element, "a in P")->required();
  c->add_option("--n", n_text, "n >= 1")->required();
  c->final_callback([&] {
    action = [&](Context& ctx) {
      Monoid p = ctx.monoid(file);
      Vector x = element_option(element, p.rank());
      const Integer n = integer_option(n_text, "n");
      ctx.option("element", to_json(x));
      ctx.option("n", to_json(n));
      RootBySection r = root_by_section(p, x, n);
      Outcome o;
      o.payload = {{"q", to_json(r.q)}, {"root", to_json(r.root)}, {"map", to_json(r.map)}};
      return o;
    };
  });

  InvariantArgs inv;
  c = sub("invariants", "log fundamental group, log H^1 and bundle classes at a strict local point");
  c->add_option("monoid", inv.file, "monoid file")->required();
  c->add_option("--residue-char", inv.residue_char, "0 or a prime");
  c->add_option("--what", inv.what, "pi1 | h1:mu:m | h1:gm[:s] | h1:kummer:m | h1:finite:n | bundle")->required();
  c->add_option("--components", inv.components, "bundle: [{\"element\": [...], \"denominator\": \"m\"}, ...]");
  c->add_option("--group", inv.group, "h1:finite: cyclic:k, symmetric:k or a table file");
  c->final_callback([&] { action = [&](Context& ctx) { return invariants(inv, ctx); }; });

  VerifyArgs va;
  c = sub("verify", "run a verification suite; exit 2 on a violated property");
  c->add_option("--suite", va.suite, "descent | equalizer | gmlog | selfprod | basechange")
      ->required()
      ->check(CLI::IsMember({"descent", "equalizer", "gmlog", "selfprod", "basechange"}));
  c->add_option("--hom", va.hom, "hom file instead of seeded instances");
  c->add_option("--along", va.along, "basechange: hom P -> P'");
  c->add_option("--monoid", va.monoid, "gmlog: monoid file");
  c->add_option("--count", va.count, "number of seeded instances (default 50)");
  c->add_option("--seed", va.seed, "instance seed (default 1)");
  c->add_option("--max-rank", va.max_rank, "seeded instances: rank bound (default 2)");
  c->add_option("--max-index", va.max_index, "seeded instances: cokernel order bound (default 4)");
  c->add_option("--max-degree", va.max_degree, "degree bound (default 6, or LOGMONOID_MAX_DEGREE)");
  c->add_option("--modulus", va.moduli, "descent: coefficient modulus, 0 for Z; repeatable (default 0 and 6)");
  c->add_flag("--corrupt-iota", va.corrupt_iota, "descent: negative control with a corrupted iota");
  c->add_option("--n", va.n, "gmlog: n (default n')");
  c->add_option("--n-prime", va.n_prime, "gmlog: n' (default 1..4)");
  c->final_callback([&] { action = [&](Context& ctx) { return verify(va, ctx); }; });

  std::vector<std::string> argv_store{"logmonoid"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Context ctx;
  json env = {{"command", command}};
  int code = kOk;
  try {
    Outcome o = action(ctx);
    env["status"] = o.status;
    env["payload"] = o.payload;
    if (o.certificate) env["certificate"] = *o.certificate;
    code = o.status == "violated" ? kViolated : kOk;
  } catch (const Error& e) {
    env["status"] = "error";
    env["error"] = e.what();
    err << "error: " << e.what() << "\n";
    code = kInvalidInput;
  } catch (const json::exception& e) {
    env["status"] = "error";
    env["error"] = std::string("malformed input: ") + e.what();
    err << "error: malformed input: " << e.what() << "\n";
    code = kInvalidInput;
  }
  ctx.inputs["command"] = command;
  env["inputs_digest"] = sha256_hex(ctx.inputs.dump());

  const std::string text = env.dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << output << "\n";
      return kInvalidInput;
    }
    f << text;
  }
  return code;
}

}  // namespace logmonoid::cli
