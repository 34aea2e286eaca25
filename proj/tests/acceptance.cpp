// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "logmonoid/cech.hpp"
#include "logmonoid/cli.hpp"
#include "logmonoid/fscat.hpp"
#include "logmonoid/instances.hpp"
#include "logmonoid/invariants.hpp"
#include "support.hpp"

using namespace logmonoid;
using namespace lmtest;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr double kSaturateSeconds = 1.0;
constexpr int kOracleMonoids = 200;
constexpr long kOracleWindow = 8;
constexpr int kKummerInstances = 50;
constexpr double kDescentSeconds = 60.0;
constexpr int kConsistencyCases = 50;
constexpr int kPermutations = 1000;
constexpr int kLawCases = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Criterion {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << what;
      ok = false;
    }
  }
};

struct CliRun {
  int code;
  json env;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  json env;
  try {
    env = json::parse(out.str());
  } catch (const json::exception&) {
  }
  return {code, env};
}

std::string scratch(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "logmonoid_acceptance";
  fs::create_directories(dir);
  std::ofstream(dir / name) << text;
  return (dir / name).string();
}

// Largest gcd of maximal minors over linearly independent generator subsets.
// If a lies in the rational cone it lies in the cone of such a subset S, and
// its coordinates there have denominators dividing that gcd, so some n up to
// this bound has n·a in P.
long multiple_bound(const Monoid& p) {
  const auto& gens = p.generators();
  long best = 1;
  const std::size_t m = gens.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) rows.push_back(gens[i].coords);
    IntMatrix g = IntMatrix::from_rows(rows, p.rank());
    if (g.rank() != rows.size()) continue;
    std::vector<Integer> d = determinantal_divisors(g);
    best = std::max(best, d.back().get_si() < 0 ? -d.back().get_si() : d.back().get_si());
  }
  return best;
}

void criterion1(Criterion& c) {
  auto timed = [&](const Monoid& p, const Monoid& expect, const std::string& name) {
    auto t = Clock::now();
    Monoid s = saturation(p);
    double dt = seconds_since(t);
    c.require(s == expect, name + " saturates to " + s.to_string());
    c.require(dt < kSaturateSeconds, name + " took " + std::to_string(dt) + " s");
  };
  timed(Monoid(FgAbelianGroup::free(1), {V({2}), V({3})}), Monoid::free(1), "<2,3>");
  for (std::size_t k = 1; k <= 4; ++k) timed(Monoid::free(k), Monoid::free(k), "N^" + std::to_string(k));
  if (c.ok) c.detail << "<2,3> -> N and N^k fixed for k <= 4, each under " << kSaturateSeconds << " s";
}

void criterion2(Criterion& c) {
  InstanceRng rng(2024);
  long checked = 0, members = 0, mismatches = 0;
  for (int t = 0; t < kOracleMonoids; ++t) {
    Monoid p = random_graded_monoid(rng, 3, 4, 4);
    Grading w = require_grading(p);
    Monoid sat = saturation(p);
    MembershipOracle po(p, w);
    MembershipOracle so(sat, w);
    SubgroupHull hull = gp(p);
    const long bound = multiple_bound(p);
    const std::size_t k = p.rank();
    // Window: points of gp(P) with coordinates in [-W, W] and weight in [0, W].
    std::vector<long> x(k, -kOracleWindow);
    for (;;) {
      Vector v;
      for (long xi : x) v.push_back(Integer(xi));
      Integer deg = w.weight(v);
      if (deg >= 0 && deg <= kOracleWindow && hull.to_hull(v)) {
        GroupElement a = p.ambient().normalize(v);
        bool fast = so.contains(a);
        bool slow = saturation_by_search(po, a, bound);
        if (fast != slow && mismatches++ == 0) c.detail << "mismatch at " << a.to_string() << " in " << p.to_string() << "; ";
        ++checked;
        members += fast;
      }
      std::size_t i = 0;
      while (i < k && x[i] == kOracleWindow) x[i++] = -kOracleWindow;
      if (i == k) break;
      ++x[i];
    }
  }
  c.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  c.detail << kOracleMonoids << " monoids, " << checked << " window points (" << members << " in P^sat), " << mismatches << " mismatches";
}

void criterion3(Criterion& c) {
  for (long n = 2; n <= 4; ++n) {
    MonoidHom times(Monoid::free(1), Monoid::free(1), IntMatrix{{n}});
    FsPushout po = pushout_fs(times, times);
    c.require(po.gp_presentation.structure() == S(1, {n}), "gp for n=" + std::to_string(n));
    // N + Z/n inside Z + Z/n, compared through (1,0) -> (1,0), (0,1) -> (1,-1).
    IntMatrix rel(1, 2);
    rel(0, 1) = n;
    Monoid expect(FgAbelianGroup(2, rel), Vs({{1, 0}, {0, 1}}));
    c.require(is_saturated(po.result), "saturated for n=" + std::to_string(n));
    c.require(is_isomorphism(MonoidHom(expect, po.result, IntMatrix{{1, 1}, {0, -1}})), "monoid for n=" + std::to_string(n));
  }
  if (c.ok) c.detail << "n = 2, 3, 4: gp = Z + Z/n, monoid = N + Z/n";
}

void criterion4(Criterion& c) {
  auto t = Clock::now();
  CliRun r = cli({"verify", "--suite", "descent", "--count", std::to_string(kKummerInstances), "--max-degree", "6",
                  "--modulus", "0", "--modulus", "6"});
  double dt = seconds_since(t);
  c.require(r.code == 0, "exit code " + std::to_string(r.code));
  c.require(r.env["payload"]["instance_count"] == std::to_string(kKummerInstances), "instance count");
  c.require(r.env["payload"]["failures"] == "0", "failures reported");
  bool all_kummer = true;
  long monomials = 0;
  for (const auto& inst : r.env["payload"]["instances"]) {
    all_kummer = all_kummer && inst["kummer"] == true;
    for (const auto& rep : inst["reports"]) monomials += std::stol(rep["checked"].get<std::string>());
  }
  c.require(all_kummer, "a generated instance is not Kummer");
  c.require(dt < kDescentSeconds, "took " + std::to_string(dt) + " s");
  c.detail << kKummerInstances << " instances over Z and Z/6, " << monomials << " checks, " << dt << " s";
}

void criterion5(Criterion& c) {
  for (const char* suite : {"equalizer", "basechange"}) {
    CliRun r = cli({"verify", "--suite", suite, "--count", std::to_string(kKummerInstances)});
    c.require(r.code == 0 && r.env["payload"]["failures"] == "0", std::string(suite) + " failed");
    c.detail << suite << " " << r.env["payload"]["instance_count"].get<std::string>() << " runs; ";
  }
}

void criterion6(Criterion& c) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (long np = 1; np <= 4; ++np) {
      CochainComplexReport r = gmlog_complex(Monoid::free(k), 12, np);
      c.require(r.passed && r.h1_dimension == 0u && r.h0_dimension == k,
                "P = N^" + std::to_string(k) + ", n' = " + std::to_string(np));
    }
  if (c.ok) c.detail << "N, N^2, N^3 with n' = 1..4: H^0 = free rank, H^1 = 0";
}

void criterion7(Criterion& c) {
  Monoid nat = Monoid::free(1);
  c.require(pi1_log(nat, 0) == ProfiniteDescriptor{1, {}, 0}, "pi1_log(N, 0)");
  for (long m = 1; m <= 12; ++m) {
    GroupStructure expect = m == 1 ? S(0, {}) : S(0, {m});
    c.require(h1_kummer(nat, m) == expect, "h1_kummer(N, " + std::to_string(m) + ")");
  }
  c.require(r1_eps_fiber(nat, GroupSchemeDescriptor::gm()) == TorsionGroup{S(0, {}), 1}, "r1_eps_fiber(N, G_m)");
  InstanceRng rng(717);
  for (int t = 0; t < kConsistencyCases; ++t) {
    Monoid p = saturation(random_graded_monoid(rng, 3, 4, 3));
    const long m = rng.uniform(1, 12);
    c.require(r1_eps_fiber(p, GroupSchemeDescriptor::mu(m)) == TorsionGroup{h1_kummer(p, m), 0},
              "mu case for " + p.to_string());
  }
  if (c.ok) c.detail << "closed forms exact; " << kConsistencyCases << " consistency cases";
}

void criterion8(Criterion& c) {
  InstanceRng rng(88);
  std::mt19937_64 shuffle(89);
  Monoid p = Monoid::free(2);
  auto random_raw = [&](std::size_t n) {
    std::vector<std::pair<Vector, Integer>> raw;
    for (std::size_t i = 0; i < n; ++i)
      raw.push_back({V({rng.uniform(-6, 6), rng.uniform(-6, 6)}), Integer(rng.uniform(1, 6))});
    return raw;
  };
  for (int t = 0; t < kPermutations; ++t) {
    auto raw = random_raw(static_cast<std::size_t>(rng.uniform(1, 6)));
    BundleClass a = bundle_class(p, raw);
    std::shuffle(raw.begin(), raw.end(), shuffle);
    BundleClass b = bundle_class(p, raw);
    c.require(a == b && a.to_string() == b.to_string(), "permutation changed " + a.to_string());
  }
  for (int t = 0; t < kLawCases; ++t) {
    BundleClass a = bundle_class(p, random_raw(static_cast<std::size_t>(rng.uniform(0, 3))));
    BundleClass b = bundle_class(p, random_raw(static_cast<std::size_t>(rng.uniform(0, 3))));
    BundleClass s = direct_sum(a, b);
    c.require(s == direct_sum(b, a), "direct sum not symmetric");
    c.require(s.rank() == a.rank() + b.rank(), "rank not additive");
    c.require(is_classical(s) == (is_classical(a) && is_classical(b)), "classicality of " + s.to_string());
  }
  if (c.ok) c.detail << kPermutations << " permutations, " << kLawCases << " law cases";
}

void criterion9(Criterion& c) {
  const char* nat = R"({"ambient": {"rank": "1"}, "generators": [["1"]]})";
  const char* free2 = R"({"ambient": {"rank": "2"}, "generators": [["1","0"],["0","1"]]})";
  std::string x2 = scratch("x2.json", std::string(R"({"source": )") + nat + R"(, "target": )" + nat + R"(, "ambient_map": [["2"]]})");
  std::string shear =
      scratch("shear.json", std::string(R"({"source": )") + free2 + R"(, "target": )" + free2 + R"(, "ambient_map": [["1","1"],["0","1"]]})");
  CliRun a = cli({"verify", "--suite", "descent", "--hom", x2, "--corrupt-iota"});
  c.require(a.code == 2 && a.env.contains("certificate") && !a.env["certificate"]["element"].get<std::string>().empty(),
            "corrupted iota not caught");
  CliRun b = cli({"verify", "--suite", "descent", "--hom", shear});
  c.require(b.code == 2 && b.env.contains("certificate") && !b.env["certificate"]["element"].get<std::string>().empty(),
            "non-Kummer hom not caught");
  if (c.ok)
    c.detail << "corrupted iota: exit 2 at " << a.env["certificate"]["element"].get<std::string>()
             << "; non-Kummer: exit 2 at " << b.env["certificate"]["element"].get<std::string>();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"saturation fixed points", criterion1},  {"saturation oracle", criterion2},
      {"dvr pushout", criterion3},              {"splitting identities", criterion4},
      {"equalizer and base change", criterion5}, {"gmlog complex", criterion6},
      {"closed-form invariants", criterion7},   {"bundle classes", criterion8},
      {"negative controls", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    auto t = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << c.detail.str() << " ["
              << seconds_since(t) << " s]" << std::endl;
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
