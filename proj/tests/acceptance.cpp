// Acceptance suite: one line per criterion, nonzero exit on any failure.
// argv[1] (optional) is the path to the CLI binary for the determinism run.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "homcx/error.hpp"
#include "homcx/homology.hpp"
#include "homcx/homspace.hpp"
#include "homcx/irig.hpp"

using namespace homcx;

namespace {

struct Criterion {
  int number;
  std::string description;
  bool pass = true;
  std::string detail;
  std::int64_t ms = 0;
};

std::vector<Criterion> results;
bool filtration_partition_ok = true;
bool equivariance_ok = true;
std::string equivariance_detail;
std::int64_t spaces_checked = 0;

template <typename F>
void run(int number, const std::string& description, std::int64_t limit_ms,
         F&& body) {
  Criterion c{number, description, true, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  c.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
             .count();
  if (limit_ms > 0 && c.ms >= limit_ms) {
    c.pass = false;
    c.detail += (c.detail.empty() ? "" : "; ");
    c.detail += "runtime " + std::to_string(c.ms) + " ms exceeds limit " +
                std::to_string(limit_ms) + " ms";
  }
  results.push_back(std::move(c));
}

void note_space(const SimplicialHomSpace& sp) {
  ++spaces_checked;
  for (int n = 0; n <= sp.n_max; ++n) {
    int total = 0;
    for (int c : sp.strata_sizes(n)) total += c;
    if (total != sp.levels[n].size()) filtration_partition_ok = false;
  }
  if (!equivariance_ok) return;
  try {
    for (int n = 0; n <= sp.n_max; ++n) {
      auto orbits = conjugation_orbits(sp, n); // verifies equivariance
      auto strata = orbit_strata_sizes(sp, orbits);
      int total = 0;
      for (int c : strata) total += c;
      if (total != orbits.count) {
        equivariance_ok = false;
        equivariance_detail = "orbit strata do not partition Rep at level " +
                              std::to_string(n) + " of " +
                              sp.family->descriptor() + " @ " + sp.group->name;
      }
    }
  } catch (const std::exception& e) {
    equivariance_ok = false;
    equivariance_detail = e.what();
  }
}

void criterion1(Criterion& c) {
  Mode sym = Mode::symbolic_mode();
  for (const auto& fam : {build_free(), build_freebar(), build_gamma(2),
                          build_gamma(3), build_gamma(4), build_derived(2)}) {
    auto rep = verify_cosimplicial_identities(*fam, 5, sym);
    if (!rep.ok() || rep.undecidable != 0) {
      c.pass = false;
      c.detail = fam->descriptor() + ": symbolic identity suite failed";
      return;
    }
  }
  auto sigma = build_sigma23();
  Mode pw = Mode::pointwise(default_catalog(24));
  auto rep = verify_cosimplicial_identities(*sigma, 2, pw);
  auto maps = verify_level_maps(*sigma, 2, pw);
  if (!rep.ok() || !maps.ok()) {
    c.pass = false;
    c.detail = "sigma23 pointwise suite failed";
  }
}

void criterion2(Criterion& c) {
  auto s3 = catalog_group("sym:3");
  auto q8 = catalog_group("quaternion:8");
  auto g2 = build_gamma(2);
  std::int64_t hom_s3 = enumerate_hom(g2->level_ptr(2), s3).size();
  std::int64_t hom_q8 = enumerate_hom(g2->level_ptr(2), q8).size();
  std::int64_t oracle_s3 =
      (std::int64_t)s3->order * (std::int64_t)conjugacy_data(*s3).classes.size();
  std::int64_t oracle_q8 =
      (std::int64_t)q8->order * (std::int64_t)conjugacy_data(*q8).classes.size();
  if (hom_s3 != 18 || hom_s3 != oracle_s3 || hom_q8 != 40 ||
      hom_q8 != oracle_q8) {
    c.pass = false;
    c.detail = "commuting-pair counts disagree with the class-count identity";
    return;
  }
  // relator predicate <=> subgroup nilpotency class, exhaustively
  for (const auto& g : default_catalog(24)) {
    for (int n = 1; n <= 3; ++n) {
      std::vector<std::vector<Word>> relators;
      for (int q = 2; q <= 4; ++q) relators.push_back(gamma_relators(n, q));
      std::vector<int> tuple(n, 0);
      while (true) {
        auto profile = series_profile(*g, subgroup_closure(*g, tuple));
        for (int q = 2; q <= 4; ++q) {
          bool rel_ok = true;
          for (const auto& r : relators[q - 2])
            if (evaluate_word(*g, r, tuple) != 0) {
              rel_ok = false;
              break;
            }
          bool series_ok = profile.nilpotency_class.has_value() &&
                           *profile.nilpotency_class <= q - 1;
          if (rel_ok != series_ok) {
            c.pass = false;
            c.detail = "predicate mismatch over " + g->name + " at n=" +
                       std::to_string(n) + ", q=" + std::to_string(q);
            return;
          }
        }
        int k = n - 1;
        while (k >= 0 && tuple[k] == g->order - 1) tuple[k--] = 0;
        if (k < 0) break;
        ++tuple[k];
      }
    }
  }
}

void criterion3(Criterion& c) {
  for (const char* name :
       {"cyclic:4", "sym:3", "dihedral:8", "quaternion:8", "alt:4"}) {
    auto g = catalog_group(name);
    for (int q : {2, 3}) {
      auto sp = build_space(build_gamma(q), g, 4);
      note_space(sp);
      for (int n = 0; n <= 4; ++n)
        for (int t = 0; t <= n; ++t) {
          auto w = wedge_check(sp, n, t);
          if (!w.pass || w.stratum_size != w.binom * w.identity_free) {
            c.pass = false;
            c.detail = std::string(name) + " gamma:" + std::to_string(q) +
                       " (n=" + std::to_string(n) + ",t=" + std::to_string(t) +
                       "): " + w.witness;
            return;
          }
        }
    }
  }
}

void criterion4(Criterion& c) {
  if (!filtration_partition_ok) {
    c.pass = false;
    c.detail = "a stratum partition failed on a built space";
  }
  c.detail = std::to_string(spaces_checked) + " spaces checked";
}

void criterion5(Criterion& c) {
  Mode sym = Mode::symbolic_mode();
  auto check_set = [&](const CosimplicialPtr& fam, std::size_t expect,
                       const std::string& what) {
    auto z = scan_cocycles(*fam, 5, sym);
    if (z.size() != expect) {
      c.pass = false;
      c.detail = what + ": got " + std::to_string(z.size()) + " cocycles";
      return false;
    }
    return true;
  };
  if (!check_set(build_free(), 2, "free")) return;
  if (!check_set(build_gamma(3), 2, "gamma:3")) return;
  if (!check_set(build_gamma(4), 2, "gamma:4")) return;
  if (!check_set(build_gamma(2), 11, "gamma:2")) return;
  auto z_free = scan_cocycles(*build_free(), 5, sym);
  if (!(z_free[0].empty() && z_free[1] == word_generator(0))) {
    c.pass = false;
    c.detail = "free cocycles are not {e, a1}";
    return;
  }
  auto sigma = build_sigma23();
  Mode pw = Mode::pointwise(default_catalog(24));
  if (cocycle_check(*sigma, parse_word("a1*a2"), pw).status !=
      CocycleOutcome::Verified) {
    c.pass = false;
    c.detail = "sigma23: sigma1*sigma2 not verified pointwise";
  }
}

void criterion6(Criterion& c) {
  Mode sym = Mode::symbolic_mode();
  struct Case {
    CosimplicialPtr fam;
    const char* word;
  };
  std::vector<Case> cases = {{build_free(), "a1"},
                             {build_gamma(2), "a1"},
                             {build_gamma(2), "a1^2"}};
  for (const auto& cs : cases)
    for (const char* gname : {"cyclic:4", "sym:3"}) {
      auto g = catalog_group(gname);
      auto cocycle = make_cocycle(cs.fam, parse_word(cs.word), sym);
      auto rep = pushout_check(cs.fam, cocycle, g, 3);
      if (!rep.pass) {
        c.pass = false;
        c.detail = cs.fam->descriptor() + " ^ " + cs.word + " over " + gname;
        return;
      }
      for (const auto& l : rep.levels)
        if (l.hom_lb != l.expected) {
          c.pass = false;
          c.detail = "free-product count fails at level " + std::to_string(l.n);
          return;
        }
    }
}

void criterion7(Criterion& c) {
  if (!equivariance_ok) {
    c.pass = false;
    c.detail = equivariance_detail;
    return;
  }
  auto s3 = catalog_group("sym:3");
  auto sp = build_space(build_gamma(2), s3, 2);
  auto orbits = conjugation_orbits(sp, 2);
  // independent Burnside oracle
  std::int64_t fixed = 0;
  for (int e = 0; e < s3->order; ++e)
    for (const auto& t : sp.levels[2].tuples) {
      bool fix = true;
      for (int v : t)
        if (s3->conjugate(e, v) != v) {
          fix = false;
          break;
        }
      if (fix) ++fixed;
    }
  if (orbits.count != 8 || fixed != (std::int64_t)s3->order * 8) {
    c.pass = false;
    c.detail = "Rep(Z^2, S_3) = " + std::to_string(orbits.count) +
               ", Burnside sum " + std::to_string(fixed);
  }
}

void criterion8(Criterion& c) {
  // H_1 = abelianization across the catalog of order <= 12
  for (const auto& g : default_catalog(12)) {
    auto sp = build_space(build_free(), g, 2);
    auto h = homology(normalized_complex(sp, 2));
    auto ab = abelianization_invariants(*g);
    if (h[1].betti != 0 || h[1].torsion != ab) {
      c.pass = false;
      c.detail = "H_1 mismatch for " + g->name;
      return;
    }
  }
  // full low range for the order-2 cyclic group
  auto z2 = catalog_group("cyclic:2");
  auto h = homology(normalized_complex(build_space(build_free(), z2, 5), 5));
  bool ok = h[0].betti == 1 && h[0].torsion.empty() && h[1].betti == 0 &&
            h[1].torsion == std::vector<BigInt>{2} && h[2].betti == 0 &&
            h[2].torsion.empty() && h[3].betti == 0 &&
            h[3].torsion == std::vector<BigInt>{2};
  if (!ok) {
    c.pass = false;
    c.detail = "H_*(B(F,Z/2)) differs from (Z, Z/2, 0, Z/2) in dims 0..3";
    return;
  }
  // abelian groups: the gamma:2 and free complexes agree level-wise
  for (int order = 2; order <= 12; ++order) {
    auto g = catalog_group("cyclic:" + std::to_string(order));
    auto a = normalized_complex(build_space(build_free(), g, 3), 3);
    auto b = normalized_complex(build_space(build_gamma(2), g, 3), 3);
    if (a.basis != b.basis) {
      c.pass = false;
      c.detail = "bases differ for " + g->name;
      return;
    }
    for (int k = 1; k <= 3; ++k)
      if (!(a.boundary[k] == b.boundary[k])) {
        c.pass = false;
        c.detail = "boundaries differ for " + g->name;
        return;
      }
  }
  // boundary-squared is asserted inside normalized_complex on every build
}

void criterion9(Criterion& c) {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      auto t = tau(m, n);
      for (int i = 1; i <= m + n; ++i)
        if (t.apply(i) != (i <= m ? n + i : i - m)) {
          c.pass = false;
          c.detail = "tau formula fails";
          return;
        }
      if (m >= 1 && n >= 1) {
        auto tx = tau_times(m, n);
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= n; ++j)
            if (tx.apply((i - 1) * n + j) != (j - 1) * m + i) {
              c.pass = false;
              c.detail = "tau_times formula fails";
              return;
            }
      }
    }
  std::mt19937_64 rng(20260811);
  std::uniform_int_distribution<int> entry(-9, 9), dim(1, 5);
  auto rand_mat = [&](int n) {
    IntMat m = IntMat::zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.a[i][j] = entry(rng);
    return m;
  };
  for (int t = 0; t < 100; ++t) {
    auto res = bipermutative_check(rand_mat(dim(rng)), rand_mat(dim(rng)),
                                   rand_mat(dim(rng)), rand_mat(dim(rng)));
    for (const auto& r : res)
      if (!r.pass) {
        c.pass = false;
        c.detail = "instance " + std::to_string(t) + ": " + r.name + " (" +
                   r.witness + ")";
        return;
      }
  }
}

std::string run_cli(const std::string& cmd, int* status) {
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return output;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), got);
  *status = pclose(pipe);
  return output;
}

std::string strip_timing(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (line.find("timing_ms") == std::string::npos) out << line << "\n";
  return out.str();
}

void criterion10(Criterion& c, const std::string& cli_path) {
  if (cli_path.empty()) {
    c.pass = false;
    c.detail = "no CLI binary path supplied";
    return;
  }
  std::string cmd = cli_path +
                    " decompose --group sym:3 --family gamma:2 --n 3 "
                    "--format json 2>/dev/null";
  int s1 = 0, s2 = 0;
  std::string a = run_cli(cmd, &s1);
  std::string b = run_cli(cmd, &s2);
  if (s1 != 0 || s2 != 0) {
    c.pass = false;
    c.detail = "CLI exited nonzero";
    return;
  }
  if (strip_timing(a) != strip_timing(b) || a.empty()) {
    c.pass = false;
    c.detail = "reports differ between runs";
  }
}

} // namespace

int main(int argc, char** argv) {
  std::string cli_path = argc > 1 ? argv[1] : "";

  run(1,
      "cosimplicial identities: free, freebar, gamma:2/3/4, derived:2 "
      "symbolic to level 5; sigma23 pointwise over catalog <= 24",
      60000, criterion1);
  run(2,
      "enumeration oracles: |Hom(Z^2,S_3)| = 18, |Hom(Z^2,Q_8)| = 40; "
      "relator predicate <=> nilpotency class for n <= 3, q in {2,3,4}",
      300000, criterion2);
  run(3,
      "wedge stratum bijections and count identities for five groups, "
      "q in {2,3}, n <= 4",
      600000, criterion3);
  run(4, "stratum sizes partition every built space exactly", 0, criterion4);
  run(5,
      "cocycle scans: {e,a1} for free/gamma:3/gamma:4, all powers for "
      "gamma:2, sigma1*sigma2 pointwise for sigma23",
      0, criterion5);
  run(6,
      "pushout squares: |Hom(L^b_n,G)| = |G| |Hom(L_n,G)| and pullback "
      "bijections for three twists over cyclic:4 and sym:3, n <= 3",
      0, criterion6);
  run(7,
      "equivariance on every built space; Rep(Z^2,S_3) = 8 with Burnside "
      "cross-check; orbit strata partition Rep",
      0, criterion7);
  run(8,
      "homology: H_1 = abelianization for catalog <= 12; H_*(B(F,Z/2)) = "
      "(Z, Z/2, 0, Z/2); gamma:2 = free complexes for abelian groups",
      300000, criterion8);
  run(9,
      "shuffle formulas on (m,n) <= 5 and 100 randomized "
      "symmetry/distributivity instances",
      0, criterion9);
  run(10, "byte-identical decompose reports across two CLI runs", 0,
      [&](Criterion& c) { criterion10(c, cli_path); });

  bool all = true;
  for (const auto& c : results) {
    std::cout << "CRITERION " << c.number << ": "
              << (c.pass ? "PASS" : "FAIL") << " - " << c.description << " ["
              << c.ms << " ms]";
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
    if (!c.pass) all = false;
  }
  std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}
