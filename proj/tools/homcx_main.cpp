// homcx -- exact finite verification of cosimplicial-group constructions:
// homomorphism-space enumeration, degeneracy filtrations and their stratum
// bijections, conjugation orbits, cocycle scans, pushout/pullback squares,
// integral homology of realizations, and shuffle/block-sum/tensor diagrams.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "homcx/error.hpp"
#include "homcx/homology.hpp"
#include "homcx/homspace.hpp"
#include "homcx/report.hpp"

using namespace homcx;

namespace {

struct CommonOpts {
  std::vector<std::string> groups;
  std::string family = "gamma:2";
  int n = 3;
  int max_dim = 3;
  int exponent_bound = 5;
  int pointwise_orders = 24;
  std::int64_t budget = 10000000;
  std::string format = "text";
  std::string cache_dir;
};

Mode default_pointwise(const CommonOpts& o) {
  return Mode::pointwise(default_catalog(o.pointwise_orders), o.budget);
}

// Symbolic when every level kind up to `n` decides words, otherwise
// pointwise over the catalog.
Mode auto_mode(const CosimplicialGroup& fam, int n, const CommonOpts& o) {
  for (int k = 0; k <= n && fam.has_level(k); ++k)
    if (!kind_decidable(fam.level(k).kind)) return default_pointwise(o);
  return Mode::symbolic_mode();
}

Json config_json(const CommonOpts& o, bool with_groups = true) {
  Json c;
  if (with_groups) c["groups"] = o.groups;
  c["family"] = o.family;
  c["budget"] = o.budget;
  return c;
}

Json strata_json(const SimplicialHomSpace& sp) {
  Json levels = Json::array();
  for (int n = 0; n <= sp.n_max; ++n) {
    Json l;
    l["n"] = n;
    l["size"] = sp.levels[n].size();
    l["strata"] = sp.strata_sizes(n);
    levels.push_back(std::move(l));
  }
  return levels;
}

int cmd_decompose(const CommonOpts& o) {
  Json cfg = config_json(o);
  cfg["n"] = o.n;
  Report rep = new_report("decompose", cfg);
  auto t0 = std::chrono::steady_clock::now();
  auto fam = parse_family(o.family, default_pointwise(o));
  bool gamma = o.family.rfind("gamma:", 0) == 0;
  Json groups = Json::array();
  for (const auto& gd : o.groups) {
    auto g = catalog_group(gd);
    auto sp = build_space(fam, g, o.n, o.budget, o.cache_dir);
    Json entry;
    entry["group"] = g->name;
    entry["group_hash"] = g->content_hash();
    Json phashes = Json::array();
    for (int n = 0; n <= o.n; ++n)
      phashes.push_back(fam->level(n).content_hash());
    entry["presentation_hashes"] = std::move(phashes);
    entry["levels"] = strata_json(sp);
    // filtration partition is checked exactly
    for (int n = 0; n <= o.n; ++n) {
      int total = 0;
      for (int c : sp.strata_sizes(n)) total += c;
      if (total != sp.levels[n].size()) rep.any_failure = true;
    }
    if (gamma) {
      Json wedges = Json::array();
      for (int n = 0; n <= o.n; ++n)
        for (int t = 0; t <= n; ++t) {
          auto w = wedge_check(sp, n, t);
          Json wj;
          wj["n"] = w.n;
          wj["t"] = w.t;
          wj["stratum"] = w.stratum_size;
          // two equivalent indexings of the same splitting: choosing the t
          // degenerate positions, or counting wedge copies of the
          // complementary level (binomial symmetry makes them agree)
          wj["positions_choose"] = w.binom;
          wj["piece_level"] = n - t;
          wj["wedge_copies"] = w.binom;
          wj["identity_free"] = w.identity_free;
          wj["pass"] = w.pass;
          if (!w.pass) {
            wj["witness"] = w.witness;
            rep.any_failure = true;
          }
          wedges.push_back(std::move(wj));
        }
      entry["wedge_checks"] = std::move(wedges);
    }
    Json orbits = Json::array();
    for (int n = 0; n <= o.n; ++n) {
      auto ospace = conjugation_orbits(sp, n);
      Json oj;
      oj["n"] = n;
      oj["rep_size"] = ospace.count;
      oj["orbit_strata"] = orbit_strata_sizes(sp, ospace);
      orbits.push_back(std::move(oj));
    }
    entry["orbits"] = std::move(orbits);
    groups.push_back(std::move(entry));
  }
  rep.body["groups"] = std::move(groups);
  rep.body["all_passed"] = !rep.any_failure;
  rep.set_timing(std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count());
  std::cout << rep.render(o.format);
  return rep.any_failure ? 1 : 0;
}

int cmd_homology(const CommonOpts& o) {
  Json cfg = config_json(o);
  cfg["max_dim"] = o.max_dim;
  Report rep = new_report("homology", cfg);
  auto t0 = std::chrono::steady_clock::now();
  auto fam = parse_family(o.family, default_pointwise(o));
  if (o.groups.size() != 1)
    fail(ErrorCode::ConfigError, "homology needs exactly one --group");
  auto g = catalog_group(o.groups[0]);
  auto sp = build_space(fam, g, o.max_dim, o.budget, o.cache_dir);
  auto cc = normalized_complex(sp, o.max_dim);
  auto h = homology(cc);
  rep.body["space"] = o.family + " @ " + g->name;
  rep.body["group_hash"] = g->content_hash();
  rep.body["max_dim"] = o.max_dim;
  Json reliable = Json::array();
  for (int k = 0; k < o.max_dim; ++k) reliable.push_back(k);
  rep.body["reliable_dims"] = std::move(reliable);
  Json groups = Json::array();
  for (std::size_t k = 0; k < h.size(); ++k) {
    Json hj;
    hj["dim"] = k;
    hj["betti"] = h[k].betti;
    Json tors = Json::array();
    for (const auto& t : h[k].torsion) tors.push_back(t.str());
    hj["torsion"] = std::move(tors);
    groups.push_back(std::move(hj));
  }
  rep.body["groups"] = std::move(groups);
  Json sizes = Json::array();
  for (int k = 0; k <= o.max_dim; ++k) sizes.push_back(cc.basis[k].size());
  rep.body["nondegenerate_counts"] = std::move(sizes);
  rep.body["euler_truncated"] = euler_truncated(cc);
  rep.body["components"] = component_count(sp);
  rep.set_timing(std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count());
  std::cout << rep.render(o.format);
  return 0;
}

int cmd_cocycles(const CommonOpts& o) {
  Json cfg = config_json(o, false);
  cfg["exponent_bound"] = o.exponent_bound;
  Report rep = new_report("cocycles", cfg);
  auto t0 = std::chrono::steady_clock::now();
  auto fam = parse_family(o.family, default_pointwise(o));
  Mode mode = auto_mode(*fam, std::min(2, fam->truncation().value_or(2)), o);
  rep.body["mode"] = mode.describe();
  Json found = Json::array();
  if (o.family.rfind("sigma23", 0) == 0) {
    // level 1 is a finite group; scan all of its elements as words
    std::vector<Word> words = {parse_word("e"),        parse_word("a1"),
                               parse_word("a2"),       parse_word("a1*a2"),
                               parse_word("a2*a1"),    parse_word("a1*a2*a1")};
    for (const auto& w : words) {
      auto outcome = cocycle_check(*fam, w, mode);
      if (outcome.status == CocycleOutcome::Verified)
        found.push_back(format_word(w));
    }
  } else {
    for (const auto& w : scan_cocycles(*fam, o.exponent_bound, mode))
      found.push_back(format_word(w));
  }
  rep.body["verified_cocycles"] = std::move(found);
  rep.body["note"] =
      "scan covers powers of a1 up to the bound; completeness of the full "
      "cocycle set is not claimed";
  rep.set_timing(std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count());
  std::cout << rep.render(o.format);
  return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& cocycle_word) {
  Json cfg = config_json(o);
  cfg["n"] = o.n;
  cfg["pointwise_orders"] = o.pointwise_orders;
  Report rep = new_report("verify", cfg);
  auto t0 = std::chrono::steady_clock::now();
  auto fam = parse_family(o.family, default_pointwise(o));
  int n_max = fam->truncation() ? std::min(o.n, *fam->truncation()) : o.n;

  auto sym = verify_cosimplicial_identities(*fam, n_max, Mode::symbolic_mode());
  rep.body["identities_symbolic"] = to_json(sym);
  if (!sym.ok()) rep.any_failure = true;
  auto hom_sym = verify_level_maps(*fam, std::min(n_max, 3), Mode::symbolic_mode());
  rep.body["homomorphisms_symbolic"] = to_json(hom_sym);
  if (!hom_sym.ok()) rep.any_failure = true;

  if (sym.undecidable > 0 || hom_sym.undecidable > 0) {
    Mode pw = default_pointwise(o);
    auto pwrep = verify_cosimplicial_identities(*fam, n_max, pw);
    rep.body["identities_pointwise"] = to_json(pwrep);
    if (!pwrep.ok()) rep.any_failure = true;
    auto hom_pw = verify_level_maps(*fam, n_max, pw);
    rep.body["homomorphisms_pointwise"] = to_json(hom_pw);
    if (!hom_pw.ok()) rep.any_failure = true;
  }

  if (o.family == "sigma23") {
    // surface the alternative reading of the level-2 presentation
    auto strict = build_sigma23(Sigma23Reading::SharedSquare);
    Json readings;
    readings["default"] = "a^2 = b^2 = c^2 = e";
    readings["strict"] = "a^2 = b^2 = c^2 only";
    auto strict_maps = verify_level_maps(*strict, 2, default_pointwise(o));
    readings["strict_homomorphism_checks"] = to_json(strict_maps);
    readings["note"] =
        strict_maps.ok()
            ? "both readings verify"
            : "strict reading fails the coface homomorphism checks; the "
              "level-2 computations need a^2 = e";
    rep.body["level2_readings"] = std::move(readings);
  }

  if (!cocycle_word.empty()) {
    Word b = parse_word(cocycle_word);
    Mode mode = auto_mode(*fam, std::min(2, fam->truncation().value_or(2)), o);
    auto outcome = cocycle_check(*fam, b, mode);
    Json cj;
    cj["word"] = format_word(b);
    cj["mode"] = mode.describe();
    cj["status"] = outcome.status == CocycleOutcome::Verified   ? "verified"
                   : outcome.status == CocycleOutcome::Refuted ? "refuted"
                                                               : "inconclusive";
    if (!outcome.witness.empty()) cj["witness"] = outcome.witness;
    if (outcome.status == CocycleOutcome::Verified) {
      Cocycle c{b, mode};
      auto morphism = build_hb(fam, c, n_max);
      cj["morphism_levels"] = (int)morphism.levels.size();
      Json push = Json::array();
      for (const auto& gd : o.groups) {
        auto g = catalog_group(gd);
        auto pr = pushout_check(fam, c, g, std::min(n_max, 3), o.budget);
        Json pj;
        pj["group"] = g->name;
        pj["pass"] = pr.pass;
        Json lv = Json::array();
        for (const auto& l : pr.levels) {
          Json lj;
          lj["n"] = l.n;
          lj["hom_lb"] = l.hom_lb;
          lj["expected"] = l.expected;
          lj["product_bijection"] = l.product_bijection;
          lj["pullback_bijection"] = l.pullback_bijection;
          lv.push_back(std::move(lj));
        }
        pj["levels"] = std::move(lv);
        if (!pr.pass) rep.any_failure = true;
        push.push_back(std::move(pj));
      }
      cj["pushout_checks"] = std::move(push);
    } else if (outcome.status == CocycleOutcome::Refuted) {
      rep.any_failure = true;
    }
    rep.body["cocycle"] = std::move(cj);
  }

  rep.body["all_passed"] = !rep.any_failure;
  rep.set_timing(std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count());
  std::cout << rep.render(o.format);
  return rep.any_failure ? 1 : 0;
}

int cmd_rep(const CommonOpts& o) {
  Json cfg = config_json(o);
  cfg["n"] = o.n;
  Report rep = new_report("rep", cfg);
  auto t0 = std::chrono::steady_clock::now();
  auto fam = parse_family(o.family, default_pointwise(o));
  Json groups = Json::array();
  for (const auto& gd : o.groups) {
    auto g = catalog_group(gd);
    auto sp = build_space(fam, g, o.n, o.budget, o.cache_dir);
    Json entry;
    entry["group"] = g->name;
    entry["group_hash"] = g->content_hash();
    Json levels = Json::array();
    for (int n = 0; n <= o.n; ++n) {
      auto orbits = conjugation_orbits(sp, n);
      Json lj;
      lj["n"] = n;
      lj["hom_size"] = sp.levels[n].size();
      lj["rep_size"] = orbits.count;
      lj["orbit_strata"] = orbit_strata_sizes(sp, orbits);
      levels.push_back(std::move(lj));
    }
    entry["levels"] = std::move(levels);
    groups.push_back(std::move(entry));
  }
  rep.body["groups"] = std::move(groups);
  rep.set_timing(std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count());
  std::cout << rep.render(o.format);
  return 0;
}

int cmd_irig(const CommonOpts& o, int max_size, int instances,
             std::uint64_t seed) {
  Json cfg;
  cfg["max_size"] = max_size;
  cfg["instances"] = instances;
  cfg["seed"] = seed;
  Report rep = new_report("irig", cfg);
  auto t0 = std::chrono::steady_clock::now();

  bool formulas_ok = true;
  for (int m = 0; m <= max_size; ++m)
    for (int n = 0; n <= max_size; ++n) {
      auto t = tau(m, n);
      for (int i = 1; i <= m + n; ++i)
        if (t.apply(i) != (i <= m ? n + i : i - m)) formulas_ok = false;
      if (!compose_perm(tau(m, n), tau(n, m)).is_identity()) formulas_ok = false;
      if (m >= 1 && n >= 1) {
        auto tx = tau_times(m, n);
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= n; ++j)
            if (tx.apply((i - 1) * n + j) != (j - 1) * m + i)
              formulas_ok = false;
        if (!compose_perm(tau_times(m, n), tau_times(n, m)).is_identity())
          formulas_ok = false;
      }
    }
  rep.body["shuffle_formulas"] = formulas_ok;
  if (!formulas_ok) rep.any_failure = true;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, max_size);
  auto rand_mat = [&](int n) {
    IntMat m = IntMat::zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.a[i][j] = entry(rng);
    return m;
  };
  int failures = 0;
  Json failed_cases = Json::array();
  for (int t = 0; t < instances; ++t) {
    int m = dim(rng), n = dim(rng), mp = dim(rng), np = dim(rng);
    auto results = bipermutative_check(rand_mat(m), rand_mat(mp), rand_mat(n),
                                       rand_mat(np));
    for (const auto& r : results)
      if (!r.pass) {
        ++failures;
        Json fj;
        fj["instance"] = t;
        fj["name"] = r.name;
        fj["witness"] = r.witness;
        failed_cases.push_back(std::move(fj));
      }
  }
  rep.body["diagram_instances"] = instances;
  rep.body["diagram_failures"] = failures;
  if (failures) {
    rep.body["failed_cases"] = std::move(failed_cases);
    rep.any_failure = true;
  }

  // record the conjugating shuffles behind left distributivity
  Json shuffles = Json::array();
  for (int m = 1; m <= std::min(3, max_size); ++m)
    for (int n = 1; n <= std::min(3, max_size); ++n)
      for (int np = 1; np <= std::min(3, max_size); ++np) {
        Json sj;
        sj["m"] = m;
        sj["n"] = n;
        sj["n_prime"] = np;
        sj["images"] = left_distributivity_shuffle(m, n, np).images;
        shuffles.push_back(std::move(sj));
      }
  rep.body["left_distributivity_shuffles"] = std::move(shuffles);

  int coh_failures = 0;
  for (int t = 0; t < instances; ++t) {
    int m = dim(rng);
    int r = m + 1 + (int)(rng() % 3);
    auto sigma = Permutation::identity(r);
    for (int i = r - 1; i > 0; --i) {
      std::uniform_int_distribution<int> pick(0, i);
      std::swap(sigma.images[i], sigma.images[pick(rng)]);
    }
    auto rho = Permutation::identity(r);
    for (int i = r - 1; i > m; --i) {
      std::uniform_int_distribution<int> pick(m, i);
      std::swap(rho.images[i], rho.images[pick(rng)]);
    }
    if (!coherence_check(rand_mat(m), sigma, compose_perm(rho, sigma)).pass)
      ++coh_failures;
  }
  rep.body["coherence_instances"] = instances;
  rep.body["coherence_failures"] = coh_failures;
  if (coh_failures) rep.any_failure = true;

  rep.body["all_passed"] = !rep.any_failure;
  rep.set_timing(std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count());
  std::cout << rep.render(o.format);
  return rep.any_failure ? 1 : 0;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::BudgetExceeded:
      return 2;
    case ErrorCode::ConfigError:
    case ErrorCode::UnknownCatalogName:
    case ErrorCode::InvalidGroupFile:
    case ErrorCode::UnsupportedFamilyParameter:
    case ErrorCode::SizeGuardExceeded:
      return 3;
    default:
      return 1;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"homcx: exact verification of cosimplicial group structures "
               "over finite groups"};
  app.require_subcommand(1);
  CommonOpts o;
  if (const char* env = std::getenv("HOMCX_CACHE")) o.cache_dir = env;

  auto add_common = [&](CLI::App* cmd, bool with_group) {
    if (with_group)
      cmd->add_option("--group", o.groups,
                      "group descriptor (cyclic:n | sym:n | alt:n | "
                      "dihedral:2n | quaternion:8 | file path); repeatable");
    cmd->add_option("--family", o.family,
                    "family descriptor (free | freebar | gamma:q | derived:q "
                    "| sigma23 | lb:<family>:<word>)");
    cmd->add_option("--budget", o.budget, "enumeration budget (tuples/level)");
    cmd->add_option("--format", o.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--cache-dir", o.cache_dir,
                    "enumeration cache directory (default $HOMCX_CACHE)");
  };

  auto* decompose = app.add_subcommand(
      "decompose", "strata tables, wedge bijections, orbit decompositions");
  add_common(decompose, true);
  decompose->add_option("--n", o.n, "top simplicial level");

  auto* homology_cmd =
      app.add_subcommand("homology", "integral homology of the realization");
  add_common(homology_cmd, true);
  homology_cmd->add_option("--max-dim", o.max_dim, "top chain dimension");

  auto* cocycles = app.add_subcommand("cocycles", "scan 1-cocycles");
  add_common(cocycles, false);
  cocycles->add_option("--exponent-bound", o.exponent_bound,
                       "scan a1^m for |m| up to this bound");
  cocycles->add_option("--pointwise-orders", o.pointwise_orders,
                       "catalog order cap for pointwise checks");

  std::string cocycle_word;
  auto* verify = app.add_subcommand(
      "verify", "cosimplicial identity and homomorphism suites");
  add_common(verify, true);
  verify->add_option("--n", o.n, "verify identities up to this level");
  verify->add_option("--pointwise-orders", o.pointwise_orders,
                     "catalog order cap for pointwise checks");
  verify->add_option("--cocycle", cocycle_word,
                     "also check this level-1 word and its pushout square");

  auto* rep_cmd =
      app.add_subcommand("rep", "conjugation orbit spaces per level");
  add_common(rep_cmd, true);
  rep_cmd->add_option("--n", o.n, "top simplicial level");

  int max_size = 5, instances = 100;
  std::uint64_t seed = 12345;
  auto* irig = app.add_subcommand(
      "irig", "shuffle, block-sum and tensor diagram checks");
  add_common(irig, false);
  irig->add_option("--max-size", max_size, "largest matrix dimension");
  irig->add_option("--instances", instances, "randomized instances");
  irig->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
    if (decompose->parsed()) {
      if (o.groups.empty())
        fail(ErrorCode::ConfigError, "decompose needs at least one --group");
      return cmd_decompose(o);
    }
    if (homology_cmd->parsed()) return cmd_homology(o);
    if (cocycles->parsed()) return cmd_cocycles(o);
    if (verify->parsed()) return cmd_verify(o, cocycle_word);
    if (rep_cmd->parsed()) {
      if (o.groups.empty())
        fail(ErrorCode::ConfigError, "rep needs at least one --group");
      return cmd_rep(o);
    }
    if (irig->parsed()) return cmd_irig(o, max_size, instances, seed);
    return 3;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 3;
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what()
              << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
