// Command-line front end: group catalog, Schreier graph export, spectra with
// oracle verification, invariant suites, and dynamics sampling.
#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgs/catalog.hpp"
#include "sgs/dirichlet.hpp"
#include "sgs/dynamics.hpp"
#include "sgs/io_util.hpp"
#include "sgs/pencil.hpp"
#include "sgs/ray.hpp"
#include "sgs/schreier.hpp"
#include "sgs/spectra.hpp"

namespace {

using nlohmann::json;
using namespace sgs;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    atomic_write(out_path, content);
}

// group/pencil resolution failures are configuration errors
AutomatonSpec load_group_cli(const std::string& id, const std::string& dir) {
  try {
    return load_group(id, dir);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

int graph_cap(int k) { return k == 2 ? 13 : 8; }
int eigen_cap(int k) { return k == 2 ? 12 : 7; }

void check_level(int n, int cap, const std::string& what) {
  if (n < 0 || n > cap)
    throw UsageError(what + " level " + std::to_string(n) + " outside supported range 0.." +
                     std::to_string(cap));
}

json spectrum_json(const std::string& group, const SpectrumReport& rep,
                   const KnsMeasure& kns, double runtime_s) {
  json j;
  j["group"] = group;
  j["level"] = rep.level;
  j["dimension"] = rep.dimension;
  j["tolerance"] = rep.tol;
  j["runtime_seconds"] = runtime_s;
  j["clusters"] = json::array();
  for (size_t i = 0; i < rep.clusters.size(); ++i) {
    j["clusters"].push_back({{"eigenvalue", rep.clusters[i].value},
                             {"multiplicity", rep.clusters[i].multiplicity},
                             {"kns_mass", kns.atoms[i].mass}});
  }
  return j;
}

std::string spectrum_csv(const SpectrumReport& rep, const KnsMeasure& kns) {
  std::ostringstream os;
  os << "eigenvalue,multiplicity,kns_mass\n";
  for (size_t i = 0; i < rep.clusters.size(); ++i)
    os << fmt_double(rep.clusters[i].value) << ',' << rep.clusters[i].multiplicity << ','
       << fmt_double(kns.atoms[i].mass) << '\n';
  return os.str();
}

int cmd_spectrum(const std::string& group, int level, bool verify,
                 const std::string& format, const std::string& out,
                 double tol, const std::string& catalog) {
  AutomatonSpec spec = load_group_cli(group, catalog);
  check_level(level, eigen_cap(spec.alphabet_size()), "eigensolve");
  auto t0 = std::chrono::steady_clock::now();
  SpectrumReport rep = eigen_spectrum(adjacency_matrix(spec, level), level);
  double runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  KnsMeasure kns = kns_counting(rep);

  bool pass = true;
  std::string verdict;
  if (verify) {
    if (!has_oracle(group))
      throw UsageError("--verify requested but no closed-form oracle exists for '" + group + "'");
    if (level < 1) throw UsageError("--verify requires level >= 1");
    CompareReport cmp = compare_spectra(rep, oracle_spectrum(group, level), tol);
    pass = cmp.pass;
    verdict = cmp.pass ? "pass" : ("fail: " + cmp.detail);
  }

  if (format == "json") {
    json j = spectrum_json(group, rep, kns, runtime);
    if (verify) j["verify"] = verdict;
    emit(out, j.dump(1) + "\n");
  } else {
    emit(out, spectrum_csv(rep, kns));
    if (verify) std::cerr << "verify: " << verdict << "\n";
  }
  return pass ? 0 : kExitFail;
}

int cmd_graph(const std::string& group, int level, const std::string& format,
              const std::string& out, const std::string& catalog) {
  AutomatonSpec spec = load_group_cli(group, catalog);
  check_level(level, graph_cap(spec.alphabet_size()), "graph");
  SchreierGraph g = build_level_graph(spec, level);
  emit(out, format == "dot" ? export_dot(spec, g) : export_csv(g));
  return 0;
}

int cmd_dynamics(const std::string& map_name, double seed_1d, int depth,
                 const std::string& julia_name, long points, std::uint64_t rng_seed,
                 const std::string& semiconj_group, int samples, double tol,
                 const std::string& out, const std::string& catalog,
                 std::optional<double> seed_re, std::optional<double> seed_im) {
  int chosen = (!map_name.empty()) + (!julia_name.empty()) + (!semiconj_group.empty());
  if (chosen != 1)
    throw UsageError("choose exactly one of --map, --julia, --semiconj");

  if (!map_name.empty()) {
    Quadratic f;
    if (map_name == "grigorchuk-f" || map_name == "dinf-f") f = {1, 0, -2};
    else if (map_name == "hanoi-f") f = {1, -1, -3};
    else if (map_name == "tangled-f") f = {1, -2, -4};
    else throw UsageError("unknown 1-d map '" + map_name +
                          "' (grigorchuk-f, hanoi-f, tangled-f, dinf-f)");
    BackwardOrbit orb = backward_orbit(f, seed_1d, depth);
    std::ostringstream os;
    os << "generation,value\n";
    for (int g = 0; g <= orb.depth; ++g)
      for (double v : orb.generations[g]) os << g << ',' << fmt_double(v) << '\n';
    emit(out, os.str());
    return 0;
  }
  if (!julia_name.empty()) {
    ComplexMap m = complex_map_by_name(julia_name);
    std::complex<double> z0 = complex_map_default_seed(m);
    if (seed_re) z0.real(*seed_re);
    if (seed_im) z0.imag(*seed_im);
    Rng rng(rng_seed);
    auto cloud = complex_backward_cloud(m, z0, points + 64, points, rng);
    std::ostringstream os;
    os << "# rng=mt19937_64 seed=" << rng_seed << "\n" << "re,im\n";
    for (const auto& z : cloud)
      os << fmt_double(z.real()) << ',' << fmt_double(z.imag()) << '\n';
    emit(out, os.str());
    return 0;
  }
  PencilSpec pencil;
  try {
    pencil = load_pencil(semiconj_group, catalog);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  if (!pencil.map) throw UsageError("group '" + semiconj_group + "' has no (F, psi, f) data");
  Rng rng(rng_seed);
  SemiconjReport rep = semiconjugacy_check(*pencil.map, samples, tol, rng);
  json j;
  j["group"] = semiconj_group;
  j["rng"] = {{"name", "mt19937_64"}, {"seed", rng_seed}};
  j["samples"] = rep.samples;
  j["resampled"] = rep.resampled;
  j["max_rel_err"] = rep.max_rel_err;
  j["tolerance"] = tol;
  j["pass"] = rep.pass;
  emit(out, j.dump(1) + "\n");
  return rep.pass ? 0 : kExitFail;
}

// ---- verify: the per-group invariant battery ----

struct CheckOutcome {
  std::string name;
  bool pass;
  double seconds;
  std::string detail;
};

class Battery {
 public:
  Battery(std::string broken, std::uint64_t seed) : broken_(std::move(broken)), seed_(seed) {}

  template <typename F>
  void run(const std::string& name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckOutcome oc{name, true, 0, ""};
    bool broken = !broken_.empty() && name.rfind(broken_, 0) == 0;
    try {
      std::string detail = body(broken);
      if (detail.rfind("FAIL ", 0) == 0) {
        oc.pass = false;
        oc.detail = detail.substr(5);
      }
    } catch (const std::exception& e) {
      oc.pass = false;
      oc.detail = e.what();
    }
    oc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    outcomes_.push_back(std::move(oc));
  }

  bool all_pass() const {
    for (const auto& oc : outcomes_) if (!oc.pass) return false;
    return true;
  }
  const std::vector<CheckOutcome>& outcomes() const { return outcomes_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::string broken_;
  std::uint64_t seed_;
  std::vector<CheckOutcome> outcomes_;
};

std::string fail(const std::string& msg) { return "FAIL " + msg; }

int cmd_verify(const std::string& group, int max_level, const std::string& break_check,
               std::uint64_t rng_seed, const std::string& out, const std::string& catalog) {
  AutomatonSpec spec = load_group_cli(group, catalog);
  const int k = spec.alphabet_size();
  const int nrep = std::min(max_level, k == 2 ? 7 : 5);
  const int neig = std::min(max_level, eigen_cap(k));
  Battery bat(break_check, rng_seed);

  bat.run("rep-equality", [&](bool) -> std::string {
    for (StateId s : spec.generators())
      for (int n = 0; n <= nrep; ++n)
        if (rep_perm(spec, s, n) != action_perm(spec, s, n))
          return fail("recursion != action for " + spec.state(s).name + " at level " +
                      std::to_string(n));
    return "";
  });

  bat.run("covering", [&](bool) -> std::string {
    SchreierGraph prev = build_level_graph(spec, 0);
    for (int n = 1; n <= nrep; ++n) {
      SchreierGraph cur = build_level_graph(spec, n);
      if (!covering_check(cur, prev))
        return fail("covering fails between levels " + std::to_string(n) + " and " +
                    std::to_string(n - 1));
      prev = std::move(cur);
    }
    return "";
  });

  bat.run("transitivity-connectivity", [&](bool) -> std::string {
    for (int n = 0; n <= std::min(max_level, 6); ++n) {
      SchreierGraph g = build_level_graph(spec, n);
      // undirected reachability from vertex 0
      std::vector<std::vector<std::int64_t>> adj(g.vertex_count);
      for (const auto& e : g.edges) {
        adj[e.src].push_back(e.dst);
        adj[e.dst].push_back(e.src);
      }
      std::vector<char> seen(g.vertex_count, 0);
      std::vector<std::int64_t> stack{0};
      seen[0] = 1;
      std::int64_t count = 1;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
          if (!seen[w]) { seen[w] = 1; ++count; stack.push_back(w); }
      }
      bool connected = count == g.vertex_count;
      if (spec.is_level_transitive(n) != connected)
        return fail("transitivity and connectivity disagree at level " + std::to_string(n));
    }
    return "";
  });

  bool contracting_expected = group == "odometer" || group == "grigorchuk" ||
                              group == "basilica" || group == "hanoi" || group == "tangled";
  if (contracting_expected) {
    bat.run("contracting", [&](bool) -> std::string {
      for (int radius = 1; radius <= 3; ++radius) {
        NucleusResult res = check_contracting(spec, radius);
        if (!res.ok) continue;
        bool has_id = false;
        for (const auto& w : res.nucleus)
          if (spec.words_equal(w, {})) has_id = true;
        if (!has_id) return fail("nucleus does not contain the identity");
        for (const auto& w : res.nucleus)
          for (Letter x = 0; x < k; ++x) {
            GroupWord s = spec.section(w, {x});
            bool found = false;
            for (const auto& c : res.nucleus)
              if (spec.words_equal(c, s)) found = true;
            if (!found) return fail("nucleus is not section-closed");
          }
        return "";
      }
      return fail("no nucleus found at radius <= 3");
    });
  }

  if (has_oracle(group)) {
    bat.run("oracle-spectrum", [&](bool broken) -> std::string {
      for (int n = 1; n <= neig; ++n) {
        SpectrumReport oracle = oracle_spectrum(group, n);
        SpectrumReport computed = eigen_spectrum(adjacency_matrix(spec, n), n);
        if (oracle.min_gap() <= 10 * computed.tol)
          return fail("oracle gap too small for clustering at level " + std::to_string(n));
        if (broken && !oracle.clusters.empty()) oracle.clusters.front().value += 1e-3;
        CompareReport cmp = compare_spectra(computed, oracle, 1e-8);
        if (!cmp.pass) return fail("level " + std::to_string(n) + ": " + cmp.detail);
      }
      return "";
    });

    bat.run("kns-counting", [&](bool) -> std::string {
      for (int n = 1; n <= neig; ++n) {
        KnsMeasure m = kns_counting(eigen_spectrum(adjacency_matrix(spec, n), n));
        double total = 0;
        for (const auto& a : m.atoms) total += a.mass;
        if (std::abs(total - 1.0) > 1e-12)
          return fail("masses sum to " + fmt_double(total) + " at level " + std::to_string(n));
      }
      return "";
    });
  }

  bat.run("spectrum-inclusion", [&](bool) -> std::string {
    SpectrumReport prev = eigen_spectrum(adjacency_matrix(spec, 0), 0);
    for (int n = 1; n <= neig; ++n) {
      SpectrumReport cur = eigen_spectrum(adjacency_matrix(spec, n), n);
      for (const auto& c : prev.clusters) {
        double best = 1e300;
        for (const auto& d : cur.clusters) best = std::min(best, std::abs(c.value - d.value));
        if (best > 1e-7)
          return fail("eigenvalue " + fmt_double(c.value) + " of level " +
                      std::to_string(n - 1) + " missing at level " + std::to_string(n));
      }
      prev = std::move(cur);
    }
    return "";
  });

  bool have_pencil = true;
  PencilSpec pencil;
  try {
    pencil = load_pencil(group, catalog);
  } catch (const std::exception&) {
    have_pencil = false;
  }
  if (have_pencil) {
    bat.run("pencil-restriction", [&](bool) -> std::string {
      Rng rng(bat.seed());
      for (int n = 1; n <= std::min(max_level, 4); ++n) {
        Matrix a = adjacency_matrix(spec, n);
        for (int t = 0; t < 3; ++t) {
          double lambda = rng.uniform(-3, 3);
          Matrix p = assemble_pencil(spec, pencil, n, restriction_params(pencil, lambda));
          Matrix expect = a - lambda * Matrix::Identity(a.rows(), a.cols());
          if ((p - expect).cwiseAbs().maxCoeff() > 1e-12)
            return fail("pencil restriction differs from A - lambda I at level " +
                        std::to_string(n));
        }
      }
      return "";
    });
  }
  if (have_pencil && pencil.det_recursion) {
    bat.run("det-recursion", [&](bool broken) -> std::string {
      PencilSpec local = pencil;
      if (broken && !local.det_recursion->factors.empty())
        local.det_recursion->factors[0].poly.monos[0].coeff *= 1.0 + 1e-3;
      Rng rng(bat.seed());
      for (int n = 2; n <= std::min(max_level, 4); ++n) {
        DetCheckReport rep = verify_det_recursion(spec, local, n, 100, 1e-8, rng);
        if (!rep.pass)
          return fail("max rel err " + fmt_double(rep.max_rel_err) + " at level " +
                      std::to_string(n));
      }
      return "";
    });
  }
  if (have_pencil && pencil.map) {
    bat.run("semiconjugacy", [&](bool broken) -> std::string {
      RationalMapSpec map = *pencil.map;
      if (broken) map.f[2] += 1e-3;
      Rng rng(bat.seed());
      SemiconjReport rep = semiconjugacy_check(map, 10000, 1e-9, rng);
      if (!rep.pass) return fail("max rel err " + fmt_double(rep.max_rel_err));
      return "";
    });
  }

  if (group == "basilica") {
    bat.run("dirichlet-trace", [&](bool broken) -> std::string {
      const double alpha = (2.0 - std::sqrt(2.0)) / 2.0;
      const double beta = (std::sqrt(2.0) - 1.0) / 2.0;
      for (int n = 1; n <= std::min(max_level, 4); ++n) {
        BasilicaTraceReport rep =
            basilica_trace_check(spec, n, broken ? 0.25 : alpha, broken ? 0.25 : beta, 1e-9);
        if (!rep.pass)
          return fail("mean-zero residual " + fmt_double(rep.meanzero_rel_err) +
                      " at level " + std::to_string(n));
      }
      return "";
    });
    bat.run("dirichlet-variational", [&](bool) -> std::string {
      const double alpha = (2.0 - std::sqrt(2.0)) / 2.0;
      const double beta = (std::sqrt(2.0) - 1.0) / 2.0;
      Rng rng(bat.seed());
      for (int n = 1; n <= std::min(max_level, 4); ++n) {
        std::map<std::string, double> w{
            {"a", alpha}, {"a^-1", alpha}, {"b", beta}, {"b^-1", beta}};
        Matrix L = laplacian_form(spec, n + 1, w).m;
        std::int64_t block = L.rows() / 2;
        std::vector<Eigen::Index> top;
        for (std::int64_t i = 0; i < block; ++i) top.push_back(block + i);
        VariationalReport rep =
            variational_check(L, make_partition(top, L.rows()), 10, 1e-9, rng);
        if (!rep.pass) return fail("variational identity fails at level " + std::to_string(n));
      }
      return "";
    });
  }
  if (group == "hanoi") {
    bat.run("dirichlet-trace", [&](bool broken) -> std::string {
      Rng rng(bat.seed());
      for (int n = 0; n <= std::min(max_level - 1, 3); ++n) {
        for (int t = 0; t < 20; ++t) {
          double x = rng.uniform(0.01, 5.0), y = rng.uniform(0.01, 5.0);
          HanoiTraceReport rep = hanoi_trace_check(spec, n, x, y, 1e-8);
          if (broken) {
            Matrix wrong = hanoi_form(spec, n, rep.x_mapped * (1 + 1e-3), y).m;
            Matrix right = hanoi_form(spec, n, rep.x_mapped, y).m;
            rep.rel_err += (wrong - right).norm() / std::max(1.0, right.norm());
            rep.pass = rep.rel_err <= 1e-8;
          }
          if (!rep.pass)
            return fail("residual " + fmt_double(rep.rel_err) + " at level " +
                        std::to_string(n));
        }
      }
      return "";
    });
    bat.run("dirichlet-variational", [&](bool) -> std::string {
      Rng rng(bat.seed());
      for (int n = 0; n <= std::min(max_level - 1, 2); ++n) {
        Matrix M = hanoi_form(spec, n + 1, 1.0, 2.0).m;
        std::int64_t big = M.rows() / 3, small = big / 3;
        std::vector<Eigen::Index> top;
        for (int i = 0; i < 3; ++i) {
          Letter keep = self_section_letter(spec, spec.generators()[i]);
          for (std::int64_t v = 0; v < small; ++v) top.push_back(i * big + keep * small + v);
        }
        VariationalReport rep =
            variational_check(M, make_partition(top, M.rows()), 10, 1e-9, rng);
        if (!rep.pass) return fail("variational identity fails at level " + std::to_string(n));
      }
      return "";
    });
  }

  json j;
  j["group"] = group;
  j["max_level"] = max_level;
  j["rng"] = {{"name", "mt19937_64"}, {"seed", rng_seed}};
  if (!break_check.empty()) j["break"] = break_check;
  j["checks"] = json::array();
  for (const auto& oc : bat.outcomes()) {
    j["checks"].push_back({{"name", oc.name},
                           {"pass", oc.pass},
                           {"seconds", oc.seconds},
                           {"detail", oc.detail}});
    std::cerr << (oc.pass ? "[PASS] " : "[FAIL] ") << oc.name
              << (oc.detail.empty() ? "" : ": " + oc.detail) << "\n";
  }
  j["all_pass"] = bat.all_pass();
  emit(out, j.dump(1) + "\n");
  return bat.all_pass() ? 0 : kExitFail;
}

int cmd_catalog(const std::string& catalog) {
  for (const auto& g : catalog_groups(catalog)) {
    AutomatonSpec spec = load_group_cli(g, catalog);
    std::cout << g << "  (alphabet " << spec.alphabet_size() << ", |S|="
              << spec.generators().size() << (has_oracle(g) ? ", oracle" : "") << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier-graph spectra of self-similar groups"};
  app.require_subcommand(1);
  std::string catalog;
  app.add_option("--catalog", catalog, "catalog directory (default: SPECTRA_CATALOG_DIR)");

  auto* sc_catalog = app.add_subcommand("catalog", "list catalog groups");

  auto* sc_graph = app.add_subcommand("graph", "export a level Schreier graph (csv columns: source,label,target)");
  std::string g_group, g_format = "csv", g_out;
  int g_level = 1;
  sc_graph->add_option("--group", g_group, "catalog group id")->required();
  sc_graph->add_option("--level", g_level, "tree level n")->required();
  sc_graph->add_option("--format", g_format, "dot|csv (default csv)")
      ->check(CLI::IsMember({"dot", "csv"}));
  sc_graph->add_option("--out", g_out, "output file (default stdout)");

  auto* sc_spec = app.add_subcommand("spectrum", "adjacency spectrum of a level (csv columns: eigenvalue,multiplicity,kns_mass)");
  std::string s_group, s_format = "csv", s_out;
  int s_level = 1;
  bool s_verify = false;
  double s_tol = 1e-8;
  sc_spec->add_option("--group", s_group, "catalog group id")->required();
  sc_spec->add_option("--level", s_level, "tree level n")->required();
  sc_spec->add_flag("--verify", s_verify, "compare against the closed-form oracle");
  sc_spec->add_option("--format", s_format, "csv|json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  sc_spec->add_option("--tol", s_tol, "verification tolerance (default 1e-8)");
  sc_spec->add_option("--out", s_out, "output file (default stdout)");

  auto* sc_verify = app.add_subcommand("verify", "run the invariant battery for a group");
  std::string v_group, v_break, v_out;
  int v_max_level = 5;
  std::uint64_t v_seed = 12345;
  sc_verify->add_option("--group", v_group, "catalog group id")->required();
  sc_verify->add_option("--max-level", v_max_level, "largest level to test")->required();
  sc_verify->add_option("--break", v_break, "test hook: perturb the named check");
  sc_verify->add_option("--rng", v_seed, "random seed (default 12345)");
  sc_verify->add_option("--out", v_out, "JSON summary file (default stdout)");

  auto* sc_dyn = app.add_subcommand("dynamics", "backward orbits, Julia clouds, semiconjugacy");
  std::string d_map, d_julia, d_semiconj, d_out;
  double d_seed = 0.0, d_tol = 1e-9;
  int d_depth = 6, d_samples = 10000;
  long d_points = 100000;
  std::uint64_t d_rng = 12345;
  std::optional<double> d_re, d_im;
  sc_dyn->add_option("--map", d_map, "1-d backward orbit with csv columns generation,value: grigorchuk-f|hanoi-f|tangled-f|dinf-f");
  sc_dyn->add_option("--seed", d_seed, "backward orbit seed value (default 0)");
  sc_dyn->add_option("--depth", d_depth, "backward orbit depth (default 6)");
  sc_dyn->add_option("--julia", d_julia, "complex cloud with csv columns re,im: basilica|tangled|hanoi|z2|z2m2");
  sc_dyn->add_option("--points", d_points, "cloud point cap (default 100000)");
  sc_dyn->add_option("--re", d_re, "cloud seed real part (default: repelling fixed point)");
  sc_dyn->add_option("--im", d_im, "cloud seed imaginary part");
  sc_dyn->add_option("--semiconj", d_semiconj, "semi-conjugacy check: grigorchuk|hanoi");
  sc_dyn->add_option("--samples", d_samples, "semiconjugacy samples (default 10000)");
  sc_dyn->add_option("--tol", d_tol, "semiconjugacy tolerance (default 1e-9)");
  sc_dyn->add_option("--rng", d_rng, "random seed (default 12345)");
  sc_dyn->add_option("--out", d_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sc_catalog->parsed()) return cmd_catalog(catalog);
    if (sc_graph->parsed()) return cmd_graph(g_group, g_level, g_format, g_out, catalog);
    if (sc_spec->parsed())
      return cmd_spectrum(s_group, s_level, s_verify, s_format, s_out, s_tol, catalog);
    if (sc_verify->parsed())
      return cmd_verify(v_group, v_max_level, v_break, v_seed, v_out, catalog);
    if (sc_dyn->parsed())
      return cmd_dynamics(d_map, d_seed, d_depth, d_julia, d_points, d_rng, d_semiconj,
                          d_samples, d_tol, d_out, catalog, d_re, d_im);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
