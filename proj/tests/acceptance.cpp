// Acceptance suite: the closed-form spectra and structural identities the
// library must reproduce, each at its stated tolerance. Prints one line per
// criterion; exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sgs/catalog.hpp"
#include "sgs/dirichlet.hpp"
#include "sgs/dynamics.hpp"
#include "sgs/pencil.hpp"
#include "sgs/schreier.hpp"
#include "sgs/spectra.hpp"

using namespace sgs;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %d: %s%s%s (%.2fs)\n", pass ? "PASS" : "FAIL", idx,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

void criterion(int idx, const std::string& name,
               const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  try {
    detail = body();
    pass = detail.empty();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(idx, name, pass, detail, secs);
}

std::string compare_range(const std::string& group, int max_level, double tol) {
  AutomatonSpec spec = load_group(group);
  for (int n = 1; n <= max_level; ++n) {
    SpectrumReport computed = eigen_spectrum(adjacency_matrix(spec, n), n);
    SpectrumReport oracle = oracle_spectrum(group, n);
    if (oracle.min_gap() <= 10 * computed.tol)
      return "oracle cluster gap too small at level " + std::to_string(n);
    CompareReport cmp = compare_spectra(computed, oracle, tol);
    if (!cmp.pass) return "level " + std::to_string(n) + ": " + cmp.detail;
  }
  return "";
}

double interval_density(const std::vector<double>& sorted, double lo, double hi) {
  double eps = std::max(sorted.front() - lo, hi - sorted.back());
  for (size_t i = 1; i < sorted.size(); ++i)
    eps = std::max(eps, (sorted[i] - sorted[i - 1]) / 2);
  return eps;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

int main() {
  criterion(1, "grigorchuk spectra, n=1..10, tol 1e-8, within [-2,0] u [2,4]", [] {
    auto t0 = std::chrono::steady_clock::now();
    std::string err = compare_range("grigorchuk", 10, 1e-8);
    if (!err.empty()) return err;
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > 60.0) return "runtime " + std::to_string(secs) + "s exceeds 60s";
    std::vector<double> low, high;
    for (int n = 1; n <= 10; ++n) {
      SpectrumReport r = oracle_spectrum("grigorchuk", n);
      for (const auto& c : r.clusters) {
        if (c.multiplicity != 1) return std::string("multiplicity above 1");
        bool in_low = c.value >= -2 - 1e-8 && c.value <= 1e-8;
        bool in_high = c.value >= 2 - 1e-8 && c.value <= 4 + 1e-8;
        if (!in_low && !in_high)
          return "eigenvalue outside [-2,0] u [2,4]: " + std::to_string(c.value);
        (in_low ? low : high).push_back(c.value);
      }
    }
    std::sort(low.begin(), low.end());
    std::sort(high.begin(), high.end());
    if (interval_density(low, -2, 0) > 0.02 || interval_density(high, 2, 4) > 0.02)
      return std::string("union of levels not 0.02-dense in the limit spectrum");
    return std::string();
  });

  criterion(2, "hanoi spectra with multiplicities, n=1..6", [] {
    auto t0 = std::chrono::steady_clock::now();
    std::string err = compare_range("hanoi", 6, 1e-8);
    if (!err.empty()) return err;
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > 120.0) return "runtime " + std::to_string(secs) + "s exceeds 120s";
    for (int n = 1; n <= 6; ++n) {
      size_t want = static_cast<size_t>(3 * ipow(2, n - 1) - 1);
      if (oracle_spectrum("hanoi", n).clusters.size() != want)
        return "set size differs from 3*2^(n-1)-1 at level " + std::to_string(n);
    }
    return std::string();
  });

  criterion(3, "tangled spectra; eigenvalue-2 mass exactly 1/3", [] {
    std::string err = compare_range("tangled", 6, 1e-8);
    if (!err.empty()) return err;
    AutomatonSpec spec = load_group("tangled");
    Quadratic f{1, -2, -4};
    for (int n = 1; n <= 6; ++n) {
      SpectrumReport r = eigen_spectrum(adjacency_matrix(spec, n), n);
      BackwardOrbit orbit = backward_orbit(f, 2.0, n - 1);
      for (const auto& c : r.clusters) {
        if (std::abs(c.value - 4.0) <= 1e-8 && c.multiplicity != 1)
          return std::string("multiplicity of eigenvalue 4 is not 1");
        for (int i = 0; i < n; ++i)
          for (double v : orbit.generations[i])
            if (std::abs(c.value - v) <= 1e-8 && c.multiplicity != ipow(3, n - 1 - i))
              return "multiplicity of a depth-" + std::to_string(i) +
                     " point differs from 3^(n-1-i) at level " + std::to_string(n);
        if (std::abs(c.value - 2.0) <= 1e-8 && c.multiplicity * 3 != ipow(3, n))
          return std::string("KNS mass of eigenvalue 2 is not exactly 1/3");
      }
    }
    return std::string();
  });

  criterion(4, "lamplighter spectra with multiplicity formula, n=1..10", [] {
    std::string err = compare_range("lamplighter", 10, 1e-8);
    if (!err.empty()) return err;
    AutomatonSpec spec = load_group("lamplighter");
    for (int n : {6, 10}) {
      SpectrumReport r = eigen_spectrum(adjacency_matrix(spec, n), n);
      if (r.clusters.front().value < -4 - 1e-8 || r.clusters.back().value > 4 + 1e-8)
        return std::string("eigenvalue outside [-4,4]");
    }
    return std::string();
  });

  criterion(5, "dihedral Markov spectra, n=1..10", [] {
    AutomatonSpec spec = load_group("dinf");
    for (int n = 1; n <= 10; ++n) {
      Matrix markov = adjacency_matrix(spec, n) / 2.0;
      SpectrumReport computed = eigen_spectrum(markov, n);
      SpectrumReport oracle = oracle_spectrum("dinf", n);
      for (auto& c : oracle.clusters) c.value /= 2.0;  // {1} u (1/2) backward orbit
      CompareReport cmp = compare_spectra(computed, oracle, 1e-8);
      if (!cmp.pass) return "level " + std::to_string(n) + ": " + cmp.detail;
    }
    return std::string();
  });

  criterion(6, "matrix recursion equals tree action, exact", [] {
    for (const auto& id : catalog_groups()) {
      AutomatonSpec spec = load_group(id);
      int cap = spec.alphabet_size() == 2 ? 7 : 5;
      for (StateId s : spec.generators())
        for (int n = 0; n <= cap; ++n)
          if (rep_perm(spec, s, n) != action_perm(spec, s, n))
            return id + "/" + spec.state(s).name + " differ at level " + std::to_string(n);
    }
    return std::string();
  });

  criterion(7, "determinant recursions, 100 points at n=2,3,4, tol 1e-8", [] {
    Rng rng(20240817);
    for (const char* id : {"grigorchuk", "hanoi"}) {
      AutomatonSpec spec = load_group(id);
      PencilSpec pencil = load_pencil(id);
      for (int n = 2; n <= 4; ++n) {
        DetCheckReport rep = verify_det_recursion(spec, pencil, n, 100, 1e-8, rng);
        if (!rep.pass)
          return std::string(id) + " level " + std::to_string(n) + ": max rel err " +
                 std::to_string(rep.max_rel_err);
      }
    }
    return std::string();
  });

  criterion(8, "semi-conjugacies psi o F = f o psi, 10^4 samples, tol 1e-9", [] {
    Rng rng(777);
    for (const char* id : {"grigorchuk", "hanoi"}) {
      PencilSpec pencil = load_pencil(id);
      SemiconjReport rep = semiconjugacy_check(*pencil.map, 10000, 1e-9, rng);
      if (!rep.pass)
        return std::string(id) + ": max rel err " + std::to_string(rep.max_rel_err);
    }
    return std::string();
  });

  criterion(9, "coverings and spectrum inclusion along the tower", [] {
    for (const auto& id : catalog_groups()) {
      AutomatonSpec spec = load_group(id);
      int cap = spec.alphabet_size() == 2 ? 7 : 5;
      SchreierGraph prev_graph = build_level_graph(spec, 0);
      SpectrumReport prev_spec = eigen_spectrum(adjacency_matrix(spec, 0), 0);
      for (int n = 1; n <= cap; ++n) {
        SchreierGraph cur_graph = build_level_graph(spec, n);
        if (!covering_check(cur_graph, prev_graph))
          return id + ": covering fails at level " + std::to_string(n);
        SpectrumReport cur_spec = eigen_spectrum(adjacency_matrix(spec, n), n);
        for (const auto& c : prev_spec.clusters) {
          double best = 1e300;
          for (const auto& d : cur_spec.clusters)
            best = std::min(best, std::abs(c.value - d.value));
          if (best > 1e-7)
            return id + ": eigenvalue " + std::to_string(c.value) +
                   " not included at level " + std::to_string(n);
        }
        prev_graph = std::move(cur_graph);
        prev_spec = std::move(cur_spec);
      }
    }
    return std::string();
  });

  criterion(10, "dirichlet traces: basilica scaling, hanoi parameter map, variational", [] {
    AutomatonSpec basilica = load_group("basilica");
    const double alpha = (2.0 - std::sqrt(2.0)) / 2.0;
    const double beta = (std::sqrt(2.0) - 1.0) / 2.0;
    Rng rng(4242);
    for (int n = 1; n <= 4; ++n) {
      BasilicaTraceReport rep = basilica_trace_check(basilica, n, alpha, beta, 1e-9);
      if (!rep.pass)
        return "basilica mean-zero residual " + std::to_string(rep.meanzero_rel_err) +
               " at level " + std::to_string(n);
      std::map<std::string, double> w{
          {"a", alpha}, {"a^-1", alpha}, {"b", beta}, {"b^-1", beta}};
      Matrix L = laplacian_form(basilica, n + 1, w).m;
      std::int64_t block = L.rows() / 2;
      std::vector<Eigen::Index> top;
      for (std::int64_t i = 0; i < block; ++i) top.push_back(block + i);
      VariationalReport var =
          variational_check(L, make_partition(top, L.rows()), 10, 1e-9, rng);
      if (!var.pass)
        return "basilica variational check fails at level " + std::to_string(n);
    }
    AutomatonSpec hanoi = load_group("hanoi");
    for (int n = 0; n <= 3; ++n) {
      for (int t = 0; t < 20; ++t) {
        double x = rng.uniform(0.0, 5.0), y = rng.uniform(0.0, 5.0);
        if (x < 1e-3) x += 1e-3;  // (0,5] box
        if (y < 1e-3) y += 1e-3;
        HanoiTraceReport rep = hanoi_trace_check(hanoi, n, x, y, 1e-8);
        if (!rep.pass)
          return "hanoi trace residual " + std::to_string(rep.rel_err) + " at level " +
                 std::to_string(n);
      }
      Matrix M = hanoi_form(hanoi, n + 1, 1.0, 2.0).m;
      std::int64_t big = M.rows() / 3, small = big / 3;
      std::vector<Eigen::Index> top;
      for (int i = 0; i < 3; ++i) {
        Letter keep = self_section_letter(hanoi, hanoi.generators()[i]);
        for (std::int64_t v = 0; v < small; ++v) top.push_back(i * big + keep * small + v);
      }
      VariationalReport var =
          variational_check(M, make_partition(top, M.rows()), 10, 1e-9, rng);
      if (!var.pass) return "hanoi variational check fails at level " + std::to_string(n);
    }
    return std::string();
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "SUCCESS" : "FAILURE",
              failures);
  return failures == 0 ? 0 : 1;
}
