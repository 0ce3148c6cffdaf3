#include "sgs/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sgs/dynamics.hpp"
#include "sgs/io_util.hpp"

namespace sgs {

std::int64_t SpectrumReport::multiplicity_sum() const {
  return std::accumulate(clusters.begin(), clusters.end(), std::int64_t{0},
                         [](std::int64_t a, const Cluster& c) { return a + c.multiplicity; });
}

double SpectrumReport::min_gap() const {
  double g = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < clusters.size(); ++i)
    g = std::min(g, clusters[i].value - clusters[i - 1].value);
  return g;
}

SpectrumReport eigen_spectrum(const Matrix& m, int level, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, norm))
    throw std::invalid_argument("eigen_spectrum requires a symmetric matrix");
  if (tol <= 0) tol = 1e-8 * std::max(1.0, norm);

  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver failed to converge");
  const auto& ev = solver.eigenvalues();  // ascending

  SpectrumReport rep;
  rep.level = level;
  rep.dimension = m.rows();
  rep.tol = tol;
  Eigen::Index i = 0;
  while (i < ev.size()) {
    Eigen::Index j = i + 1;
    while (j < ev.size() && ev(j) - ev(j - 1) <= tol) ++j;
    double mean = 0;
    for (Eigen::Index t = i; t < j; ++t) mean += ev(t);
    rep.clusters.push_back({mean / static_cast<double>(j - i), j - i});
    i = j;
  }
  return rep;
}

namespace {

void add_cluster(std::vector<Cluster>& cs, double v, long mult) {
  cs.push_back({v, mult});
}

SpectrumReport finish_report(std::vector<Cluster> cs, int n, std::int64_t dim) {
  std::sort(cs.begin(), cs.end(),
            [](const Cluster& a, const Cluster& b) { return a.value < b.value; });
  SpectrumReport rep;
  rep.level = n;
  rep.dimension = dim;
  rep.tol = 0;
  rep.clusters = std::move(cs);
  return rep;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

SpectrumReport oracle_grigorchuk(int n) {
  // {1 +- sqrt(5 + 4 cos(2 k pi / 2^n))} minus {-2, 0}; all multiplicities 1.
  // -2 appears only at k = 0 and 0 only at k = 2^(n-1), both on the minus branch.
  std::vector<Cluster> cs;
  const std::int64_t half = ipow(2, n - 1);
  for (std::int64_t k = 0; k <= half; ++k) {
    double c = std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                        static_cast<double>(2 * half));
    double r = std::sqrt(5.0 + 4.0 * c);
    if (k != 0 && k != half) add_cluster(cs, 1.0 - r, 1);
    add_cluster(cs, 1.0 + r, 1);
  }
  return finish_report(std::move(cs), n, ipow(2, n));
}

SpectrumReport oracle_hanoi(int n) {
  std::vector<Cluster> cs;
  add_cluster(cs, 3.0, 1);
  const Quadratic f{1, -1, -3};
  auto a = [](int m) { return (ipow(3, m - 1) + 3) / 2; };
  auto b = [](int m) { return (ipow(3, m - 1) - 1) / 2; };
  BackwardOrbit from0 = backward_orbit(f, 0.0, n - 1);
  for (int i = 0; i < n; ++i)
    for (double v : from0.generations[i]) add_cluster(cs, v, a(n - i));
  if (n >= 2) {
    BackwardOrbit from2 = backward_orbit(f, -2.0, n - 2);
    for (int j = 0; j <= n - 2; ++j)
      for (double v : from2.generations[j]) add_cluster(cs, v, b(n - j));
  }
  return finish_report(std::move(cs), n, ipow(3, n));
}

SpectrumReport oracle_tangled(int n) {
  std::vector<Cluster> cs;
  add_cluster(cs, 4.0, 1);
  const Quadratic f{1, -2, -4};
  BackwardOrbit from2 = backward_orbit(f, 2.0, n - 1);
  BackwardOrbit fromm2 = backward_orbit(f, -2.0, n - 1);
  for (int i = 0; i < n; ++i) {
    for (double v : from2.generations[i]) add_cluster(cs, v, ipow(3, n - 1 - i));
    for (double v : fromm2.generations[i]) add_cluster(cs, v, 1);
  }
  return finish_report(std::move(cs), n, ipow(3, n));
}

SpectrumReport oracle_lamplighter(int n) {
  std::vector<Cluster> cs;
  add_cluster(cs, 4.0, 1);
  for (int q = 2; q <= n + 1; ++q) {
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      std::int64_t mult = (ipow(2, n) - ipow(2, n % q)) / (ipow(2, q) - 1) +
                          ((n + 1) % q == 0 ? 1 : 0);
      add_cluster(cs, 4.0 * std::cos(std::numbers::pi * p / q), mult);
    }
  }
  return finish_report(std::move(cs), n, ipow(2, n));
}

SpectrumReport oracle_dinf(int n) {
  // adjacency spectrum = 2 * Markov spectrum = {2} + backward orbit of 0 under x^2-2
  std::vector<Cluster> cs;
  add_cluster(cs, 2.0, 1);
  const Quadratic f{1, 0, -2};
  BackwardOrbit orb = backward_orbit(f, 0.0, n - 1);
  for (int i = 0; i < n; ++i)
    for (double v : orb.generations[i]) add_cluster(cs, v, 1);
  return finish_report(std::move(cs), n, ipow(2, n));
}

}  // namespace

bool has_oracle(const std::string& group) {
  return group == "grigorchuk" || group == "hanoi" || group == "tangled" ||
         group == "lamplighter" || group == "dinf";
}

SpectrumReport oracle_spectrum(const std::string& group, int n) {
  if (n < 1) throw std::invalid_argument("oracle spectra are stated for levels >= 1");
  if (n > 24) throw std::invalid_argument("oracle level too large");
  if (group == "grigorchuk") return oracle_grigorchuk(n);
  if (group == "hanoi") return oracle_hanoi(n);
  if (group == "tangled") return oracle_tangled(n);
  if (group == "lamplighter") return oracle_lamplighter(n);
  if (group == "dinf") return oracle_dinf(n);
  throw std::invalid_argument("no spectrum oracle for group '" + group + "'");
}

CompareReport compare_spectra(const SpectrumReport& computed,
                              const SpectrumReport& oracle, double tol) {
  CompareReport rep;
  if (computed.dimension != oracle.dimension)
    throw std::invalid_argument("spectrum dimension mismatch");
  if (computed.clusters.size() != oracle.clusters.size()) {
    rep.detail = "cluster count " + std::to_string(computed.clusters.size()) +
                 " != oracle " + std::to_string(oracle.clusters.size());
    return rep;
  }
  for (size_t i = 0; i < oracle.clusters.size(); ++i) {
    double err = std::abs(computed.clusters[i].value - oracle.clusters[i].value);
    rep.max_value_err = std::max(rep.max_value_err, err);
    if (err > tol) {
      rep.detail = "eigenvalue " + fmt_double(computed.clusters[i].value) +
                   " off oracle " + fmt_double(oracle.clusters[i].value);
      return rep;
    }
    if (computed.clusters[i].multiplicity != oracle.clusters[i].multiplicity) {
      rep.detail = "multiplicity of " + fmt_double(oracle.clusters[i].value) + " is " +
                   std::to_string(computed.clusters[i].multiplicity) + ", oracle says " +
                   std::to_string(oracle.clusters[i].multiplicity);
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

KnsMeasure kns_counting(const SpectrumReport& report) {
  KnsMeasure m;
  for (const auto& c : report.clusters)
    m.atoms.push_back({c.value, static_cast<double>(c.multiplicity) /
                                    static_cast<double>(report.dimension)});
  return m;
}

double kns_limit(const std::string& group, int depth, double root) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  if (group == "hanoi") {
    if (root != 0.0 && root != -2.0)
      throw std::invalid_argument("hanoi KNS classes have roots 0 and -2");
    return 1.0 / (2.0 * static_cast<double>(ipow(3, depth + 1)));
  }
  if (group == "tangled") {
    if (root == 2.0) return 1.0 / static_cast<double>(ipow(3, depth + 1));
    if (root == -2.0) return 0.0;  // multiplicity-1 branch vanishes in the limit
    throw std::invalid_argument("tangled KNS classes have roots 2 and -2");
  }
  if (group == "lamplighter") {
    // class of the eigenvalue 4cos(p pi/q); recover q from the value
    for (int q = 2; q <= 64; ++q)
      for (int p = 1; p < q; ++p)
        if (std::gcd(p, q) == 1 &&
            std::abs(4.0 * std::cos(std::numbers::pi * p / q) - root) <= 1e-9)
          return 1.0 / static_cast<double>(ipow(2, q) - 1);
    throw std::invalid_argument("eigenvalue is not of the form 4cos(p pi/q), q <= 64");
  }
  throw std::invalid_argument("no KNS limit formula for group '" + group + "'");
}

}  // namespace sgs
