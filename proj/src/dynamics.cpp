#include "sgs/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgs {

std::vector<double> Quadratic::preimages(double t) const {
  if (c2 == 0) throw std::invalid_argument("not a quadratic");
  double disc = c1 * c1 - 4 * c2 * (c0 - t);
  if (disc < 0) return {};
  double r = std::sqrt(disc);
  // stable variant: compute the larger-magnitude root first
  double q = -0.5 * (c1 + (c1 >= 0 ? r : -r));
  double x1 = q / c2;
  double x2 = (q != 0) ? (c0 - t) / q : -c1 / c2 - x1;
  if (x1 > x2) std::swap(x1, x2);
  return {x1, x2};
}

BackwardOrbit backward_orbit(const Quadratic& f, double seed, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  BackwardOrbit orb;
  orb.seed = seed;
  orb.depth = depth;
  orb.generations.push_back({seed});
  for (int g = 0; g < depth; ++g) {
    std::vector<double> next;
    for (double t : orb.generations.back()) {
      auto pre = f.preimages(t);
      if (pre.empty()) ++orb.complex_dropped;
      next.insert(next.end(), pre.begin(), pre.end());
    }
    std::sort(next.begin(), next.end());
    std::vector<double> dedup;
    for (double v : next)
      if (dedup.empty() || v - dedup.back() > 1e-12) dedup.push_back(v);
    orb.generations.push_back(std::move(dedup));
  }
  return orb;
}

SemiconjReport semiconjugacy_check(const RationalMapSpec& map, int samples,
                                   double tol, Rng& rng, double box,
                                   double pole_eps) {
  SemiconjReport rep;
  rep.samples = samples;
  std::vector<double> pt(map.dim);
  for (int i = 0; i < samples; ++i) {
    for (;;) {
      for (int d = 0; d < map.dim; ++d) pt[d] = rng.uniform(-box, box);
      if (map.min_denominator(pt) < pole_eps) {
        ++rep.resampled;
        continue;
      }
      std::vector<double> img = map.apply(pt);
      if (std::abs(map.psi.den.eval(img)) < pole_eps) {
        ++rep.resampled;
        continue;
      }
      double lhs = map.psi.eval(img);
      double rhs = map.f_eval(map.psi.eval(pt));
      double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
      rep.max_rel_err = std::max(rep.max_rel_err, err);
      break;
    }
  }
  rep.pass = rep.max_rel_err <= tol;
  return rep;
}

Julia1d julia_approx_1d(const Quadratic& f, double seed, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  BackwardOrbit orb = backward_orbit(f, seed, depth);
  Julia1d out;
  for (const auto& gen : orb.generations)
    out.isolated.insert(out.isolated.end(), gen.begin(), gen.end());
  std::sort(out.isolated.begin(), out.isolated.end());
  const auto& a = orb.generations[depth - 1];
  const auto& b = orb.generations[depth];
  out.closure_sample.reserve(a.size() + b.size());
  out.closure_sample.insert(out.closure_sample.end(), a.begin(), a.end());
  out.closure_sample.insert(out.closure_sample.end(), b.begin(), b.end());
  std::sort(out.closure_sample.begin(), out.closure_sample.end());
  return out;
}

namespace {

using cplx = std::complex<double>;

// roots of t^3 + p t + q = 0 (complex Cardano; the three cube roots of one
// branch of u^3 = -q/2 + sqrt((q/2)^2 + (p/3)^3) give all roots as u - p/3u)
std::vector<cplx> cubic_roots(cplx p, cplx q) {
  const cplx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  cplx w = -q / 2.0 + disc;
  if (std::abs(w) < 1e-300) w = -q / 2.0 - disc;
  std::vector<cplx> roots;
  if (std::abs(w) < 1e-300) {  // p = q = 0
    roots.assign(3, cplx{0, 0});
    return roots;
  }
  const cplx u0 = std::pow(w, 1.0 / 3.0);
  const double c = -0.5, s = std::sqrt(3.0) / 2.0;
  const cplx omega[3] = {{1, 0}, {c, s}, {c, -s}};
  for (int j = 0; j < 3; ++j) {
    cplx u = u0 * omega[j];
    roots.push_back(u - p / (3.0 * u));
  }
  return roots;
}

}  // namespace

ComplexMap complex_map_by_name(const std::string& name) {
  if (name == "z2") return ComplexMap::Square;
  if (name == "z2m2") return ComplexMap::SquareMinus2;
  if (name == "basilica") return ComplexMap::Basilica;
  if (name == "tangled") return ComplexMap::TangledCubic;
  if (name == "hanoi") return ComplexMap::HanoiRational;
  throw std::invalid_argument("unknown complex map: " + name);
}

cplx complex_map_eval(ComplexMap m, cplx z) {
  switch (m) {
    case ComplexMap::Square: return z * z;
    case ComplexMap::SquareMinus2: return z * z - 2.0;
    case ComplexMap::Basilica: return z * z - 1.0;
    case ComplexMap::TangledCubic: return -z * z * z / 2.0 + 1.5 * z;
    case ComplexMap::HanoiRational: return z * z - 16.0 / (27.0 * z);
  }
  throw std::logic_error("unreachable");
}

cplx complex_map_default_seed(ComplexMap m) {
  switch (m) {
    case ComplexMap::Square: return {1.0, 0.0};
    case ComplexMap::SquareMinus2: return {2.0, 0.0};
    case ComplexMap::Basilica: return {(1.0 + std::sqrt(5.0)) / 2.0, 0.0};
    case ComplexMap::TangledCubic: return {0.0, 0.0};
    case ComplexMap::HanoiRational: return {4.0 / 3.0, 0.0};
  }
  throw std::logic_error("unreachable");
}

std::vector<cplx> complex_map_preimages(ComplexMap m, cplx w) {
  switch (m) {
    case ComplexMap::Square: {
      cplx r = std::sqrt(w);
      return {r, -r};
    }
    case ComplexMap::SquareMinus2: {
      cplx r = std::sqrt(w + 2.0);
      return {r, -r};
    }
    case ComplexMap::Basilica: {
      cplx r = std::sqrt(w + 1.0);
      return {r, -r};
    }
    case ComplexMap::TangledCubic:
      // -z^3/2 + 3z/2 = w  <=>  z^3 - 3z + 2w = 0
      return cubic_roots({-3.0, 0.0}, 2.0 * w);
    case ComplexMap::HanoiRational:
      // z^2 - 16/(27z) = w  <=>  z^3 - w z - 16/27 = 0
      return cubic_roots(-w, {-16.0 / 27.0, 0.0});
  }
  throw std::logic_error("unreachable");
}

std::vector<cplx> complex_backward_cloud(ComplexMap m, cplx seed, long iterations,
                                         long cap, Rng& rng) {
  constexpr long kBurnIn = 32;
  std::vector<cplx> cloud;
  cplx z = seed;
  for (long i = 0; i < iterations && static_cast<long>(cloud.size()) < cap; ++i) {
    auto pre = complex_map_preimages(m, z);
    z = pre[rng.below(pre.size())];
    if (i >= kBurnIn) cloud.push_back(z);
  }
  return cloud;
}

}  // namespace sgs
