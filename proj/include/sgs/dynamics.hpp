#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sgs/pencil.hpp"
#include "sgs/random.hpp"

namespace sgs {

// f(t) = c2 t^2 + c1 t + c0 with c2 != 0
struct Quadratic {
  double c2 = 1, c1 = 0, c0 = 0;
  double eval(double t) const { return (c2 * t + c1) * t + c0; }
  // real solutions of f(x) = t, in increasing order
  std::vector<double> preimages(double t) const;
};

struct BackwardOrbit {
  double seed = 0;
  int depth = 0;
  std::vector<std::vector<double>> generations;  // sorted, deduplicated
  long complex_dropped = 0;  // count of value nodes whose preimages were complex
};

BackwardOrbit backward_orbit(const Quadratic& f, double seed, int depth);

struct SemiconjReport {
  bool pass = false;
  int samples = 0;
  int resampled = 0;
  double max_rel_err = 0;
};

// max over samples of |psi(F(p)) - f(psi(p))| / max(1, |f(psi(p))|)
SemiconjReport semiconjugacy_check(const RationalMapSpec& map, int samples,
                                   double tol, Rng& rng, double box = 10.0,
                                   double pole_eps = 1e-6);

struct Julia1d {
  std::vector<double> isolated;        // union of all generations
  std::vector<double> closure_sample;  // deepest two generations
};

Julia1d julia_approx_1d(const Quadratic& f, double seed, int depth);

// Complex maps with figure-quality inverse-iteration samplers.
enum class ComplexMap {
  Square,         // z^2
  SquareMinus2,   // z^2 - 2
  Basilica,       // z^2 - 1
  TangledCubic,   // -z^3/2 + 3z/2
  HanoiRational,  // z^2 - 16/(27 z)
};

ComplexMap complex_map_by_name(const std::string& name);  // z2|z2m2|basilica|tangled|hanoi
std::complex<double> complex_map_eval(ComplexMap m, std::complex<double> z);
std::complex<double> complex_map_default_seed(ComplexMap m);
std::vector<std::complex<double>> complex_map_preimages(ComplexMap m,
                                                        std::complex<double> w);

// Random inverse-branch iteration from the seed; points recorded after a
// short burn-in, at most `cap` of them.
std::vector<std::complex<double>> complex_backward_cloud(ComplexMap m,
                                                         std::complex<double> seed,
                                                         long iterations, long cap,
                                                         Rng& rng);

}  // namespace sgs
