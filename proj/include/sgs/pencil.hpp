#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgs/matrix_rep.hpp"
#include "sgs/random.hpp"

namespace sgs {

// Multivariate polynomial as a monomial list (rational coefficients stored
// exactly as doubles in the shipped presets).
struct Poly {
  struct Mono {
    double coeff;
    std::vector<int> exps;
  };
  std::vector<Mono> monos;
  double eval(std::span<const double> x) const;
};

struct RationalExpr {
  Poly num, den;
  double eval(std::span<const double> x) const { return num.eval(x) / den.eval(x); }
};

// F, psi and the 1-d polynomial f with psi(F(p)) = f(psi(p)); f = c2 t^2 + c1 t + c0
struct RationalMapSpec {
  int dim = 0;
  std::vector<RationalExpr> F;
  RationalExpr psi;
  std::array<double, 3> f{0, 0, 0};

  std::vector<double> apply(std::span<const double> x) const;
  double f_eval(double t) const { return (f[0] * t + f[1]) * t + f[2]; }
  // smallest |denominator| among the components and psi at x
  double min_denominator(std::span<const double> x) const;
};

// k x k block pattern; each cell is 0, the identity, or another auxiliary
// operator instantiated one level down (level-0 auxiliaries are [1]).
struct AuxPattern {
  struct Cell {
    enum Kind { Zero, Id, Aux } kind = Zero;
    std::string aux;
  };
  std::vector<std::vector<Cell>> cells;
};

struct PencilTerm {
  std::string op;  // generator name, "I", or an auxiliary operator name
  Poly coeff;
};

struct DetRecursion {
  int min_level = 2;
  struct Factor {
    Poly poly;
    int exp_mult;  // exponent is exp_mult * k^(n-2)
  };
  std::vector<Factor> factors;
};

struct PencilSpec {
  std::string group;
  int dim = 0;
  std::vector<std::string> params;
  std::vector<PencilTerm> terms;
  std::map<std::string, AuxPattern> aux;
  // param_i(lambda) = restriction[i][0] * lambda + restriction[i][1];
  // at these values the pencil equals A_n - lambda I
  std::vector<std::array<double, 2>> restriction;
  std::optional<DetRecursion> det_recursion;
  std::optional<RationalMapSpec> map;
};

PencilSpec parse_pencil(const std::string& json_text);
PencilSpec load_pencil(const std::string& group_id, const std::string& dir = "");

std::vector<double> restriction_params(const PencilSpec& p, double lambda);

// Named auxiliary operator at level n >= 1 (blocks of size k^(n-1)).
Matrix aux_matrix(const AutomatonSpec& spec, const PencilSpec& p,
                  const std::string& name, int n);

Matrix assemble_pencil(const AutomatonSpec& spec, const PencilSpec& p, int n,
                       std::span<const double> params);

struct DetCheckReport {
  bool pass = false;
  int points = 0;
  int resampled = 0;
  double max_rel_err = 0;
};

// Sample the determinant recursion det A_n = P_n(p) det A_{n-1}(F(p)) at
// random points with denominators bounded away from the poles of F.
DetCheckReport verify_det_recursion(const AutomatonSpec& spec, const PencilSpec& p,
                                    int n, int npoints, double tol, Rng& rng,
                                    double box = 5.0, double pole_eps = 1e-6);

}  // namespace sgs
