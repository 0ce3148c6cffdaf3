#pragma once

#include <map>
#include <string>
#include <vector>

#include "sgs/matrix_rep.hpp"
#include "sgs/random.hpp"

namespace sgs {

struct QuadraticForm {
  Matrix m;                         // symmetric
  std::vector<std::string> labels;  // one per index
};

// I - sum_s w_s pi_n(s); weights must be symmetric under inversion.
QuadraticForm laplacian_form(const AutomatonSpec& spec, int n,
                             const std::map<std::string, double>& weights);

struct BasilicaTraceReport {
  bool pass = false;           // mean-zero criterion
  bool exact_pass = false;     // full matrix criterion
  double exact_rel_err = 0;
  double meanzero_rel_err = 0;
  double lambda = 0;
};

// Schur trace of the weighted Basilica Laplacian L_{n+1} onto the words with
// first letter `top_letter`, compared against lambda L_n with lambda=1/sqrt2.
// pass is the mean-zero-subspace comparison; the exact comparison is reported
// alongside.
BasilicaTraceReport basilica_trace_check(const AutomatonSpec& basilica, int n,
                                         double alpha, double beta, double tol,
                                         int top_letter = 1);

// Three coupled copies of X^n with generators acting per copy:
// diagonal blocks y(1 - pi_n(g)) + 2x, off-diagonal -x (copy order a, b, c).
QuadraticForm hanoi_form(const AutomatonSpec& hanoi, int n, double x, double y);

struct HanoiTraceReport {
  bool pass = false;
  double rel_err = 0;
  double x_mapped = 0;
};

// Trace of the level-(n+1) form onto the three distinguished sub-blocks
// (each copy keeps the first-letter block of its generator's self-section
// letter); expected equal to the same form at (3x/(5+3x/y), y).
HanoiTraceReport hanoi_trace_check(const AutomatonSpec& hanoi, int n, double x,
                                   double y, double tol);

struct VariationalReport {
  bool pass = false;
  double max_value_err = 0;   // |E(ext f) - f' S f| relative
  double min_excess = 0;      // min over perturbations of E(g) - E(ext f), PD case
};

// Cross-check that the Schur complement is the variational trace: for random
// boundary data the harmonic extension (solved independently) attains the
// Schur form value, and perturbed extensions only increase it when the
// eliminated block is positive definite.
VariationalReport variational_check(const Matrix& form, const SchurPartition& part,
                                    int nvec, double tol, Rng& rng);

// Letter whose section of `s` is `s` itself (the generator's fixed direction).
Letter self_section_letter(const AutomatonSpec& spec, StateId s);

}  // namespace sgs
