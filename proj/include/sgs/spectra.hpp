#pragma once

#include <string>
#include <vector>

#include "sgs/matrix_rep.hpp"

namespace sgs {

struct Cluster {
  double value;
  long multiplicity;
};

struct SpectrumReport {
  int level = 0;
  std::int64_t dimension = 0;
  double tol = 0;
  std::vector<Cluster> clusters;  // strictly increasing values

  std::int64_t multiplicity_sum() const;
  double min_gap() const;  // +inf for a single cluster
};

// All eigenvalues of a symmetric matrix, clustered greedily by gap > tol.
// tol <= 0 selects the default 1e-8 * max(1, ||m||_inf).
SpectrumReport eigen_spectrum(const Matrix& m, int level, double tol = -1);

// Closed-form finite-level spectra. Supported: grigorchuk, hanoi, tangled,
// lamplighter, dinf (adjacency normalization; dinf is 2x its Markov values).
SpectrumReport oracle_spectrum(const std::string& group, int n);
bool has_oracle(const std::string& group);

struct CompareReport {
  bool pass = false;
  double max_value_err = 0;
  std::string detail;  // empty when pass
};

CompareReport compare_spectra(const SpectrumReport& computed,
                              const SpectrumReport& oracle, double tol);

struct KnsMeasure {
  struct Atom {
    double value;
    double mass;
  };
  std::vector<Atom> atoms;
};

KnsMeasure kns_counting(const SpectrumReport& report);

// Limit mass of an eigenvalue class. For hanoi and tangled the class is the
// backward-orbit depth together with the orbit root (0/-2 resp. 2/-2); for
// lamplighter it is the eigenvalue 4cos(p pi / q) itself and the mass depends
// only on q.
double kns_limit(const std::string& group, int depth, double root);

}  // namespace sgs
