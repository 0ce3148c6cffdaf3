#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sgs/automaton.hpp"

namespace sgs {

using Matrix = Eigen::MatrixXd;
using PermVec = std::vector<std::int64_t>;  // v -> s(v) on X^n, lex indexed

// pi_n(s) as a permutation, built by the matrix wreath recursion
// (first-letter blocks; base pi_0(s) = [1])
PermVec rep_perm(const AutomatonSpec& spec, StateId s, int n);

// Same permutation computed by acting on each word directly; kept as an
// independent code path for cross-checking the recursion.
PermVec action_perm(const AutomatonSpec& spec, StateId s, int n);

Matrix perm_to_matrix(const PermVec& p);
Matrix rep_matrix(const AutomatonSpec& spec, StateId s, int n);

// A_n = sum over the symmetric generating set of pi_n(s)
Matrix adjacency_matrix(const AutomatonSpec& spec, int n);

double determinant(const Matrix& m);

struct SchurPartition {
  std::vector<Eigen::Index> top;
  std::vector<Eigen::Index> bottom;
};

// Partition with the given top indices, bottom = complement in order.
SchurPartition make_partition(const std::vector<Eigen::Index>& top, Eigen::Index n);

// A - B D^-1 C on the top block. Throws "trace undefined at this parameter"
// when the bottom block is numerically singular.
Matrix schur_complement(const Matrix& m, const SchurPartition& p);

// Dense matrix as CSV rows (shortest round-trip decimals).
std::string matrix_csv(const Matrix& m);

}  // namespace sgs
