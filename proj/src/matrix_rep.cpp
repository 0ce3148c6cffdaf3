#include "sgs/matrix_rep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sgs/io_util.hpp"

namespace sgs {

namespace {

std::int64_t pow_checked(int k, int n) {
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= k;
    if (total > (std::int64_t{1} << 26)) throw std::invalid_argument("level too large");
  }
  return total;
}

}  // namespace

PermVec rep_perm(const AutomatonSpec& spec, StateId s, int n) {
  if (n < 0) throw std::invalid_argument("level must be >= 0");
  const int k = spec.alphabet_size();
  pow_checked(k, n);
  const int m = spec.state_count();
  // bottom-up over levels, all states at once
  std::vector<PermVec> prev(m, PermVec{0});
  for (int level = 1; level <= n; ++level) {
    std::int64_t block = pow_checked(k, level - 1);
    std::vector<PermVec> cur(m);
    for (StateId t = 0; t < m; ++t) {
      const AutomatonState& st = spec.state(t);
      PermVec& out = cur[t];
      out.resize(static_cast<size_t>(block) * k);
      for (Letter x = 0; x < k; ++x) {
        const PermVec& inner = prev[st.sections[x]];
        std::int64_t dst_base = static_cast<std::int64_t>(st.perm[x]) * block;
        std::int64_t src_base = static_cast<std::int64_t>(x) * block;
        for (std::int64_t u = 0; u < block; ++u)
          out[src_base + u] = dst_base + inner[u];
      }
    }
    prev = std::move(cur);
  }
  return prev[s];
}

PermVec action_perm(const AutomatonSpec& spec, StateId s, int n) {
  const int k = spec.alphabet_size();
  std::int64_t total = pow_checked(k, n);
  PermVec p(static_cast<size_t>(total));
  for (std::int64_t v = 0; v < total; ++v)
    p[v] = word_index(spec.act_state(s, index_word(v, n, k)), k);
  return p;
}

Matrix perm_to_matrix(const PermVec& p) {
  const auto n = static_cast<Eigen::Index>(p.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v) m(p[v], v) = 1.0;
  return m;
}

Matrix rep_matrix(const AutomatonSpec& spec, StateId s, int n) {
  return perm_to_matrix(rep_perm(spec, s, n));
}

Matrix adjacency_matrix(const AutomatonSpec& spec, int n) {
  const std::int64_t total = pow_checked(spec.alphabet_size(), n);
  Matrix m = Matrix::Zero(total, total);
  for (StateId s : spec.generators()) {
    PermVec p = rep_perm(spec, s, n);
    for (std::int64_t v = 0; v < total; ++v) m(p[v], v) += 1.0;
  }
  return m;
}

double determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

SchurPartition make_partition(const std::vector<Eigen::Index>& top, Eigen::Index n) {
  SchurPartition p;
  p.top = top;
  std::vector<char> in_top(static_cast<size_t>(n), 0);
  for (Eigen::Index i : top) {
    if (i < 0 || i >= n) throw std::invalid_argument("partition index out of range");
    if (in_top[static_cast<size_t>(i)]) throw std::invalid_argument("partition index repeated");
    in_top[static_cast<size_t>(i)] = 1;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    if (!in_top[static_cast<size_t>(i)]) p.bottom.push_back(i);
  return p;
}

Matrix schur_complement(const Matrix& m, const SchurPartition& p) {
  const auto nt = static_cast<Eigen::Index>(p.top.size());
  const auto nb = static_cast<Eigen::Index>(p.bottom.size());
  if (nt + nb != m.rows() || m.rows() != m.cols())
    throw std::invalid_argument("partition does not match matrix");
  if (nb == 0) return m;

  Matrix A(nt, nt), B(nt, nb), C(nb, nt), D(nb, nb);
  for (Eigen::Index i = 0; i < nt; ++i)
    for (Eigen::Index j = 0; j < nt; ++j) A(i, j) = m(p.top[i], p.top[j]);
  for (Eigen::Index i = 0; i < nt; ++i)
    for (Eigen::Index j = 0; j < nb; ++j) B(i, j) = m(p.top[i], p.bottom[j]);
  for (Eigen::Index i = 0; i < nb; ++i)
    for (Eigen::Index j = 0; j < nt; ++j) C(i, j) = m(p.bottom[i], p.top[j]);
  for (Eigen::Index i = 0; i < nb; ++i)
    for (Eigen::Index j = 0; j < nb; ++j) D(i, j) = m(p.bottom[i], p.bottom[j]);

  Eigen::PartialPivLU<Matrix> lu(D);
  if (!(lu.rcond() > 1e-12))
    throw std::runtime_error("trace undefined at this parameter (singular bottom block)");
  return A - B * lu.solve(C);
}

std::string matrix_csv(const Matrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << fmt_double(m(i, j));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace sgs
