#include "sgs/dirichlet.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace sgs {

QuadraticForm laplacian_form(const AutomatonSpec& spec, int n,
                             const std::map<std::string, double>& weights) {
  for (const auto& [name, w] : weights) {
    StateId s = spec.find_state(name);
    if (s < 0) throw std::invalid_argument("weight references unknown generator: " + name);
    auto it = weights.find(spec.state(spec.inverse(s)).name);
    if (it == weights.end() || it->second != w)
      throw std::invalid_argument("weights must be symmetric under inversion");
  }
  std::int64_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= spec.alphabet_size();
  QuadraticForm form;
  form.m = Matrix::Identity(dim, dim);
  for (const auto& [name, w] : weights) {
    if (w == 0) continue;
    PermVec p = rep_perm(spec, spec.find_state(name), n);
    for (std::int64_t v = 0; v < dim; ++v) form.m(p[v], v) -= w;
  }
  form.labels.reserve(static_cast<size_t>(dim));
  for (std::int64_t v = 0; v < dim; ++v)
    form.labels.push_back(word_string(index_word(v, n, spec.alphabet_size())));
  return form;
}

BasilicaTraceReport basilica_trace_check(const AutomatonSpec& basilica, int n,
                                         double alpha, double beta, double tol,
                                         int top_letter) {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  const int k = basilica.alphabet_size();
  if (top_letter < 0 || top_letter >= k) throw std::invalid_argument("bad top letter");

  auto weights_of = [&](double a, double b) {
    std::map<std::string, double> w;
    w["a"] = a;
    w["a^-1"] = a;
    w["b"] = b;
    w["b^-1"] = b;
    return w;
  };
  Matrix upper = laplacian_form(basilica, n + 1, weights_of(alpha, beta)).m;
  Matrix lower = laplacian_form(basilica, n, weights_of(alpha, beta)).m;

  std::int64_t block = lower.rows();
  std::vector<Eigen::Index> top;
  for (std::int64_t i = 0; i < block; ++i) top.push_back(top_letter * block + i);
  Matrix S = schur_complement(upper, make_partition(top, upper.rows()));

  BasilicaTraceReport rep;
  rep.lambda = 1.0 / std::sqrt(2.0);
  Matrix expect = rep.lambda * lower;
  double scale = std::max(1.0, expect.norm());
  rep.exact_rel_err = (S - expect).norm() / scale;
  // projection onto mean-zero functions
  Matrix P = Matrix::Identity(block, block) -
             Matrix::Constant(block, block, 1.0 / static_cast<double>(block));
  rep.meanzero_rel_err = (P * (S - expect) * P).norm() / scale;
  rep.exact_pass = rep.exact_rel_err <= tol;
  rep.pass = rep.meanzero_rel_err <= tol;
  return rep;
}

Letter self_section_letter(const AutomatonSpec& spec, StateId s) {
  Letter found = -1;
  for (Letter x = 0; x < spec.alphabet_size(); ++x) {
    if (spec.state(s).sections[x] == s) {
      if (found >= 0)
        throw std::invalid_argument("state has several self-referential sections");
      found = x;
    }
  }
  if (found < 0) throw std::invalid_argument("state has no self-referential section");
  return found;
}

QuadraticForm hanoi_form(const AutomatonSpec& hanoi, int n, double x, double y) {
  if (n < 0) throw std::invalid_argument("level must be >= 0");
  const auto& gens = hanoi.generators();
  const int copies = static_cast<int>(gens.size());
  if (copies != 3) throw std::invalid_argument("hanoi form needs exactly 3 generators");
  std::int64_t block = 1;
  for (int i = 0; i < n; ++i) block *= hanoi.alphabet_size();

  QuadraticForm form;
  form.m = Matrix::Zero(copies * block, copies * block);
  for (int i = 0; i < copies; ++i) {
    auto diag = form.m.block(i * block, i * block, block, block);
    diag = (y + 2 * x) * Matrix::Identity(block, block);
    PermVec p = rep_perm(hanoi, gens[i], n);
    for (std::int64_t v = 0; v < block; ++v) diag(p[v], v) -= y;
    for (int j = 0; j < copies; ++j)
      if (i != j)
        form.m.block(i * block, j * block, block, block) =
            -x * Matrix::Identity(block, block);
  }
  form.labels.reserve(static_cast<size_t>(copies) * block);
  for (int i = 0; i < copies; ++i)
    for (std::int64_t v = 0; v < block; ++v)
      form.labels.push_back(hanoi.state(gens[i]).name + ":" +
                            word_string(index_word(v, n, hanoi.alphabet_size())));
  return form;
}

HanoiTraceReport hanoi_trace_check(const AutomatonSpec& hanoi, int n, double x,
                                   double y, double tol) {
  const auto& gens = hanoi.generators();
  Matrix upper = hanoi_form(hanoi, n + 1, x, y).m;
  std::int64_t big = 1;
  for (int i = 0; i < n + 1; ++i) big *= hanoi.alphabet_size();
  std::int64_t small = big / hanoi.alphabet_size();

  // each copy keeps the sub-block of its generator's self-section letter
  std::vector<Eigen::Index> top;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    Letter keep = self_section_letter(hanoi, gens[i]);
    for (std::int64_t v = 0; v < small; ++v)
      top.push_back(i * big + keep * small + v);
  }
  Matrix S = schur_complement(upper, make_partition(top, upper.rows()));

  HanoiTraceReport rep;
  rep.x_mapped = 3.0 * x / (5.0 + 3.0 * x / y);
  Matrix expect = hanoi_form(hanoi, n, rep.x_mapped, y).m;
  rep.rel_err = (S - expect).norm() / std::max(1.0, expect.norm());
  rep.pass = rep.rel_err <= tol;
  return rep;
}

VariationalReport variational_check(const Matrix& form, const SchurPartition& part,
                                    int nvec, double tol, Rng& rng) {
  Matrix S = schur_complement(form, part);
  const auto nt = static_cast<Eigen::Index>(part.top.size());
  const auto nb = static_cast<Eigen::Index>(part.bottom.size());

  Matrix D(nb, nb), C(nb, nt);
  for (Eigen::Index i = 0; i < nb; ++i) {
    for (Eigen::Index j = 0; j < nb; ++j) D(i, j) = form(part.bottom[i], part.bottom[j]);
    for (Eigen::Index j = 0; j < nt; ++j) C(i, j) = form(part.bottom[i], part.top[j]);
  }
  Eigen::LDLT<Matrix> dfac(D);
  bool d_positive = dfac.info() == Eigen::Success && dfac.isPositive();

  VariationalReport rep;
  rep.min_excess = 0;
  double scale = std::max(1.0, form.norm());
  Eigen::VectorXd full(form.rows());
  for (int t = 0; t < nvec; ++t) {
    Eigen::VectorXd f(nt);
    for (Eigen::Index i = 0; i < nt; ++i) f(i) = rng.uniform(-1.0, 1.0);
    Eigen::VectorXd g = D.partialPivLu().solve(-(C * f));  // harmonic extension
    full.setZero();
    for (Eigen::Index i = 0; i < nt; ++i) full(part.top[i]) = f(i);
    for (Eigen::Index i = 0; i < nb; ++i) full(part.bottom[i]) = g(i);
    double direct = full.dot(form * full);
    double traced = f.dot(S * f);
    rep.max_value_err =
        std::max(rep.max_value_err, std::abs(direct - traced) / scale);
    if (d_positive) {
      // random perturbations of the extension may only increase the energy
      Eigen::VectorXd h(nb);
      for (Eigen::Index i = 0; i < nb; ++i) h(i) = rng.uniform(-1.0, 1.0);
      for (Eigen::Index i = 0; i < nb; ++i) full(part.bottom[i]) = g(i) + h(i);
      double perturbed = full.dot(form * full);
      rep.min_excess = std::min(rep.min_excess, (perturbed - direct) / scale);
    }
  }
  rep.pass = rep.max_value_err <= tol && rep.min_excess >= -tol;
  return rep;
}

}  // namespace sgs
