#include "sgs/pencil.hpp"

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "json.hpp"
#include "sgs/catalog.hpp"

namespace sgs {

double Poly::eval(std::span<const double> x) const {
  double acc = 0;
  for (const auto& m : monos) {
    double t = m.coeff;
    for (size_t i = 0; i < m.exps.size(); ++i)
      for (int e = 0; e < m.exps[i]; ++e) t *= x[i];
    acc += t;
  }
  return acc;
}

std::vector<double> RationalMapSpec::apply(std::span<const double> x) const {
  std::vector<double> out;
  out.reserve(F.size());
  for (const auto& c : F) out.push_back(c.eval(x));
  return out;
}

double RationalMapSpec::min_denominator(std::span<const double> x) const {
  double m = std::abs(psi.den.eval(x));
  for (const auto& c : F) m = std::min(m, std::abs(c.den.eval(x)));
  return m;
}

namespace {

Poly parse_poly(const nlohmann::json& j, int dim) {
  Poly p;
  for (const auto& mono : j) {
    Poly::Mono m;
    m.coeff = mono.at(0).get<double>();
    m.exps = mono.at(1).get<std::vector<int>>();
    if (static_cast<int>(m.exps.size()) != dim)
      throw std::invalid_argument("monomial exponent count does not match params");
    p.monos.push_back(std::move(m));
  }
  return p;
}

RationalExpr parse_rational(const nlohmann::json& j, int dim) {
  return {parse_poly(j.at("num"), dim), parse_poly(j.at("den"), dim)};
}

}  // namespace

PencilSpec parse_pencil(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  PencilSpec p;
  p.group = j.at("group").get<std::string>();
  p.params = j.at("params").get<std::vector<std::string>>();
  p.dim = static_cast<int>(p.params.size());
  for (const auto& t : j.at("terms"))
    p.terms.push_back({t.at("op").get<std::string>(), parse_poly(t.at("coeff"), p.dim)});
  if (j.contains("aux")) {
    for (auto it = j["aux"].begin(); it != j["aux"].end(); ++it) {
      AuxPattern pat;
      for (const auto& row : it.value()) {
        std::vector<AuxPattern::Cell> cells;
        for (const auto& cell : row) {
          AuxPattern::Cell c;
          if (cell.is_number_integer()) {
            int v = cell.get<int>();
            if (v == 0) c.kind = AuxPattern::Cell::Zero;
            else if (v == 1) c.kind = AuxPattern::Cell::Id;
            else throw std::invalid_argument("aux pattern entries must be 0, 1 or a name");
          } else {
            c.kind = AuxPattern::Cell::Aux;
            c.aux = cell.get<std::string>();
          }
          cells.push_back(std::move(c));
        }
        pat.cells.push_back(std::move(cells));
      }
      p.aux.emplace(it.key(), std::move(pat));
    }
  }
  for (const auto& r : j.at("restriction"))
    p.restriction.push_back({r.at(0).get<double>(), r.at(1).get<double>()});
  if (static_cast<int>(p.restriction.size()) != p.dim)
    throw std::invalid_argument("restriction size does not match params");
  if (j.contains("det_recursion")) {
    DetRecursion dr;
    dr.min_level = j["det_recursion"].value("min_level", 2);
    for (const auto& f : j["det_recursion"].at("factors"))
      dr.factors.push_back({parse_poly(f.at("poly"), p.dim), f.at("exp_mult").get<int>()});
    p.det_recursion = std::move(dr);
  }
  if (j.contains("map")) {
    RationalMapSpec m;
    m.dim = p.dim;
    for (const auto& c : j["map"].at("F")) m.F.push_back(parse_rational(c, p.dim));
    m.psi = parse_rational(j["map"].at("psi"), p.dim);
    auto f = j["map"].at("f").get<std::vector<double>>();
    if (f.size() != 3) throw std::invalid_argument("map.f must be quadratic [c2,c1,c0]");
    m.f = {f[0], f[1], f[2]};
    p.map = std::move(m);
  }
  return p;
}

PencilSpec load_pencil(const std::string& group_id, const std::string& dir) {
  auto path = std::filesystem::path(catalog_dir(dir)) / "pencils" / (group_id + ".json");
  if (!std::filesystem::exists(path))
    throw std::runtime_error("no pencil preset for group '" + group_id + "'");
  return parse_pencil(read_file(path.string()));
}

std::vector<double> restriction_params(const PencilSpec& p, double lambda) {
  std::vector<double> out;
  out.reserve(p.restriction.size());
  for (const auto& r : p.restriction) out.push_back(r[0] * lambda + r[1]);
  return out;
}

Matrix aux_matrix(const AutomatonSpec& spec, const PencilSpec& p,
                  const std::string& name, int n) {
  auto it = p.aux.find(name);
  if (it == p.aux.end()) throw std::invalid_argument("unknown auxiliary operator: " + name);
  const int k = spec.alphabet_size();
  if (static_cast<int>(it->second.cells.size()) != k)
    throw std::invalid_argument("aux pattern " + name + " does not match alphabet");
  if (n < 1) throw std::invalid_argument("auxiliary operators are defined for levels >= 1");
  std::int64_t block = 1;
  for (int i = 0; i < n - 1; ++i) block *= k;
  Matrix out = Matrix::Zero(block * k, block * k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      const auto& cell = it->second.cells[r][c];
      switch (cell.kind) {
        case AuxPattern::Cell::Zero:
          break;
        case AuxPattern::Cell::Id:
          out.block(r * block, c * block, block, block) =
              Matrix::Identity(block, block);
          break;
        case AuxPattern::Cell::Aux:
          if (n == 1)
            out(r, c) = 1.0;  // level-0 auxiliaries are [1]
          else
            out.block(r * block, c * block, block, block) =
                aux_matrix(spec, p, cell.aux, n - 1);
          break;
      }
    }
  }
  return out;
}

Matrix assemble_pencil(const AutomatonSpec& spec, const PencilSpec& p, int n,
                       std::span<const double> params) {
  if (static_cast<int>(params.size()) != p.dim)
    throw std::invalid_argument("parameter count does not match pencil");
  if (n < 1) throw std::invalid_argument("pencil assembly requires level >= 1");
  std::int64_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= spec.alphabet_size();
  Matrix acc = Matrix::Zero(dim, dim);
  for (const auto& term : p.terms) {
    double c = term.coeff.eval(params);
    if (c == 0) continue;
    if (term.op == "I") {
      acc.diagonal().array() += c;
    } else if (StateId s = spec.find_state(term.op); s >= 0) {
      PermVec perm = rep_perm(spec, s, n);
      for (std::int64_t v = 0; v < dim; ++v) acc(perm[v], v) += c;
    } else if (p.aux.count(term.op)) {
      acc += c * aux_matrix(spec, p, term.op, n);
    } else {
      throw std::invalid_argument("pencil term references unknown operator: " + term.op);
    }
  }
  return acc;
}

DetCheckReport verify_det_recursion(const AutomatonSpec& spec, const PencilSpec& p,
                                    int n, int npoints, double tol, Rng& rng,
                                    double box, double pole_eps) {
  if (!p.det_recursion || !p.map)
    throw std::invalid_argument("pencil has no determinant recursion data");
  if (n < p.det_recursion->min_level)
    throw std::invalid_argument("determinant recursion starts at level " +
                                std::to_string(p.det_recursion->min_level));
  const int k = spec.alphabet_size();
  std::int64_t scale = 1;  // k^(n-2)
  for (int i = 0; i < n - 2; ++i) scale *= k;

  DetCheckReport rep;
  rep.points = npoints;
  std::vector<double> pt(p.dim);
  for (int i = 0; i < npoints; ++i) {
    for (;;) {
      for (int d = 0; d < p.dim; ++d) pt[d] = rng.uniform(-box, box);
      if (p.map->min_denominator(pt) >= pole_eps) break;
      ++rep.resampled;
    }
    double lhs = determinant(assemble_pencil(spec, p, n, pt));
    double factor = 1;
    for (const auto& f : p.det_recursion->factors)
      factor *= std::pow(f.poly.eval(pt), static_cast<double>(f.exp_mult * scale));
    std::vector<double> img = p.map->apply(pt);
    double rhs = factor * determinant(assemble_pencil(spec, p, n - 1, img));
    double err = std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
    rep.max_rel_err = std::max(rep.max_rel_err, err);
  }
  rep.pass = rep.max_rel_err <= tol;
  return rep;
}

}  // namespace sgs
