#include "sgs/ray.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sgs {

namespace {

TreeWord primitive_root(const TreeWord& q) {
  const int n = static_cast<int>(q.size());
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i) ok = (q[i] == q[i - d]);
    if (ok) return TreeWord(q.begin(), q.begin() + d);
  }
  return q;
}

}  // namespace

std::string Ray::to_string() const {
  return word_string(preperiod) + "(" + word_string(period) + ")";
}

Ray make_ray(TreeWord preperiod, TreeWord period) {
  if (period.empty()) throw std::invalid_argument("ray period must be nonempty");
  Ray r;
  r.period = primitive_root(period);
  r.preperiod = std::move(preperiod);
  // absorb trailing preperiod letters that duplicate the period under rotation:
  // p0 x (q0 x)^inf = p0 (x q0)^inf
  while (!r.preperiod.empty() && r.preperiod.back() == r.period.back()) {
    r.preperiod.pop_back();
    std::rotate(r.period.begin(), r.period.end() - 1, r.period.end());
  }
  return r;
}

Ray act_ray(const AutomatonSpec& spec, const GroupWord& g, const Ray& r,
            std::int64_t max_steps) {
  const std::int64_t pre = static_cast<std::int64_t>(r.preperiod.size());
  const std::int64_t per = static_cast<std::int64_t>(r.period.size());
  if (max_steps <= 0) {
    double bound = static_cast<double>(per);
    for (size_t i = 0; i < g.size(); ++i) {
      bound *= spec.state_count();
      if (bound > 1e7) {
        bound = 1e7;
        break;
      }
    }
    max_steps = pre + static_cast<std::int64_t>(bound) + 1;
  }

  GroupWord w = g;
  TreeWord out;
  std::map<std::pair<GroupWord, std::int64_t>, std::int64_t> seen;
  for (std::int64_t i = 0; i < max_steps; ++i) {
    if (i >= pre) {
      std::int64_t phase = (i - pre) % per;
      auto key = std::make_pair(w, phase);
      auto it = seen.find(key);
      if (it != seen.end()) {
        TreeWord p(out.begin(), out.begin() + it->second);
        TreeWord q(out.begin() + it->second, out.end());
        return make_ray(std::move(p), std::move(q));
      }
      seen.emplace(std::move(key), i);
    }
    Letter x = r.at(i);
    // one transition: output letter and section word
    Letter y = x;
    GroupWord next(w.size());
    for (int j = static_cast<int>(w.size()) - 1; j >= 0; --j) {
      next[j] = spec.state(w[j]).sections[y];
      y = spec.state(w[j]).perm[y];
    }
    out.push_back(y);
    w = std::move(next);
  }
  throw std::runtime_error("section orbit did not close");
}

}  // namespace sgs
