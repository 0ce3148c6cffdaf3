#pragma once

#include <cstdint>
#include <string>

#include "sgs/automaton.hpp"

namespace sgs {

// Eventually periodic boundary ray: preperiod followed by the period repeated
// forever. Canonical form has a primitive period and a minimal preperiod (its
// last letter differs from the period's last letter under rotation).
struct Ray {
  TreeWord preperiod;
  TreeWord period;

  Letter at(std::int64_t i) const {
    if (i < static_cast<std::int64_t>(preperiod.size())) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
  }

  bool operator==(const Ray& o) const {
    return preperiod == o.preperiod && period == o.period;
  }
  bool operator<(const Ray& o) const {
    return preperiod != o.preperiod ? preperiod < o.preperiod : period < o.period;
  }

  std::string to_string() const;  // "pre(period)" e.g. "01(10)"
};

Ray make_ray(TreeWord preperiod, TreeWord period);  // canonicalizes

// Image of a canonical ray under a group word. Letter transitions are iterated
// until the pair (section word, phase in period) repeats; bound 0 means the
// default |states|^|g| * |period| + |preperiod| transition budget.
Ray act_ray(const AutomatonSpec& spec, const GroupWord& g, const Ray& r,
            std::int64_t max_steps = 0);

}  // namespace sgs
