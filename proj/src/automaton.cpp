#include "sgs/automaton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace sgs {

namespace {

std::vector<Letter> inverse_perm(const std::vector<Letter>& p) {
  std::vector<Letter> q(p.size());
  for (size_t x = 0; x < p.size(); ++x) q[p[x]] = static_cast<Letter>(x);
  return q;
}

bool is_bijection(const std::vector<Letter>& p, int k) {
  if (static_cast<int>(p.size()) != k) return false;
  std::vector<char> seen(k, 0);
  for (Letter y : p) {
    if (y < 0 || y >= k || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

}  // namespace

AutomatonSpec::AutomatonSpec(Alphabet alphabet, std::vector<AutomatonState> states,
                             std::vector<StateId> generators,
                             std::vector<StateId> inverses,
                             std::optional<StateId> identity)
    : alphabet_(alphabet),
      states_(std::move(states)),
      generators_(std::move(generators)),
      inverses_(std::move(inverses)),
      identity_(identity) {}

StateId AutomatonSpec::find_state(const std::string& name) const {
  for (size_t i = 0; i < states_.size(); ++i)
    if (states_[i].name == name) return static_cast<StateId>(i);
  return -1;
}

TreeWord AutomatonSpec::act_state(StateId s, const TreeWord& u) const {
  TreeWord out;
  out.reserve(u.size());
  for (Letter x : u) {
    const AutomatonState& st = states_[s];
    out.push_back(st.perm[x]);
    s = st.sections[x];
  }
  return out;
}

TreeWord AutomatonSpec::act_word(const GroupWord& g, const TreeWord& u) const {
  TreeWord v = u;
  for (auto it = g.rbegin(); it != g.rend(); ++it) v = act_state(*it, v);
  return v;
}

StateId AutomatonSpec::state_section(StateId s, const TreeWord& u) const {
  for (Letter x : u) s = states_[s].sections[x];
  return s;
}

GroupWord AutomatonSpec::section(const GroupWord& g, const TreeWord& u) const {
  // (g1...gm)_u = (g1)_{(g2..gm)(u)} (g2)_{(g3..gm)(u)} ... (gm)_u
  GroupWord out(g.size());
  TreeWord v = u;
  for (int j = static_cast<int>(g.size()) - 1; j >= 0; --j) {
    out[j] = state_section(g[j], v);
    v = act_state(g[j], v);
  }
  return out;
}

bool AutomatonSpec::words_equal(const GroupWord& a, const GroupWord& b) const {
  const int k = alphabet_.size;
  // root permutation of a word
  auto word_perm = [&](const GroupWord& w, Letter x) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = states_[*it].perm[x];
    return x;
  };
  using Key = std::pair<GroupWord, GroupWord>;
  std::set<Key> assumed;  // pairs assumed equal on the current paths
  std::vector<Key> stack{{a, b}};
  while (!stack.empty()) {
    Key cur = stack.back();
    stack.pop_back();
    if (assumed.count(cur)) continue;
    for (Letter x = 0; x < k; ++x)
      if (word_perm(cur.first, x) != word_perm(cur.second, x)) return false;
    assumed.insert(cur);
    TreeWord u(1);
    for (Letter x = 0; x < k; ++x) {
      u[0] = x;
      stack.push_back({section(cur.first, u), section(cur.second, u)});
    }
  }
  // no permutation mismatch reachable: the visited set is a bisimulation
  return true;
}

bool AutomatonSpec::is_level_transitive(int n) const {
  const int k = alphabet_.size;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= k;
    if (total > (std::int64_t{1} << 26))
      throw std::invalid_argument("level too large for transitivity check");
  }
  std::vector<char> seen(static_cast<size_t>(total), 0);
  std::vector<std::int64_t> queue{0};
  seen[0] = 1;
  std::int64_t count = 1;
  while (!queue.empty()) {
    std::int64_t v = queue.back();
    queue.pop_back();
    TreeWord w = index_word(v, n, k);
    for (StateId s : generators_) {
      std::int64_t img = word_index(act_state(s, w), k);
      if (!seen[img]) {
        seen[img] = 1;
        ++count;
        queue.push_back(img);
      }
    }
  }
  return count == total;
}

AutomatonSpec parse_automaton(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("automaton file is not valid JSON: ") + e.what());
  }

  if (!j.contains("alphabet") || !j["alphabet"].is_number_integer())
    throw std::invalid_argument("missing integer field 'alphabet'");
  const int k = j["alphabet"].get<int>();
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");

  if (!j.contains("states") || !j["states"].is_array() || j["states"].empty())
    throw std::invalid_argument("missing nonempty 'states' array");

  std::vector<AutomatonState> states;
  std::map<std::string, StateId> index;
  for (const auto& js : j["states"]) {
    AutomatonState st;
    st.name = js.at("name").get<std::string>();
    if (index.count(st.name))
      throw std::invalid_argument("duplicate state name: " + st.name);
    st.perm = js.at("perm").get<std::vector<Letter>>();
    if (!is_bijection(st.perm, k))
      throw std::invalid_argument("state " + st.name +
                                  ": perm is not a bijection of the alphabet");
    index[st.name] = static_cast<StateId>(states.size());
    states.push_back(std::move(st));
  }
  // resolve section names in a second pass so forward references work
  {
    size_t i = 0;
    for (const auto& js : j["states"]) {
      auto names = js.at("sections").get<std::vector<std::string>>();
      if (static_cast<int>(names.size()) != k)
        throw std::invalid_argument("state " + states[i].name +
                                    ": sections length does not match alphabet");
      for (const auto& nm : names) {
        auto it = index.find(nm);
        if (it == index.end())
          throw std::invalid_argument("state " + states[i].name +
                                      ": section references unknown state '" + nm + "'");
        states[i].sections.push_back(it->second);
      }
      ++i;
    }
  }

  std::optional<StateId> identity;
  if (j.contains("identity")) {
    auto nm = j["identity"].get<std::string>();
    auto it = index.find(nm);
    if (it == index.end())
      throw std::invalid_argument("identity references unknown state '" + nm + "'");
    identity = it->second;
    const AutomatonState& e = states[*identity];
    for (Letter x = 0; x < k; ++x)
      if (e.perm[x] != x || e.sections[x] != *identity)
        throw std::invalid_argument("declared identity state is not the identity");
  }

  // declared inverse pairs
  const int n_orig = static_cast<int>(states.size());
  std::vector<StateId> inv(n_orig, -1);
  if (j.contains("inverses")) {
    for (auto it = j["inverses"].begin(); it != j["inverses"].end(); ++it) {
      auto a = index.find(it.key());
      auto b = index.find(it.value().get<std::string>());
      if (a == index.end() || b == index.end())
        throw std::invalid_argument("inverses entry references unknown state");
      inv[a->second] = b->second;
      inv[b->second] = a->second;
    }
  }

  // detect involutions (g^2 acts trivially) among unpaired states
  {
    AutomatonSpec probe({k}, states, {}, std::vector<StateId>(n_orig, -1), identity);
    for (StateId s = 0; s < n_orig; ++s)
      if (inv[s] == -1 && probe.words_equal({s, s}, {})) inv[s] = s;
  }

  // synthesize formal inverses for the rest
  std::vector<StateId> pending;
  for (StateId s = 0; s < n_orig; ++s) {
    if (inv[s] != -1) continue;
    AutomatonState st;
    st.name = states[s].name + "^-1";
    if (index.count(st.name))
      throw std::invalid_argument("cannot synthesize inverse: name taken: " + st.name);
    st.perm = inverse_perm(states[s].perm);
    StateId id = static_cast<StateId>(states.size());
    index[st.name] = id;
    states.push_back(std::move(st));
    inv.push_back(s);
    inv[s] = id;
    pending.push_back(id);
  }
  // sections of synthesized states: (s^-1)_x = (s_{s^-1(x)})^-1
  for (StateId id : pending) {
    StateId s = inv[id];
    for (Letter x = 0; x < k; ++x) {
      Letter y = states[id].perm[x];  // s^-1(x)
      StateId sec = states[s].sections[y];
      if (inv[sec] == -1)
        throw std::invalid_argument("inverse closure failed at state " + states[s].name);
      states[id].sections.push_back(inv[sec]);
    }
  }

  // validate every inverse pair structurally
  for (StateId s = 0; s < static_cast<int>(states.size()); ++s) {
    StateId t = inv[s];
    for (Letter x = 0; x < k; ++x) {
      if (states[t].perm[states[s].perm[x]] != x)
        throw std::invalid_argument("inverse pair " + states[s].name + "/" +
                                    states[t].name + ": permutations not mutually inverse");
      Letter y = states[t].perm[x];
      if (states[t].sections[x] != inv[states[s].sections[y]])
        throw std::invalid_argument("inverse pair " + states[s].name + "/" +
                                    states[t].name + ": section condition violated");
    }
  }

  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw std::invalid_argument("missing nonempty 'generators' array");
  std::vector<StateId> gens;
  auto add_gen = [&](StateId s) {
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  };
  for (const auto& nm : j["generators"]) {
    auto it = index.find(nm.get<std::string>());
    if (it == index.end())
      throw std::invalid_argument("generator references unknown state '" +
                                  nm.get<std::string>() + "'");
    add_gen(it->second);
  }
  for (size_t i = 0, m = gens.size(); i < m; ++i) add_gen(inv[gens[i]]);

  return AutomatonSpec({k}, std::move(states), std::move(gens), std::move(inv), identity);
}

NucleusResult check_contracting(const AutomatonSpec& spec, int radius, int max_size) {
  if (radius < 1) throw std::invalid_argument("candidate_radius must be >= 1");
  NucleusResult res;
  res.radius = radius;

  std::vector<GroupWord> cand;
  auto contains = [&](const GroupWord& w) {
    for (const auto& c : cand)
      if (spec.words_equal(c, w)) return true;
    return false;
  };
  auto add = [&](const GroupWord& w) {
    if (!contains(w)) cand.push_back(w);
  };
  add({});
  for (StateId s : spec.generators()) add({s});

  const int k = spec.alphabet_size();
  std::vector<TreeWord> depth_words;
  {
    std::int64_t total = 1;
    for (int i = 0; i < radius; ++i) total *= k;
    for (std::int64_t idx = 0; idx < total; ++idx)
      depth_words.push_back(index_word(idx, radius, k));
  }

  bool grew = true;
  while (grew) {
    grew = false;
    size_t m = cand.size();
    // section closure at depth 1
    for (size_t i = 0; i < m; ++i) {
      for (Letter x = 0; x < k; ++x) {
        GroupWord s = spec.section(cand[i], {x});
        if (!contains(s)) {
          cand.push_back(s);
          grew = true;
        }
      }
    }
    // sections of pairwise products at the candidate radius
    m = cand.size();
    for (size_t i = 0; i < m; ++i) {
      for (size_t jj = 0; jj < m; ++jj) {
        GroupWord prod = cand[i];
        prod.insert(prod.end(), cand[jj].begin(), cand[jj].end());
        for (const auto& w : depth_words) {
          GroupWord s = spec.section(prod, w);
          if (!contains(s)) {
            cand.push_back(s);
            grew = true;
          }
        }
        if (static_cast<int>(cand.size()) > max_size) {
          res.ok = false;
          res.message = "candidate set exceeded " + std::to_string(max_size) +
                        " elements at radius " + std::to_string(radius);
          return res;
        }
      }
    }
  }
  res.ok = true;
  res.nucleus = std::move(cand);
  return res;
}

std::int64_t word_index(const TreeWord& w, int k) {
  std::int64_t i = 0;
  for (Letter x : w) i = i * k + x;
  return i;
}

TreeWord index_word(std::int64_t idx, int n, int k) {
  TreeWord w(n);
  for (int j = n - 1; j >= 0; --j) {
    w[j] = static_cast<Letter>(idx % k);
    idx /= k;
  }
  return w;
}

std::string word_string(const TreeWord& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s += static_cast<char>('0' + x);
  return s;
}

}  // namespace sgs
