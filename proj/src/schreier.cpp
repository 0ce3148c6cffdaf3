#include "sgs/schreier.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace sgs {

SchreierGraph build_level_graph(const AutomatonSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("level must be >= 0");
  const int k = spec.alphabet_size();
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= k;
    if (total > (std::int64_t{1} << 26)) throw std::invalid_argument("level too large");
  }
  SchreierGraph g;
  g.level = n;
  g.alphabet = k;
  g.vertex_count = total;
  for (StateId s : spec.generators()) g.labels.push_back(spec.state(s).name);
  g.edges.reserve(static_cast<size_t>(total) * spec.generators().size());
  int li = 0;
  for (StateId s : spec.generators()) {
    for (std::int64_t v = 0; v < total; ++v) {
      TreeWord w = index_word(v, n, k);
      g.edges.push_back({v, li, word_index(spec.act_state(s, w), k)});
    }
    ++li;
  }
  return g;
}

bool covering_check(const SchreierGraph& upper, const SchreierGraph& lower) {
  if (upper.alphabet != lower.alphabet) return false;
  if (upper.level != lower.level + 1) return false;
  if (upper.labels != lower.labels) return false;
  const std::int64_t k = upper.alphabet;
  // lower edges indexed by (label, src), one edge per pair by construction
  std::vector<std::int64_t> target(lower.edges.size());
  for (const auto& e : lower.edges)
    target[static_cast<size_t>(e.label) * lower.vertex_count + e.src] = e.dst;
  for (const auto& e : upper.edges) {
    std::int64_t src = e.src / k;   // delete last letter
    std::int64_t dst = e.dst / k;
    if (target[static_cast<size_t>(e.label) * lower.vertex_count + src] != dst)
      return false;
  }
  return true;
}

GraphBall orbital_ball(const AutomatonSpec& spec, const Ray& xi, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  GraphBall ball;
  ball.center = xi;
  ball.radius = radius;
  for (StateId s : spec.generators()) ball.labels.push_back(spec.state(s).name);

  std::map<Ray, int> index;
  std::vector<int> dist;
  auto intern = [&](const Ray& r) {
    auto it = index.find(r);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(ball.vertices.size());
    index.emplace(r, id);
    ball.vertices.push_back(r);
    dist.push_back(-1);
    return id;
  };
  intern(xi);
  dist[0] = 0;
  for (size_t head = 0; head < ball.vertices.size(); ++head) {
    if (dist[head] == radius) continue;
    Ray cur = ball.vertices[head];
    for (StateId s : spec.generators()) {
      Ray img = act_ray(spec, {s}, cur);
      int id = intern(img);
      if (dist[id] < 0) dist[id] = dist[head] + 1;
    }
  }
  // edges among ball members, one per (generator, vertex)
  for (size_t v = 0; v < ball.vertices.size(); ++v) {
    int li = 0;
    for (StateId s : spec.generators()) {
      Ray img = act_ray(spec, {s}, ball.vertices[v]);
      auto it = index.find(img);
      if (it != index.end())
        ball.edges.push_back({static_cast<int>(v), li, it->second});
      ++li;
    }
  }
  return ball;
}

namespace {

// Shared DOT writer over an abstract edge list. Fold rules: an involution
// edge pair is a single unoriented edge; of a non-involution pair (s, s^-1)
// only the one listed first in S is drawn.
struct DotPlan {
  std::vector<bool> draw;       // per label index
  std::vector<bool> unoriented; // per label index
};

DotPlan plan_labels(const AutomatonSpec& spec) {
  DotPlan plan;
  const auto& gens = spec.generators();
  for (size_t i = 0; i < gens.size(); ++i) {
    StateId s = gens[i];
    bool inv = spec.is_involution(s);
    bool drawn = true;
    if (!inv) {
      for (size_t j = 0; j < i; ++j)
        if (gens[j] == spec.inverse(s)) drawn = false;  // partner drawn already
    }
    plan.draw.push_back(drawn);
    plan.unoriented.push_back(inv);
  }
  return plan;
}

template <typename EdgeT>
std::string render_dot(const AutomatonSpec& spec, const std::vector<std::string>& labels,
                       const std::vector<std::string>& node_names,
                       const std::vector<EdgeT>& edges) {
  DotPlan plan = plan_labels(spec);
  std::ostringstream os;
  os << "digraph schreier {\n";
  for (size_t v = 0; v < node_names.size(); ++v)
    os << "  n" << v << " [label=\"" << node_names[v] << "\"];\n";
  for (const auto& e : edges) {
    if (!plan.draw[e.label]) continue;
    if (plan.unoriented[e.label]) {
      if (e.src > e.dst) continue;  // emit each unordered pair once
      os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << labels[e.label]
         << "\", dir=none];\n";
    } else {
      os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << labels[e.label]
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_dot(const AutomatonSpec& spec, const SchreierGraph& g) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(g.vertex_count));
  for (std::int64_t v = 0; v < g.vertex_count; ++v)
    names.push_back(word_string(index_word(v, g.level, g.alphabet)));
  if (g.level == 0) names[0] = "eps";
  return render_dot(spec, g.labels, names, g.edges);
}

std::string export_dot(const AutomatonSpec& spec, const GraphBall& b) {
  std::vector<std::string> names;
  names.reserve(b.vertices.size());
  for (const auto& r : b.vertices) names.push_back(r.to_string());
  return render_dot(spec, b.labels, names, b.edges);
}

std::string export_csv(const SchreierGraph& g) {
  std::ostringstream os;
  os << "source,label,target\n";
  for (const auto& e : g.edges)
    os << word_string(index_word(e.src, g.level, g.alphabet)) << ','
       << g.labels[e.label] << ','
       << word_string(index_word(e.dst, g.level, g.alphabet)) << '\n';
  return os.str();
}

std::string export_csv(const GraphBall& b) {
  std::ostringstream os;
  os << "source,label,target\n";
  for (const auto& e : b.edges)
    os << b.vertices[e.src].to_string() << ',' << b.labels[e.label] << ','
       << b.vertices[e.dst].to_string() << '\n';
  return os.str();
}

}  // namespace sgs
