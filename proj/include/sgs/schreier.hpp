#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgs/automaton.hpp"
#include "sgs/ray.hpp"

namespace sgs {

// Labeled multigraph of the level-n action. Vertices are the words of X^n in
// lexicographic order (index = base-k value, first letter most significant),
// so first-letter blocks match the matrix wreath recursion. One edge per
// (generator, vertex) pair; loops and multi-edges are kept.
struct SchreierGraph {
  int level = 0;
  int alphabet = 0;
  std::int64_t vertex_count = 0;
  std::vector<std::string> labels;  // generator names, |S| entries
  struct Edge {
    std::int64_t src;
    int label;  // index into labels
    std::int64_t dst;
  };
  std::vector<Edge> edges;
};

SchreierGraph build_level_graph(const AutomatonSpec& spec, int n);

// True iff deleting the last letter sends every edge of upper onto an edge of
// lower with the same label (the degree-|X| covering of the level diagram).
bool covering_check(const SchreierGraph& upper, const SchreierGraph& lower);

struct GraphBall {
  Ray center;
  int radius = 0;
  std::vector<Ray> vertices;  // BFS discovery order
  struct Edge {
    int src;
    int label;
    int dst;
  };
  std::vector<Edge> edges;
  std::vector<std::string> labels;
};

GraphBall orbital_ball(const AutomatonSpec& spec, const Ray& xi, int radius);

// DOT rendering. Involutions are drawn once per vertex pair without arrows;
// for a generator/inverse pair only the member listed first in S is drawn.
std::string export_dot(const AutomatonSpec& spec, const SchreierGraph& g);
std::string export_dot(const AutomatonSpec& spec, const GraphBall& b);

// CSV rows "source,label,target" with words as digit strings.
std::string export_csv(const SchreierGraph& g);
std::string export_csv(const GraphBall& b);

}  // namespace sgs
