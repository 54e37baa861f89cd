#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "facering/complex.hpp"

namespace facering {

/// Simple undirected graph on nodes 0..n-1.
struct Graph {
  std::size_t num_nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::vector<std::size_t>> adjacency() const;
};

struct Bipartition {
  std::vector<std::size_t> side1;  // contains node 0 of each component
  std::vector<std::size_t> side2;
};

struct BipartiteResult {
  std::optional<Bipartition> parts;
  std::vector<std::size_t> odd_cycle;  // node sequence, closed implicitly

  bool bipartite() const { return parts.has_value(); }
};

BipartiteResult is_bipartite(const Graph& g);

/// Nodes are the facets of Δ in stored order.
struct FacetRidgeGraph {
  std::vector<Face> nodes;
  Graph graph;
  std::optional<Bipartition> bipartition;
};

FacetRidgeGraph facet_ridge_graph(const SimplicialComplex& delta);

/// Vertex v of the result stands for faces[v - 1] (the sorted (i-1)-faces).
struct IncidenceComplex {
  SimplicialComplex complex;
  std::vector<Face> faces;
};

IncidenceComplex incidence_complex(const SimplicialComplex& delta, int i);

struct LatticePoint {
  std::vector<int> coords;  // indexed by vertex position in the ground complex
  int level = 0;

  std::vector<std::size_t> support() const;
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.coords < b.coords; }
  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.coords == b.coords;
  }
};

/// Vertex v of the result is labels[v - 1]; labels are in lexicographic
/// order of coordinate vectors.
struct HesdComplex {
  SimplicialComplex complex;
  std::vector<LatticePoint> labels;
};

/// Half-hollow edgewise subdivision. Requires pairwise facet intersections
/// of size at most 1 (NotIncidenceLike otherwise) and r >= 1.
HesdComplex hesd(const SimplicialComplex& delta, int r);

}  // namespace facering
