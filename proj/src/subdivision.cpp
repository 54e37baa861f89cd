#include "facering/subdivision.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "facering/errors.hpp"

namespace facering {

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(num_nodes);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

BipartiteResult is_bipartite(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> side(g.num_nodes, -1);
  std::vector<std::size_t> parent(g.num_nodes, 0);
  std::vector<std::size_t> depth(g.num_nodes, 0);
  BipartiteResult res;

  for (std::size_t s = 0; s < g.num_nodes; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    parent[s] = s;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto w : adj[u]) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (side[w] == side[u]) {
          // Odd cycle: walk both BFS-tree paths up to their meeting point.
          std::vector<std::size_t> left{u};
          std::vector<std::size_t> right{w};
          std::size_t a = u;
          std::size_t b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::reverse(left.begin(), left.end());
          left.insert(left.end(), right.begin(), right.end());
          res.odd_cycle = std::move(left);
          return res;
        }
      }
    }
  }
  Bipartition parts;
  for (std::size_t v = 0; v < g.num_nodes; ++v) {
    (side[v] == 0 ? parts.side1 : parts.side2).push_back(v);
  }
  res.parts = std::move(parts);
  return res;
}

FacetRidgeGraph facet_ridge_graph(const SimplicialComplex& delta) {
  if (!delta.is_pure()) throw PurityError("the facet-ridge graph needs a pure complex");
  FacetRidgeGraph frg;
  frg.nodes = delta.facets();
  frg.graph.num_nodes = frg.nodes.size();
  for (std::size_t i = 0; i < frg.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < frg.nodes.size(); ++j) {
      Face common;
      std::set_intersection(frg.nodes[i].begin(), frg.nodes[i].end(), frg.nodes[j].begin(),
                            frg.nodes[j].end(), std::back_inserter(common));
      if (common.size() + 1 == frg.nodes[i].size()) frg.graph.edges.emplace_back(i, j);
    }
  }
  frg.bipartition = is_bipartite(frg.graph).parts;
  return frg;
}

IncidenceComplex incidence_complex(const SimplicialComplex& delta, int i) {
  if (i < 1 || i > delta.dimension()) {
    throw DimensionError("incidence complex index " + std::to_string(i) + " outside [1, " +
                         std::to_string(delta.dimension()) + "]");
  }
  IncidenceComplex out;
  out.faces = faces(delta, i - 1);
  std::vector<std::vector<Vertex>> facets;
  std::set<std::size_t> used;
  for (const auto& f : faces(delta, i)) {
    std::vector<Vertex> verts;
    for (std::size_t j = 0; j < f.size(); ++j) {
      Face g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
      const auto pos =
          static_cast<std::size_t>(std::lower_bound(out.faces.begin(), out.faces.end(), g) - out.faces.begin());
      verts.push_back(static_cast<Vertex>(pos + 1));
      used.insert(pos);
    }
    facets.push_back(std::move(verts));
  }
  std::vector<Vertex> isolated;
  for (std::size_t p = 0; p < out.faces.size(); ++p) {
    if (!used.count(p)) isolated.push_back(static_cast<Vertex>(p + 1));
  }
  out.complex = SimplicialComplex::from_facets(std::move(facets), isolated);
  return out;
}

std::vector<std::size_t> LatticePoint::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) s.push_back(i);
  }
  return s;
}

namespace {

// All level-`level` vectors of length n supported inside `positions`.
void points_on(const std::vector<std::size_t>& positions, std::size_t n, int level,
               std::vector<std::vector<int>>& out) {
  std::vector<int> c(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == positions.size()) {
      c[positions[k]] = left;
      out.push_back(c);
      c[positions[k]] = 0;
      return;
    }
    for (int v = left; v >= 0; --v) {
      c[positions[k]] = v;
      rec(k + 1, left - v);
    }
    c[positions[k]] = 0;
  };
  if (!positions.empty()) rec(0, level);
}

}  // namespace

HesdComplex hesd(const SimplicialComplex& delta, int r) {
  if (r < 1) throw RangeError("hesd needs r >= 1");
  const auto& fs = delta.facets();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      Face common;
      std::set_intersection(fs[i].begin(), fs[i].end(), fs[j].begin(), fs[j].end(),
                            std::back_inserter(common));
      if (common.size() > 1) {
        throw NotIncidenceLike("facets share more than one vertex; hesd is undefined");
      }
    }
  }

  const std::size_t n = delta.num_vertices();
  std::set<std::vector<std::vector<int>>> cells;
  for (const auto& f : fs) {
    std::vector<std::size_t> pos;
    for (auto v : f) pos.push_back(delta.vertex_index(v));
    std::vector<std::vector<int>> bases;
    points_on(pos, n, r - 1, bases);
    for (auto& a : bases) {
      std::vector<std::vector<int>> cell;
      for (auto j : pos) {
        auto b = a;
        ++b[j];
        cell.push_back(std::move(b));
      }
      std::sort(cell.begin(), cell.end());
      cells.insert(std::move(cell));
    }
  }

  std::set<std::vector<int>> points;
  for (const auto& cell : cells) points.insert(cell.begin(), cell.end());
  HesdComplex out;
  std::map<std::vector<int>, Vertex> id;
  for (const auto& p : points) {
    id[p] = static_cast<Vertex>(out.labels.size() + 1);
    out.labels.push_back({p, r});
  }
  std::vector<std::vector<Vertex>> facets;
  for (const auto& cell : cells) {
    std::vector<Vertex> f;
    for (const auto& p : cell) f.push_back(id.at(p));
    facets.push_back(std::move(f));
  }
  out.complex = SimplicialComplex::from_facets(std::move(facets));
  return out;
}

}  // namespace facering
