#include "facering/complex.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "facering/errors.hpp"

namespace facering {

namespace {

bool is_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void subsets_of_size(const Face& facet, std::size_t size, std::set<Face>& out) {
  if (size > facet.size()) return;
  std::vector<bool> pick(facet.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
  do {
    Face f;
    f.reserve(size);
    for (std::size_t i = 0; i < facet.size(); ++i) {
      if (pick[i]) f.push_back(facet[i]);
    }
    out.insert(std::move(f));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<Vertex>> facets,
                                                 const std::vector<Vertex>& extra_vertices) {
  if (facets.empty()) throw InvalidComplex("a complex needs at least one facet");
  for (auto& f : facets) {
    if (f.empty()) throw InvalidComplex("facets must be non-empty");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw InvalidComplex("facet lists a vertex twice");
    }
    if (f.front() < 0) throw InvalidComplex("vertex ids must be non-negative");
  }
  for (auto v : extra_vertices) {
    if (v < 0) throw InvalidComplex("vertex ids must be non-negative");
    facets.push_back({v});
  }
  // Larger facets first so maximality only needs a check against kept ones.
  std::sort(facets.begin(), facets.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  SimplicialComplex c;
  for (auto& f : facets) {
    const bool covered = std::any_of(c.facets_.begin(), c.facets_.end(),
                                     [&](const Face& g) { return is_subset(f, g); });
    if (!covered) c.facets_.push_back(std::move(f));
  }
  std::sort(c.facets_.begin(), c.facets_.end());
  std::set<Vertex> verts;
  for (const auto& f : c.facets_) {
    verts.insert(f.begin(), f.end());
    c.dim_ = std::max(c.dim_, static_cast<int>(f.size()) - 1);
  }
  c.vertices_.assign(verts.begin(), verts.end());
  return c;
}

SimplicialComplex SimplicialComplex::empty_face_complex() {
  SimplicialComplex c;
  c.facets_ = {Face{}};
  c.dim_ = -1;
  return c;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Face& f) {
    return static_cast<int>(f.size()) == dim_ + 1;
  });
}

bool SimplicialComplex::is_face(const Face& sigma) const {
  Face s = sigma;
  std::sort(s.begin(), s.end());
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) { return is_subset(s, f); });
}

std::size_t SimplicialComplex::vertex_index(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw RangeError("vertex " + std::to_string(v) + " is not in the complex");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Face> faces(const SimplicialComplex& delta, int k) {
  if (k < -1 || k > delta.dimension()) {
    throw DimensionError("face dimension " + std::to_string(k) + " outside [-1, " +
                         std::to_string(delta.dimension()) + "]");
  }
  std::set<Face> out;
  for (const auto& f : delta.facets()) subsets_of_size(f, static_cast<std::size_t>(k + 1), out);
  return {out.begin(), out.end()};
}

std::vector<std::vector<Face>> face_lattice(const SimplicialComplex& delta) {
  std::vector<std::vector<Face>> all;
  for (int k = -1; k <= delta.dimension(); ++k) all.push_back(faces(delta, k));
  return all;
}

FHProfile fh_profile(const SimplicialComplex& delta) {
  FHProfile p;
  const int d = delta.dimension();
  for (int k = -1; k <= d; ++k) p.f.push_back(static_cast<std::int64_t>(faces(delta, k).size()));
  // h_k = sum_{i=0}^{k} (-1)^{k-i} C(d+1-i, k-i) f_{i-1}
  for (int k = 0; k <= d + 1; ++k) {
    std::int64_t h = 0;
    for (int i = 0; i <= k; ++i) {
      const std::int64_t term = binomial(d + 1 - i, k - i) * p.f[static_cast<std::size_t>(i)];
      h += ((k - i) % 2 == 0) ? term : -term;
    }
    p.h.push_back(h);
  }
  p.h_degree = 0;
  for (int k = 0; k <= d + 1; ++k) {
    if (p.h[static_cast<std::size_t>(k)] != 0) p.h_degree = k;
  }
  return p;
}

SimplicialComplex link(const SimplicialComplex& delta, const Face& sigma_in) {
  Face sigma = sigma_in;
  std::sort(sigma.begin(), sigma.end());
  if (!delta.is_face(sigma)) throw NotAFace("the given vertex set is not a face");
  if (sigma.empty()) return delta;
  std::vector<Face> rest;
  for (const auto& f : delta.facets()) {
    if (!is_subset(sigma, f)) continue;
    Face tau;
    std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(tau));
    rest.push_back(std::move(tau));
  }
  if (std::all_of(rest.begin(), rest.end(), [](const Face& t) { return t.empty(); })) {
    return SimplicialComplex::empty_face_complex();
  }
  rest.erase(std::remove_if(rest.begin(), rest.end(), [](const Face& t) { return t.empty(); }),
             rest.end());
  return SimplicialComplex::from_facets(std::move(rest));
}

std::size_t HomologyReport::rank_at(int i) const {
  const auto idx = static_cast<std::size_t>(i + 1);
  return (i < -1 || idx >= ranks.size()) ? 0 : ranks[idx];
}

namespace {

ExactMatrix boundary_from(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Face& f = upper[c];
    for (std::size_t j = 0; j < f.size(); ++j) {
      Face g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
      const auto it = std::lower_bound(lower.begin(), lower.end(), g);
      t.push_back({static_cast<std::size_t>(it - lower.begin()), c, Rational(j % 2 == 0 ? 1 : -1)});
    }
  }
  return ExactMatrix::from_triplets(lower.size(), upper.size(), std::move(t));
}

}  // namespace

ExactMatrix boundary_matrix(const SimplicialComplex& delta, int k) {
  return boundary_from(faces(delta, k - 1), faces(delta, k));
}

HomologyReport homology(const SimplicialComplex& delta) {
  const int d = delta.dimension();
  const auto lattice = face_lattice(delta);
  // boundary_rank[k + 1] = rank of ∂_k : C_k -> C_{k-1}, zero for k = -1.
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(d + 2), 0);
  for (int k = 0; k <= d; ++k) {
    const auto idx = static_cast<std::size_t>(k + 1);
    boundary_rank[idx] = rank(boundary_from(lattice[idx - 1], lattice[idx]));
  }
  HomologyReport r;
  for (int i = -1; i <= d; ++i) {
    const auto idx = static_cast<std::size_t>(i + 1);
    const std::size_t cycles = lattice[idx].size() - boundary_rank[idx];
    const std::size_t bounds = (i < d) ? boundary_rank[idx + 1] : 0;
    r.ranks.push_back(cycles - bounds);
  }
  if (d >= 0 && r.ranks.back() == 1) {
    const auto idx = static_cast<std::size_t>(d + 1);
    auto kb = kernel_basis(boundary_from(lattice[idx - 1], lattice[idx]));
    r.top_cycle = kb.vectors.front();
  }
  return r;
}

CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& delta) {
  CohenMacaulayResult res;
  for (const auto& level : face_lattice(delta)) {
    for (const auto& sigma : level) {
      const auto lk = link(delta, sigma);
      const auto h = homology(lk);
      for (int i = -1; i < lk.dimension(); ++i) {
        if (h.rank_at(i) != 0) {
          res.holds = false;
          res.witness_face = sigma;
          res.witness_degree = i;
          return res;
        }
      }
    }
  }
  return res;
}

PseudomanifoldStatus pseudomanifold_status(const SimplicialComplex& delta) {
  PseudomanifoldStatus s;
  s.pure = delta.is_pure();
  const auto& fs = delta.facets();
  const int d = delta.dimension();

  std::map<Face, std::vector<std::size_t>> ridge_owners;
  if (d >= 1) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (static_cast<int>(fs[i].size()) != d + 1) continue;
      for (std::size_t j = 0; j < fs[i].size(); ++j) {
        Face r = fs[i];
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
        ridge_owners[r].push_back(i);
      }
    }
  } else if (d == 0) {
    for (std::size_t i = 0; i < fs.size(); ++i) ridge_owners[Face{}].push_back(i);
  }

  std::vector<Face> boundary_ridges;
  for (const auto& [ridge, owners] : ridge_owners) {
    s.max_ridge_degree = std::max(s.max_ridge_degree, owners.size());
    if (owners.size() == 1) boundary_ridges.push_back(ridge);
  }
  if (!boundary_ridges.empty()) {
    if (boundary_ridges.front().empty()) {
      s.boundary = SimplicialComplex::empty_face_complex();
    } else {
      s.boundary = SimplicialComplex::from_facets(boundary_ridges);
    }
  }

  if (s.pure) {
    std::vector<std::vector<std::size_t>> adj(fs.size());
    for (const auto& [ridge, owners] : ridge_owners) {
      for (std::size_t a = 0; a < owners.size(); ++a) {
        for (std::size_t b = a + 1; b < owners.size(); ++b) {
          adj[owners[a]].push_back(owners[b]);
          adj[owners[b]].push_back(owners[a]);
        }
      }
    }
    std::vector<bool> seen(fs.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          q.push(w);
        }
      }
    }
    s.strongly_connected = reached == fs.size();
  }

  if (s.is_pseudomanifold() && !s.boundary.has_value()) {
    s.orientable = homology(delta).rank_at(d) == 1;
  }
  return s;
}

bool is_homology_sphere(const SimplicialComplex& delta) {
  const int d = delta.dimension();
  for (const auto& level : face_lattice(delta)) {
    for (const auto& sigma : level) {
      const auto lk = link(delta, sigma);
      const int expected = d - static_cast<int>(sigma.size());
      if (lk.dimension() != expected) return false;
      const auto h = homology(lk);
      for (int i = -1; i <= expected; ++i) {
        if (h.rank_at(i) != (i == expected ? 1U : 0U)) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<std::vector<std::size_t>> vertex_adjacency(const SimplicialComplex& delta) {
  std::vector<std::vector<std::size_t>> adj(delta.num_vertices());
  if (delta.dimension() < 1) return adj;
  for (const auto& e : faces(delta, 1)) {
    const auto a = delta.vertex_index(e[0]);
    const auto b = delta.vertex_index(e[1]);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

}  // namespace

bool is_proper_coloring(const SimplicialComplex& delta, const Coloring& rho) {
  for (auto v : delta.vertices()) {
    auto it = rho.assignment.find(v);
    if (it == rho.assignment.end() || it->second < 1 || it->second > rho.k) return false;
  }
  if (delta.dimension() < 1) return true;
  for (const auto& e : faces(delta, 1)) {
    if (rho.assignment.at(e[0]) == rho.assignment.at(e[1])) return false;
  }
  return true;
}

std::optional<Coloring> balanced_coloring(const SimplicialComplex& delta) {
  if (!delta.is_pure()) throw PurityError("balancedness is only defined here for pure complexes");
  const int k = delta.dimension() + 1;
  const auto adj = vertex_adjacency(delta);
  const std::size_t n = delta.num_vertices();
  std::vector<int> color(n, 0);

  std::function<bool(std::size_t)> assign = [&](std::size_t v) {
    if (v == n) return true;
    for (int c = 1; c <= k; ++c) {
      const bool clash = std::any_of(adj[v].begin(), adj[v].end(),
                                     [&](std::size_t w) { return color[w] == c; });
      if (clash) continue;
      color[v] = c;
      if (assign(v + 1)) return true;
    }
    color[v] = 0;
    return false;
  };
  if (!assign(0)) return std::nullopt;

  Coloring rho;
  rho.k = k;
  for (std::size_t i = 0; i < n; ++i) rho.assignment[delta.vertices()[i]] = color[i];
  return rho;
}

namespace {

// Face poset of a complex with the immediate-coface relation, used to run
// elementary collapses on an alive/dead mask.
struct FacePoset {
  std::vector<Face> faces;  // non-empty faces, sorted by (size desc, lex)
  std::map<Face, std::size_t> index;
  std::vector<std::vector<std::size_t>> cofaces;

  explicit FacePoset(const SimplicialComplex& delta) {
    for (int k = delta.dimension(); k >= 0; --k) {
      for (auto& f : facering::faces(delta, k)) faces.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = i;
    cofaces.resize(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (faces[i].size() < 2) continue;
      for (std::size_t j = 0; j < faces[i].size(); ++j) {
        Face g = faces[i];
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
        cofaces[index.at(g)].push_back(i);
      }
    }
  }

  // The unique alive immediate coface, if the face is free.
  std::optional<std::size_t> free_coface(const std::vector<bool>& alive, std::size_t i) const {
    std::optional<std::size_t> found;
    for (auto c : cofaces[i]) {
      if (!alive[c]) continue;
      if (found) return std::nullopt;
      found = c;
    }
    return found;
  }

  int dimension(const std::vector<bool>& alive) const {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (alive[i]) return static_cast<int>(faces[i].size()) - 1;
    }
    return -1;
  }

  SimplicialComplex residual(const std::vector<bool>& alive) const {
    std::vector<Face> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (!alive[i]) continue;
      const bool covered = std::any_of(cofaces[i].begin(), cofaces[i].end(),
                                       [&](std::size_t c) { return alive[c]; });
      if (!covered) maximal.push_back(faces[i]);
    }
    return SimplicialComplex::from_facets(std::move(maximal));
  }
};

}  // namespace

std::optional<CollapseCertificate> collapse_search(const SimplicialComplex& delta, int target_dim,
                                                   std::size_t budget) {
  if (target_dim < 0) throw DimensionError("collapse target dimension must be non-negative");
  const FacePoset poset(delta);
  std::vector<bool> alive(poset.faces.size(), true);
  std::set<std::vector<bool>> visited;
  std::vector<CollapseStep> steps;
  std::size_t spent = 0;

  // Depth-first search; candidate free faces are tried with top-dimensional
  // cofaces first, then in lexicographic order of the free face.
  std::function<bool()> search = [&]() {
    if (poset.dimension(alive) <= target_dim) return true;
    if (!visited.insert(alive).second) return false;
    std::vector<std::pair<std::size_t, std::size_t>> moves;
    for (std::size_t i = 0; i < poset.faces.size(); ++i) {
      if (!alive[i]) continue;
      if (auto c = poset.free_coface(alive, i)) moves.emplace_back(i, *c);
    }
    std::stable_sort(moves.begin(), moves.end(), [&](const auto& x, const auto& y) {
      const auto sx = poset.faces[x.second].size();
      const auto sy = poset.faces[y.second].size();
      if (sx != sy) return sx > sy;
      return poset.faces[x.first] < poset.faces[y.first];
    });
    for (const auto& [f, c] : moves) {
      if (spent++ >= budget) return false;
      alive[f] = false;
      alive[c] = false;
      steps.push_back({poset.faces[f], poset.faces[c]});
      if (search()) return true;
      steps.pop_back();
      alive[f] = true;
      alive[c] = true;
    }
    return false;
  };

  if (!search()) return std::nullopt;
  return CollapseCertificate{steps, poset.residual(alive)};
}

bool replay_collapse(const SimplicialComplex& delta, const CollapseCertificate& cert) {
  const FacePoset poset(delta);
  std::vector<bool> alive(poset.faces.size(), true);
  for (const auto& step : cert.steps) {
    auto fi = poset.index.find(step.free_face);
    auto ci = poset.index.find(step.coface);
    if (fi == poset.index.end() || ci == poset.index.end()) return false;
    if (!alive[fi->second] || !alive[ci->second]) return false;
    const auto c = poset.free_coface(alive, fi->second);
    if (!c || *c != ci->second) return false;
    alive[fi->second] = false;
    alive[ci->second] = false;
  }
  return poset.residual(alive) == cert.residual;
}

}  // namespace facering
