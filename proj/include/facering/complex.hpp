#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "facering/exact_matrix.hpp"

namespace facering {

using Vertex = int;
using Face = std::vector<Vertex>;  // sorted ascending, duplicate-free

/// Finite simplicial complex given by its facets. Vertex ids are the labels
/// supplied by the caller; the i-th smallest vertex is the i-th polynomial
/// variable.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Keeps only inclusion-maximal facets, sorted and duplicate-free.
  /// `extra_vertices` become isolated vertices when they lie in no facet.
  static SimplicialComplex from_facets(std::vector<std::vector<Vertex>> facets,
                                       const std::vector<Vertex>& extra_vertices = {});

  /// The complex {∅}: dimension -1, produced as the link of a facet.
  static SimplicialComplex empty_face_complex();

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return dim_; }
  bool is_pure() const;
  bool is_face(const Face& sigma) const;

  /// 0-based position of `v` in the vertex list; throws RangeError if absent.
  std::size_t vertex_index(Vertex v) const;

  std::string name;
  std::optional<bool> declared_sphere;
  std::optional<bool> declared_collapsible;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_ && a.vertices_ == b.vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Face> facets_;
  int dim_ = -1;
};

/// All faces of dimension k (k = -1 gives {∅}), sorted.
std::vector<Face> faces(const SimplicialComplex& delta, int k);

/// Every face from dimension -1 up to dim Δ, grouped by dimension + 1.
std::vector<std::vector<Face>> face_lattice(const SimplicialComplex& delta);

struct FHProfile {
  std::vector<std::int64_t> f;  // f_{-1}, f_0, ..., f_d
  std::vector<std::int64_t> h;  // h_0, ..., h_{d+1}
  int h_degree = 0;
};

FHProfile fh_profile(const SimplicialComplex& delta);

SimplicialComplex link(const SimplicialComplex& delta, const Face& sigma);

struct HomologyReport {
  std::vector<std::size_t> ranks;  // ranks[i + 1] = dim H̃_i, i = -1..d
  std::optional<std::vector<Rational>> top_cycle;  // indexed by facets (sorted d-faces)

  std::size_t rank_at(int i) const;
};

/// Boundary map C_k -> C_{k-1} (rows: (k-1)-faces, cols: k-faces) with the
/// sign (-1)^j for deleting the j-th vertex. k = 0 gives the augmentation.
ExactMatrix boundary_matrix(const SimplicialComplex& delta, int k);

HomologyReport homology(const SimplicialComplex& delta);

struct CohenMacaulayResult {
  bool holds = true;
  std::optional<Face> witness_face;
  int witness_degree = 0;
};

CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& delta);

struct PseudomanifoldStatus {
  bool pure = false;
  bool strongly_connected = false;
  std::size_t max_ridge_degree = 0;
  std::optional<SimplicialComplex> boundary;  // absent when no ridge has degree 1
  bool orientable = false;

  bool is_pseudomanifold() const { return pure && strongly_connected && max_ridge_degree <= 2; }
};

PseudomanifoldStatus pseudomanifold_status(const SimplicialComplex& delta);

bool is_homology_sphere(const SimplicialComplex& delta);

struct Coloring {
  std::map<Vertex, int> assignment;  // colors 1..k
  int k = 0;
};

/// True iff adjacent vertices get distinct colors in 1..k.
bool is_proper_coloring(const SimplicialComplex& delta, const Coloring& rho);

/// Proper (d+1)-coloring of the 1-skeleton, or nothing. Throws PurityError
/// on non-pure input.
std::optional<Coloring> balanced_coloring(const SimplicialComplex& delta);

struct CollapseStep {
  Face free_face;
  Face coface;
};

struct CollapseCertificate {
  std::vector<CollapseStep> steps;
  SimplicialComplex residual;
};

constexpr std::size_t kDefaultCollapseBudget = 1000000;

std::optional<CollapseCertificate> collapse_search(const SimplicialComplex& delta, int target_dim,
                                                   std::size_t budget = kDefaultCollapseBudget);

/// Replays the steps from `delta`; true iff every step is an elementary
/// collapse and the remaining faces generate exactly `cert.residual`.
bool replay_collapse(const SimplicialComplex& delta, const CollapseCertificate& cert);

}  // namespace facering
