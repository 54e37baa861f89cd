#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "facering/complex.hpp"
#include "facering/errors.hpp"
#include "facering/fixtures.hpp"

using namespace facering;

namespace {

// All faces by enumerating subsets of each facet.
std::set<Face> brute_faces(const SimplicialComplex& c) {
  std::set<Face> out;
  for (const auto& f : c.facets()) {
    const std::size_t n = f.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Face s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      out.insert(s);
    }
  }
  return out;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<Vertex>& perm) {
  std::vector<std::vector<Vertex>> facets;
  for (const auto& f : c.facets()) {
    std::vector<Vertex> g;
    for (auto v : f) g.push_back(perm[c.vertex_index(v)]);
    facets.push_back(g);
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace

TEST(Complex, FromFacetsKeepsMaximalFacets) {
  const auto c3 = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(c3.dimension(), 1);
  EXPECT_EQ(c3.facets().size(), 3u);
  const auto s = SimplicialComplex::from_facets({{1, 2, 3}, {1, 2}});
  EXPECT_EQ(s.facets(), (std::vector<Face>{{1, 2, 3}}));
  const auto oct = builtin_fixture("OCT");
  EXPECT_EQ(oct.dimension(), 2);
  EXPECT_EQ(oct.facets().size(), 8u);
}

TEST(Complex, RejectsInvalidInput) {
  EXPECT_THROW(SimplicialComplex::from_facets({{1, 1, 2}}), InvalidComplex);
  EXPECT_THROW(SimplicialComplex::from_facets({{-1, 2}}), InvalidComplex);
  EXPECT_THROW(builtin_fixture("NOPE"), InputError);
}

TEST(Complex, EmptyFaceComplex) {
  const auto e = SimplicialComplex::empty_face_complex();
  EXPECT_EQ(e.dimension(), -1);
  EXPECT_EQ(e.num_vertices(), 0u);
  EXPECT_EQ(fh_profile(e).f, (std::vector<std::int64_t>{1}));
}

TEST(Complex, FacesMatchSubsetEnumeration) {
  for (const auto& name : builtin_fixture_names()) {
    const auto c = builtin_fixture(name);
    const auto all = brute_faces(c);
    for (int k = -1; k <= c.dimension(); ++k) {
      std::vector<Face> expect;
      for (const auto& f : all)
        if (static_cast<int>(f.size()) == k + 1) expect.push_back(f);
      auto got = faces(c, k);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expect) << name << " k=" << k;
    }
    EXPECT_THROW(faces(c, c.dimension() + 1), DimensionError);
    EXPECT_THROW(faces(c, -2), DimensionError);
  }
  EXPECT_EQ(faces(builtin_fixture("OCT"), 1).size(), 12u);
  EXPECT_EQ(faces(builtin_fixture("OCT"), 0).size(), 6u);
}

TEST(Complex, FHProfile) {
  const auto oct = fh_profile(builtin_fixture("OCT"));
  EXPECT_EQ(oct.f, (std::vector<std::int64_t>{1, 6, 12, 8}));
  EXPECT_EQ(oct.h, (std::vector<std::int64_t>{1, 3, 3, 1}));
  EXPECT_EQ(oct.h_degree, 3);
  const auto c4 = fh_profile(builtin_fixture("C4"));
  EXPECT_EQ(c4.f, (std::vector<std::int64_t>{1, 4, 4}));
  EXPECT_EQ(c4.h, (std::vector<std::int64_t>{1, 2, 1}));
  EXPECT_EQ(c4.h_degree, 2);
  const auto pt = fh_profile(SimplicialComplex::from_facets({{1}}));
  EXPECT_EQ(pt.f, (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(pt.h, (std::vector<std::int64_t>{1, 0}));
  // Sum of h equals the number of facets of a pure complex; h from f via the
  // inverse relation f_{k-1} = Σ C(d+1-i, k-i) h_i.
  for (const auto& name : builtin_fixture_names()) {
    const auto c = builtin_fixture(name);
    const auto p = fh_profile(c);
    const int d = c.dimension();
    for (int k = 0; k <= d + 1; ++k) {
      std::int64_t s = 0;
      for (int i = 0; i <= k; ++i) s += binom(d + 1 - i, k - i) * p.h[i];
      EXPECT_EQ(s, p.f[k]) << name;
    }
  }
}

TEST(Complex, LinkMatchesDefinition) {
  const auto oct = builtin_fixture("OCT");
  const auto lk = link(oct, {1});
  EXPECT_EQ(lk.vertices(), (std::vector<Vertex>{3, 4, 5, 6}));
  EXPECT_EQ(lk.facets().size(), 4u);
  EXPECT_EQ(fh_profile(lk).f, (std::vector<std::int64_t>{1, 4, 4}));
  const auto same = link(oct, {});
  EXPECT_EQ(same.facets(), oct.facets());
  const auto lc3 = link(builtin_fixture("C3"), {1});
  EXPECT_EQ(lc3.facets(), (std::vector<Face>{{2}, {3}}));
  EXPECT_EQ(link(oct, {1, 3, 5}).dimension(), -1);
  EXPECT_THROW(link(oct, {1, 2}), NotAFace);
  // Brute force: faces of the link are the τ with τ ∩ σ = ∅ and τ ∪ σ a face.
  for (const auto& name : builtin_fixture_names()) {
    const auto c = builtin_fixture(name);
    const auto all = brute_faces(c);
    for (const auto& v : c.vertices()) {
      std::set<Face> expect;
      for (const auto& f : all) {
        if (std::find(f.begin(), f.end(), v) == f.end()) continue;
        Face t;
        for (auto w : f)
          if (w != v) t.push_back(w);
        expect.insert(t);
      }
      EXPECT_EQ(brute_faces(link(c, {v})), expect) << name << " v=" << v;
    }
  }
}

TEST(Complex, HomologyOfKnownSpaces) {
  EXPECT_EQ(homology(builtin_fixture("OCT")).ranks, (std::vector<std::size_t>{0, 0, 0, 1}));
  EXPECT_TRUE(homology(builtin_fixture("OCT")).top_cycle.has_value());
  EXPECT_EQ(homology(builtin_fixture("C4")).ranks, (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(homology(builtin_fixture("DUNCE")).ranks, (std::vector<std::size_t>{0, 0, 0, 0}));
  // Rational coefficients kill the torsion of the projective plane.
  EXPECT_EQ(homology(builtin_fixture("RP2")).ranks, (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_EQ(homology(SimplicialComplex::from_facets({{1, 2}, {3, 4}})).ranks,
            (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_EQ(homology(SimplicialComplex::empty_face_complex()).ranks, (std::vector<std::size_t>{1}));
}

TEST(Complex, EulerCharacteristicMatchesHomology) {
  for (const auto& name : builtin_fixture_names()) {
    const auto c = builtin_fixture(name);
    const auto f = fh_profile(c).f;
    const auto h = homology(c);
    std::int64_t chi_f = 0, chi_h = 0;
    for (int i = -1; i <= c.dimension(); ++i) {
      const std::int64_t sign = (i + 2) % 2 == 0 ? 1 : -1;
      chi_f += sign * f[i + 1];
      chi_h += sign * static_cast<std::int64_t>(h.rank_at(i));
    }
    EXPECT_EQ(chi_f, chi_h) << name;
  }
}

TEST(Complex, TopCycleIsACycle) {
  for (const char* name : {"OCT", "CROSS4", "C4", "TETRA", "BIPYR"}) {
    const auto c = builtin_fixture(name);
    const auto h = homology(c);
    ASSERT_TRUE(h.top_cycle) << name;
    const auto b = boundary_matrix(c, c.dimension());
    for (const auto& x : b.apply(*h.top_cycle)) EXPECT_EQ(x, 0) << name;
  }
}

TEST(Complex, BoundaryOfBoundaryVanishes) {
  for (const auto& name : builtin_fixture_names()) {
    const auto c = builtin_fixture(name);
    for (int k = 1; k <= c.dimension(); ++k) {
      const auto b1 = boundary_matrix(c, k - 1).to_dense();
      const auto b2 = boundary_matrix(c, k).to_dense();
      for (std::size_t i = 0; i < b1.size(); ++i) {
        for (std::size_t j = 0; j < (b2.empty() ? 0 : b2[0].size()); ++j) {
          Rational s = 0;
          for (std::size_t l = 0; l < b2.size(); ++l) s += b1[i][l] * b2[l][j];
          EXPECT_EQ(s, 0) << name;
        }
      }
    }
  }
}

TEST(Complex, CohenMacaulay) {
  EXPECT_TRUE(is_cohen_macaulay(builtin_fixture("OCT")).holds);
  EXPECT_TRUE(is_cohen_macaulay(builtin_fixture("DUNCE")).holds);
  EXPECT_TRUE(is_cohen_macaulay(builtin_fixture("RP2")).holds);
  const auto two = is_cohen_macaulay(SimplicialComplex::from_facets({{1, 2}, {3, 4}}));
  EXPECT_FALSE(two.holds);
  ASSERT_TRUE(two.witness_face.has_value());
  EXPECT_TRUE(two.witness_face->empty());
  EXPECT_EQ(two.witness_degree, 0);
  // Graphs are Cohen-Macaulay exactly when connected.
  EXPECT_TRUE(is_cohen_macaulay(builtin_fixture("PATH3")).holds);
  // Two triangles sharing a vertex: the link of that vertex is disconnected.
  EXPECT_FALSE(is_cohen_macaulay(SimplicialComplex::from_facets({{1, 2, 3}, {1, 4, 5}})).holds);
}

TEST(Complex, Pseudomanifolds) {
  const auto oct = pseudomanifold_status(builtin_fixture("OCT"));
  EXPECT_TRUE(oct.is_pseudomanifold());
  EXPECT_EQ(oct.max_ridge_degree, 2u);
  EXPECT_FALSE(oct.boundary.has_value());
  EXPECT_TRUE(oct.orientable);
  const auto fan = pseudomanifold_status(builtin_fixture("FAN4"));
  EXPECT_TRUE(fan.pure);
  EXPECT_TRUE(fan.strongly_connected);
  ASSERT_TRUE(fan.boundary.has_value());
  EXPECT_GE(fan.boundary->dimension(), 0);
  EXPECT_FALSE(pseudomanifold_status(SimplicialComplex::from_facets({{1, 2, 3}, {4, 5, 6}})).strongly_connected);
  EXPECT_FALSE(pseudomanifold_status(builtin_fixture("RP2")).orientable);
  EXPECT_FALSE(pseudomanifold_status(builtin_fixture("DUNCE")).is_pseudomanifold());
}

TEST(Complex, HomologySpheres) {
  for (const char* s : {"OCT", "CROSS4", "C3", "C4", "TETRA", "BIPYR"}) {
    EXPECT_TRUE(is_homology_sphere(builtin_fixture(s))) << s;
  }
  for (const char* s : {"FAN4", "DUNCE", "RP2", "PATH3", "SIMPLEX2", "BALL10", "EDGE"}) {
    EXPECT_FALSE(is_homology_sphere(builtin_fixture(s))) << s;
  }
  for (const auto& name : builtin_fixture_names()) {
    const auto c = builtin_fixture(name);
    if (c.declared_sphere) EXPECT_EQ(is_homology_sphere(c), *c.declared_sphere) << name;
  }
}

TEST(Complex, BalancedColorings) {
  const auto oct = builtin_fixture("OCT");
  const auto rho = balanced_coloring(oct);
  ASSERT_TRUE(rho);
  EXPECT_TRUE(is_proper_coloring(oct, *rho));
  EXPECT_EQ(rho->assignment.at(1), rho->assignment.at(2));
  EXPECT_EQ(rho->assignment.at(3), rho->assignment.at(4));
  EXPECT_EQ(rho->assignment.at(5), rho->assignment.at(6));
  EXPECT_FALSE(balanced_coloring(builtin_fixture("C3")));
  const auto c4 = balanced_coloring(builtin_fixture("C4"));
  ASSERT_TRUE(c4);
  EXPECT_NE(c4->assignment.at(1), c4->assignment.at(2));
  EXPECT_EQ(c4->assignment.at(1), c4->assignment.at(3));
  EXPECT_FALSE(balanced_coloring(builtin_fixture("BIPYR")));
  EXPECT_THROW(balanced_coloring(SimplicialComplex::from_facets({{1, 2, 3}, {3, 4}})), PurityError);
  Coloring bad{{{1, 1}, {2, 1}, {3, 2}, {4, 2}}, 2};
  EXPECT_FALSE(is_proper_coloring(builtin_fixture("C4"), bad));
}

TEST(Complex, CollapseCertificates) {
  const auto simplex = builtin_fixture("SIMPLEX2");
  const auto c1 = collapse_search(simplex, 0);
  ASSERT_TRUE(c1);
  EXPECT_TRUE(replay_collapse(simplex, *c1));
  EXPECT_EQ(c1->residual.dimension(), 0);
  const auto fan = builtin_fixture("FAN4");
  const auto c2 = collapse_search(fan, 1);
  ASSERT_TRUE(c2);
  EXPECT_TRUE(replay_collapse(fan, *c2));
  EXPECT_LE(c2->residual.dimension(), 1);
  const auto c3 = collapse_search(fan, 0);
  ASSERT_TRUE(c3);
  EXPECT_EQ(c3->residual.num_vertices(), 1u);
  EXPECT_FALSE(collapse_search(builtin_fixture("DUNCE"), 0));
  EXPECT_FALSE(collapse_search(builtin_fixture("OCT"), 1));
  EXPECT_THROW(collapse_search(fan, -1), DimensionError);
  // A tampered certificate must fail replay.
  auto forged = *c2;
  ASSERT_FALSE(forged.steps.empty());
  std::swap(forged.steps.front().free_face, forged.steps.front().coface);
  EXPECT_FALSE(replay_collapse(fan, forged));
}

TEST(Complex, InvariantsSurviveRelabeling) {
  std::mt19937 rng(17);
  for (const auto& name : builtin_fixture_names()) {
    const auto c = builtin_fixture(name);
    std::vector<Vertex> perm;
    for (std::size_t i = 0; i < c.num_vertices(); ++i) perm.push_back(static_cast<Vertex>(10 + 3 * i));
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r = relabel(c, perm);
    EXPECT_EQ(fh_profile(r).f, fh_profile(c).f) << name;
    EXPECT_EQ(homology(r).ranks, homology(c).ranks) << name;
    EXPECT_EQ(is_cohen_macaulay(r).holds, is_cohen_macaulay(c).holds) << name;
    if (c.is_pure()) EXPECT_EQ(balanced_coloring(r).has_value(), balanced_coloring(c).has_value()) << name;
  }
}
