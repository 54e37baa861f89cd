#include "facering/monomial_algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "facering/errors.hpp"
#include "facering/subdivision.hpp"

namespace facering {

namespace {

Monomial squarefree(const SimplicialComplex& delta, const Face& f) {
  std::vector<Monomial::Entry> e;
  for (auto v : f) e.emplace_back(delta.vertex_index(v) + 1, 1);
  return Monomial::from_entries(std::move(e));
}

}  // namespace

IdealPresentation stanley_reisner_generators(const SimplicialComplex& delta) {
  IdealPresentation ideal;
  ideal.ambient_vars = delta.num_vertices();
  std::vector<Face> prev = {Face{}};
  // A minimal non-face of size s is τ ∪ {v} with τ an (s-1)-face, v > max τ,
  // and every codimension-one subset a face.
  for (int s = 1; s <= delta.dimension() + 2; ++s) {
    std::set<Face> prev_set(prev.begin(), prev.end());
    std::vector<Face> minimal;
    for (const auto& tau : prev) {
      for (auto v : delta.vertices()) {
        if (!tau.empty() && v <= tau.back()) continue;
        Face sigma = tau;
        sigma.push_back(v);
        if (delta.is_face(sigma)) continue;
        bool all_faces = true;
        for (std::size_t j = 0; j < sigma.size() && all_faces; ++j) {
          Face g = sigma;
          g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
          all_faces = prev_set.count(g) > 0;
        }
        if (all_faces) minimal.push_back(std::move(sigma));
      }
    }
    std::sort(minimal.begin(), minimal.end());
    for (const auto& m : minimal) ideal.generators.emplace_back(squarefree(delta, m));
    if (s - 1 <= delta.dimension()) prev = faces(delta, s - 1);
  }
  return ideal;
}

IdealPresentation facet_ideal(const SimplicialComplex& delta) {
  IdealPresentation ideal;
  ideal.ambient_vars = delta.num_vertices();
  for (const auto& f : delta.facets()) ideal.generators.emplace_back(squarefree(delta, f));
  return ideal;
}

ArtinianFrame::ArtinianFrame(SimplicialComplex delta, std::vector<int> caps)
    : delta_(std::move(delta)), caps_(std::move(caps)) {
  if (caps_.size() != delta_.num_vertices()) {
    throw RangeError("caps vector has " + std::to_string(caps_.size()) + " entries for " +
                     std::to_string(delta_.num_vertices()) + " vertices");
  }
  for (auto c : caps_) {
    if (c < 2) throw RangeError("exponent caps must be at least 2");
  }
}

ArtinianFrame ArtinianFrame::uniform(SimplicialComplex delta, int a) {
  const std::size_t n = delta.num_vertices();
  return ArtinianFrame(std::move(delta), std::vector<int>(n, a));
}

int ArtinianFrame::socle_degree() const {
  int best = 0;
  for (const auto& f : delta_.facets()) {
    int s = 0;
    for (auto v : f) s += caps_[delta_.vertex_index(v)] - 1;
    best = std::max(best, s);
  }
  return best;
}

bool ArtinianFrame::is_standard(const Monomial& m) const {
  Face support;
  for (const auto& [var, e] : m.entries()) {
    if (var > caps_.size() || e >= caps_[var - 1]) return false;
    support.push_back(delta_.vertices()[var - 1]);
  }
  return delta_.is_face(support);
}

std::vector<Monomial> face_monomials(const SimplicialComplex& delta, int k,
                                     const std::vector<int>* caps) {
  if (k < 0) return {};
  std::set<Monomial, GrlexDescending> found;
  for (const auto& f : delta.facets()) {
    std::vector<std::size_t> vars;
    for (auto v : f) vars.push_back(delta.vertex_index(v) + 1);
    std::vector<Monomial::Entry> current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i == vars.size()) {
        if (left == 0) found.insert(Monomial::from_entries(current));
        return;
      }
      const int bound = caps ? std::min(left, (*caps)[vars[i] - 1] - 1) : left;
      for (int e = bound; e >= 0; --e) {
        if (e > 0) current.emplace_back(vars[i], e);
        rec(i + 1, left - e);
        if (e > 0) current.pop_back();
      }
    };
    rec(0, k);
  }
  return {found.begin(), found.end()};
}

std::vector<Monomial> standard_basis(const ArtinianFrame& a, int k) {
  return face_monomials(a.complex(), k, &a.caps());
}

BasisIndex index_basis(const std::vector<Monomial>& basis) {
  BasisIndex idx;
  idx.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

std::size_t hilbert_function(const ArtinianFrame& a, int k) { return standard_basis(a, k).size(); }

ExactMatrix multiplication_matrix(const ArtinianFrame& a, const Polynomial& f, int k) {
  if (f.is_zero() || !f.is_homogeneous()) {
    throw HomogeneityError("multiplier must be a nonzero homogeneous polynomial");
  }
  const auto source = standard_basis(a, k);
  const auto target = standard_basis(a, k + f.degree());
  const auto index = index_basis(target);
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < source.size(); ++c) {
    for (const auto& [m, coeff] : f.terms()) {
      auto it = index.find(source[c] * m);
      if (it != index.end()) t.push_back({it->second, c, coeff});
    }
  }
  return ExactMatrix::from_triplets(target.size(), source.size(), std::move(t));
}

LogMatrix log_matrix(const IdealPresentation& ideal) {
  LogMatrix lm;
  std::size_t n = ideal.ambient_vars;
  for (const auto& g : ideal.generators) {
    if (!g.is_monomial()) throw MonomialError("log matrix needs monomial generators: " + g.to_string());
    n = std::max(n, g.max_variable());
  }
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < ideal.generators.size(); ++r) {
    const Monomial& m = ideal.generators[r].terms().begin()->first;
    for (const auto& [var, e] : m.entries()) t.push_back({r, var - 1, Rational(e)});
    lm.row_labels.push_back(m);
  }
  lm.matrix = ExactMatrix::from_triplets(ideal.generators.size(), n, std::move(t));
  return lm;
}

std::size_t analytic_spread(const IdealPresentation& ideal) {
  const auto lm = log_matrix(ideal);
  for (const auto& m : lm.row_labels) {
    if (m.degree() != lm.row_labels.front().degree()) {
      throw EquigenerationError("analytic spread via the log matrix needs equal generator degrees");
    }
  }
  return rank(lm.matrix);
}

HesdLogComparison multiplication_equals_hesd_log(const SimplicialComplex& delta, int a) {
  if (!delta.is_pure()) throw PurityError("the hesd correspondence needs a pure complex");
  if (a < 2) throw RangeError("the hesd correspondence needs a > 1");
  const int d = delta.dimension();
  const auto inc = incidence_complex(delta, d);
  const auto sub = hesd(inc.complex, a - 1);

  HesdLogComparison out;
  out.log = log_matrix(facet_ideal(sub.complex)).matrix;

  const ArtinianFrame frame = ArtinianFrame::uniform(delta, a);
  const int t = d * (a - 1);
  const auto cols = standard_basis(frame, t);
  const auto rows = standard_basis(frame, t + 1);
  out.multiplication = multiplication_matrix(frame, sum_of_variables(delta.num_vertices()), t);

  // Column map: m = ω_F / prod x_j^{c_j} for a facet F ⊇ supp(m) goes to the
  // lattice point sum_j c_j e_{F \ j} over the ridges of Δ.
  std::map<std::vector<int>, std::size_t> label_pos;
  for (std::size_t i = 0; i < sub.labels.size(); ++i) label_pos[sub.labels[i].coords] = i;
  const std::size_t num_ridges = inc.faces.size();
  auto ridge_point = [&](const Monomial& m, const Face& facet) {
    std::vector<int> p(num_ridges, 0);
    for (std::size_t j = 0; j < facet.size(); ++j) {
      const std::size_t var = delta.vertex_index(facet[j]) + 1;
      const int c = a - 1 - m.exponent(var);
      if (c == 0) continue;
      Face ridge = facet;
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(j));
      const auto r = std::lower_bound(inc.faces.begin(), inc.faces.end(), ridge) - inc.faces.begin();
      p[static_cast<std::size_t>(r)] += c;
    }
    return p;
  };

  out.col_map.assign(cols.size(), 0);
  std::vector<bool> hit_col(sub.labels.size(), false);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::optional<std::vector<int>> point;
    for (const auto& facet : delta.facets()) {
      Face support;
      for (auto var : cols[c].support()) support.push_back(delta.vertices()[var - 1]);
      if (!std::includes(facet.begin(), facet.end(), support.begin(), support.end())) continue;
      auto p = ridge_point(cols[c], facet);
      if (point && *point != p) {
        out.detail = "monomial " + cols[c].to_string() + " maps differently through two facets";
        return out;
      }
      point = std::move(p);
    }
    auto it = point ? label_pos.find(*point) : label_pos.end();
    if (it == label_pos.end() || hit_col[it->second]) {
      out.detail = "column monomial " + cols[c].to_string() + " has no distinct hesd vertex";
      return out;
    }
    hit_col[it->second] = true;
    out.col_map[c] = it->second;
  }
  if (cols.size() != sub.labels.size()) {
    out.detail = "column count differs from the hesd vertex count";
    return out;
  }

  // Row map: the support of each row, read through the column map, must be
  // a facet of the subdivision.
  std::map<Face, std::size_t> facet_pos;
  for (std::size_t i = 0; i < sub.complex.facets().size(); ++i) {
    facet_pos[sub.complex.facets()[i]] = i;
  }
  std::vector<Face> row_sets(rows.size());
  for (const auto& e : out.multiplication.triplets()) {
    row_sets[e.row].push_back(static_cast<Vertex>(out.col_map[e.col] + 1));
  }
  out.row_map.assign(rows.size(), 0);
  std::vector<bool> hit_row(facet_pos.size(), false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::sort(row_sets[r].begin(), row_sets[r].end());
    auto it = facet_pos.find(row_sets[r]);
    if (it == facet_pos.end() || hit_row[it->second]) {
      out.detail = "row monomial " + rows[r].to_string() + " does not match a distinct hesd facet";
      return out;
    }
    hit_row[it->second] = true;
    out.row_map[r] = it->second;
  }
  if (rows.size() != facet_pos.size()) {
    out.detail = "row count differs from the hesd facet count";
    return out;
  }

  out.equal = out.multiplication.permuted(out.row_map, out.col_map) == out.log;
  if (!out.equal) out.detail = "entries differ under the labeled bijection";
  return out;
}

}  // namespace facering
