#include "facering/lefschetz.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "facering/errors.hpp"
#include "facering/parallel.hpp"
#include "facering/subdivision.hpp"

namespace facering {

SopCandidate make_sop_candidate(std::vector<Polynomial> theta, int total_degree_t) {
  SopCandidate c;
  for (const auto& g : theta) {
    if (g.is_zero() || !g.is_homogeneous()) {
      throw HomogeneityError("system of parameters entries must be nonzero homogeneous forms: " +
                             g.to_string());
    }
    c.degrees.push_back(g.degree());
  }
  c.theta = std::move(theta);
  c.total_degree_t = total_degree_t;
  return c;
}

Quotient::Quotient(SimplicialComplex delta, std::vector<Polynomial> extra)
    : delta_(std::move(delta)), extra_(std::move(extra)), caps_(delta_.num_vertices(), 0) {
  for (const auto& g : extra_) {
    if (!g.is_homogeneous()) throw HomogeneityError("generator is not homogeneous: " + g.to_string());
    if (g.is_zero()) continue;
    if (g.max_variable() > delta_.num_vertices()) {
      throw RangeError("generator uses a variable beyond the vertex count: " + g.to_string());
    }
    if (!g.is_monomial()) {
      forms_.push_back(g);
      continue;
    }
    const Monomial& m = g.terms().begin()->first;
    if (m.entries().size() == 1) {
      const auto [var, e] = m.entries().front();
      int& cap = caps_[var - 1];
      cap = cap == 0 ? e : std::min(cap, e);
    } else {
      monomial_gens_.push_back(m);
    }
  }
}

bool Quotient::survives(const Monomial& m) const {
  for (const auto& [var, e] : m.entries()) {
    if (var > caps_.size()) return false;
    if (caps_[var - 1] != 0 && e >= caps_[var - 1]) return false;
  }
  for (const auto& g : monomial_gens_) {
    if (g.divides(m)) return false;
  }
  Face support;
  for (auto var : m.support()) support.push_back(delta_.vertices()[var - 1]);
  return delta_.is_face(support);
}

std::vector<Monomial> Quotient::basis(int k) const {
  if (k < 0) return {};
  std::vector<int> bounds(caps_.size());
  for (std::size_t i = 0; i < caps_.size(); ++i) bounds[i] = caps_[i] == 0 ? k + 1 : caps_[i];
  auto mons = face_monomials(delta_, k, &bounds);
  mons.erase(std::remove_if(mons.begin(), mons.end(),
                            [&](const Monomial& m) {
                              return std::any_of(monomial_gens_.begin(), monomial_gens_.end(),
                                                 [&](const Monomial& g) { return g.divides(m); });
                            }),
             mons.end());
  return mons;
}

ExactMatrix Quotient::spanning_matrix(int k, const std::vector<Monomial>& basis) const {
  const auto index = index_basis(basis);
  std::map<int, std::vector<Monomial>> lower;
  std::vector<Triplet> t;
  std::size_t row = 0;
  for (const auto& g : forms_) {
    const int shift = k - g.degree();
    if (shift < 0) continue;
    auto it = lower.find(shift);
    if (it == lower.end()) it = lower.emplace(shift, this->basis(shift)).first;
    for (const auto& m : it->second) {
      bool any = false;
      for (const auto& [term, c] : g.terms()) {
        auto pos = index.find(m * term);
        if (pos == index.end()) continue;
        t.push_back({row, pos->second, c});
        any = true;
      }
      if (any) ++row;
    }
  }
  return ExactMatrix::from_triplets(row, basis.size(), std::move(t));
}

Polynomial Quotient::reduce(const Polynomial& p) const {
  return p.filter([&](const Monomial& m) { return survives(m); });
}

std::size_t Quotient::hilbert(int k) const {
  const auto b = basis(k);
  if (b.empty()) return 0;
  return b.size() - rank(spanning_matrix(k, b));
}

std::vector<std::size_t> Quotient::hilbert_series(int up_to) const {
  std::vector<std::size_t> hf(static_cast<std::size_t>(std::max(up_to + 1, 0)));
  parallel_for(hf.size(), [&](std::size_t k) { hf[k] = hilbert(static_cast<int>(k)); });
  return hf;
}

int Quotient::max_generator_degree() const {
  int d = 0;
  for (const auto& g : extra_) d = std::max(d, g.degree());
  return d;
}

std::size_t quotient_hilbert(const SimplicialComplex& delta, const std::vector<Polynomial>& extra,
                             int k) {
  return Quotient(delta, extra).hilbert(k);
}

SopVerdict is_sop(const SimplicialComplex& delta, const SopCandidate& cand) {
  const int d = delta.dimension();
  if (cand.theta.size() != static_cast<std::size_t>(d + 1)) {
    throw ArityError("a system of parameters needs exactly " + std::to_string(d + 1) +
                     " forms, got " + std::to_string(cand.theta.size()));
  }
  const Quotient q(delta, cand.theta);
  SopVerdict v;
  int excess = 0;
  for (const auto& g : cand.theta) excess += std::max(g.degree(), 1) - 1;
  v.degree_bound = 1 + excess + fh_profile(delta).h_degree;
  v.hilbert = q.hilbert_series(v.degree_bound);
  for (std::size_t k = 0; k < v.hilbert.size(); ++k) {
    if (v.hilbert[k] == 0) {
      v.is_sop = true;
      v.vanishing_degree = static_cast<int>(k);
      v.hilbert.resize(k + 1);
      break;
    }
  }
  return v;
}

int artinian_degree_bound(const SimplicialComplex& delta, const std::vector<Polynomial>& extra) {
  const int d = delta.dimension();
  int D = 1;
  for (const auto& g : extra) D = std::max(D, g.degree());
  return std::max(fh_profile(delta).h_degree, d + 1) + (d + 1) * (D - 1) + 1;
}

void require_artinian(const Quotient& q) {
  const int bound = artinian_degree_bound(q.complex(), q.extra());
  if (q.hilbert(bound) != 0) {
    throw NotArtinian("quotient does not vanish in degree " + std::to_string(bound));
  }
}

namespace {

Polynomial from_coordinates(const std::vector<Rational>& coords, const std::vector<Monomial>& basis) {
  Polynomial p;
  for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(basis[i], coords[i]);
  return p;
}

InverseSystemPiece piece_from(const Quotient& q, int k) {
  InverseSystemPiece piece;
  piece.degree = k;
  const auto basis = q.basis(k);
  if (basis.empty()) return piece;
  // One equation per (generator, u): the coefficient of u in g ∘ F vanishes.
  std::size_t num_rows = 0;
  std::vector<Triplet> t;
  for (const auto& g : q.extra()) {
    if (g.is_zero() || g.is_monomial()) continue;  // monomial parts are built into the basis
    std::map<Monomial, std::size_t, GrlexDescending> rows;
    for (std::size_t c = 0; c < basis.size(); ++c) {
      for (const auto& [a, coeff] : g.terms()) {
        if (!a.divides(basis[c])) continue;
        const auto u = a.quotient_of(basis[c]);
        auto it = rows.emplace(u, num_rows + rows.size()).first;
        t.push_back({it->second, c, coeff});
      }
    }
    num_rows += rows.size();
  }
  const auto kb = kernel_basis(ExactMatrix::from_triplets(num_rows, basis.size(), std::move(t)));
  for (const auto& v : kb.vectors) piece.basis.push_back(from_coordinates(v, basis));
  return piece;
}

}  // namespace

InverseSystemPiece inverse_system_piece(const SimplicialComplex& delta,
                                        const std::vector<Polynomial>& extra, int k) {
  const Quotient q(delta, extra);
  require_artinian(q);
  return piece_from(q, k);
}

bool ideal_membership(const SimplicialComplex& delta, const std::vector<Polynomial>& extra,
                      const Polynomial& g) {
  if (!g.is_homogeneous()) throw HomogeneityError("membership test needs a homogeneous polynomial");
  const Quotient q(delta, extra);
  const Polynomial r = q.reduce(g);
  if (r.is_zero()) return true;
  const int k = g.degree();
  const auto basis = q.basis(k);
  const auto span = q.spanning_matrix(k, basis);
  const auto index = index_basis(basis);
  auto t = span.triplets();
  for (const auto& [m, c] : r.terms()) t.push_back({span.rows(), index.at(m), c});
  const auto with_g = ExactMatrix::from_triplets(span.rows() + 1, basis.size(), std::move(t));
  return rank(with_g) == rank(span);
}

bool ideal_membership_by_duality(const SimplicialComplex& delta,
                                 const std::vector<Polynomial>& extra, const Polynomial& g) {
  if (!g.is_homogeneous()) throw HomogeneityError("membership test needs a homogeneous polynomial");
  const Quotient q(delta, extra);
  require_artinian(q);
  if (g.is_zero()) return true;
  const int top = artinian_degree_bound(delta, extra);
  for (int k = g.degree(); k < top; ++k) {
    for (const auto& f : piece_from(q, k).basis) {
      if (!contract(g, f).is_zero()) return false;
    }
  }
  return true;
}

std::string failure_mode_name(FailureMode m) {
  switch (m) {
    case FailureMode::None: return "none";
    case FailureMode::Injectivity: return "injectivity";
    case FailureMode::Surjectivity: return "surjectivity";
    case FailureMode::Both: return "both";
  }
  return "none";
}

namespace {

MapRank rank_of_map(const ArtinianFrame& a, const Polynomial& f, int k, int power, bool keep) {
  MapRank r;
  r.degree = k;
  r.power = power;
  auto m = multiplication_matrix(a, f, k);
  r.dim_source = m.cols();
  r.dim_target = m.rows();
  r.rank = rank(m);
  r.full_rank = r.rank == std::min(r.dim_source, r.dim_target);
  if (!r.full_rank) {
    if (r.dim_source < r.dim_target) {
      r.failure_mode = FailureMode::Injectivity;
    } else if (r.dim_source > r.dim_target) {
      r.failure_mode = FailureMode::Surjectivity;
    } else {
      r.failure_mode = FailureMode::Both;
    }
  }
  if (keep) r.matrix = std::move(m);
  return r;
}

}  // namespace

WlpReport wlp_check(const ArtinianFrame& a, bool keep_matrices) {
  const int socle = a.socle_degree();
  const Polynomial L = sum_of_variables(a.num_vars());
  WlpReport rep;
  rep.per_degree.resize(static_cast<std::size_t>(std::max(socle, 0)));
  parallel_for(rep.per_degree.size(), [&](std::size_t k) {
    rep.per_degree[k] = rank_of_map(a, L, static_cast<int>(k), 1, keep_matrices);
  });
  rep.holds = std::all_of(rep.per_degree.begin(), rep.per_degree.end(),
                          [](const MapRank& r) { return r.full_rank; });
  return rep;
}

Polynomial restricted_power_of_sum(const ArtinianFrame& a, int j) {
  Polynomial p;
  mpz_class jf;
  mpz_fac_ui(jf.get_mpz_t(), static_cast<unsigned long>(j));
  for (const auto& t : standard_basis(a, j)) {
    mpz_class denom = 1;
    for (const auto& [var, e] : t.entries()) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
      denom *= f;
    }
    p.add_term(t, Rational(jf / denom));
  }
  return p;
}

SlpReport slp_check(const ArtinianFrame& a, bool keep_matrices) {
  const int socle = a.socle_degree();
  std::vector<std::pair<int, int>> jobs;
  for (int j = 1; j <= socle; ++j) {
    for (int k = 0; k + j <= socle; ++k) jobs.emplace_back(j, k);
  }
  std::vector<Polynomial> powers(static_cast<std::size_t>(socle + 1));
  for (int j = 1; j <= socle; ++j) powers[static_cast<std::size_t>(j)] = restricted_power_of_sum(a, j);
  SlpReport rep;
  rep.maps.resize(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const auto [j, k] = jobs[i];
    rep.maps[i] = rank_of_map(a, powers[static_cast<std::size_t>(j)], k, j, keep_matrices);
  });
  rep.holds = std::all_of(rep.maps.begin(), rep.maps.end(), [](const MapRank& r) { return r.full_rank; });
  return rep;
}

InverseSystemPiece kernel_transpose_basis(const ArtinianFrame& a, int k) {
  if (k < 1) throw RangeError("transpose kernel needs degree k >= 1");
  const auto m = multiplication_matrix(a, sum_of_variables(a.num_vars()), k - 1);
  const auto basis = standard_basis(a, k);
  InverseSystemPiece piece;
  piece.degree = k;
  for (const auto& v : kernel_basis(m.transpose()).vectors) {
    piece.basis.push_back(from_coordinates(v, basis));
  }
  return piece;
}

namespace {

void require_proper(const SimplicialComplex& delta, const Coloring& rho) {
  const int k = delta.dimension() + 1;
  if (rho.k != k) {
    throw ColoringError("expected " + std::to_string(k) + " colors, got " + std::to_string(rho.k));
  }
  if (!is_proper_coloring(delta, rho)) throw ColoringError("coloring is not proper");
  std::vector<bool> used(static_cast<std::size_t>(k + 1), false);
  for (const auto& [v, c] : rho.assignment) used[static_cast<std::size_t>(c)] = true;
  for (int c = 1; c <= k; ++c) {
    if (!used[static_cast<std::size_t>(c)]) {
      throw ColoringError("color class " + std::to_string(c) + " is empty");
    }
  }
}

Polynomial face_monomial(const SimplicialComplex& delta, const Face& f) {
  std::vector<Monomial::Entry> e;
  for (auto v : f) e.emplace_back(delta.vertex_index(v) + 1, 1);
  return Polynomial(Monomial::from_entries(std::move(e)));
}

}  // namespace

SopCandidate colored_sop(const SimplicialComplex& delta, const Coloring& rho) {
  require_proper(delta, rho);
  std::vector<Polynomial> theta(static_cast<std::size_t>(rho.k));
  for (auto v : delta.vertices()) {
    theta[static_cast<std::size_t>(rho.assignment.at(v) - 1)] +=
        Polynomial::variable(delta.vertex_index(v) + 1);
  }
  return make_sop_candidate(std::move(theta), fh_profile(delta).h_degree);
}

Polynomial colored_dual_generator(const SimplicialComplex& delta, const Coloring& rho) {
  if (!is_homology_sphere(delta)) throw HypothesisError("complex is not a homology sphere");
  SopCandidate sop;
  try {
    sop = colored_sop(delta, rho);
  } catch (const ColoringError& e) {
    throw HypothesisError(std::string("coloring hypothesis fails: ") + e.what());
  }
  const auto frg = facet_ridge_graph(delta);
  if (!frg.bipartition) throw HypothesisError("facet-ridge graph is not bipartite");

  Polynomial f;
  for (auto i : frg.bipartition->side1) f += face_monomial(delta, frg.nodes[i]);
  for (auto i : frg.bipartition->side2) f -= face_monomial(delta, frg.nodes[i]);

  std::vector<Polynomial> checks = stanley_reisner_generators(delta).generators;
  checks.insert(checks.end(), sop.theta.begin(), sop.theta.end());
  for (std::size_t i = 1; i <= delta.num_vertices(); ++i) {
    checks.emplace_back(Monomial::variable(i, 2));
  }
  checks.push_back(sum_of_variables(delta.num_vertices()));
  for (const auto& g : checks) {
    if (!contract(g, f).is_zero()) {
      throw FalsificationError("dual generator is not annihilated by " + g.to_string());
    }
  }
  return f;
}

SopCandidate universal_sop(std::size_t n, std::size_t count) {
  if (count < 1 || count > n) {
    throw RangeError("universal sop needs 1 <= count <= n, got count " + std::to_string(count) +
                     " with n " + std::to_string(n));
  }
  std::vector<Polynomial> theta;
  int t = 0;
  for (std::size_t i = 1; i <= count; ++i) {
    theta.push_back(elementary_symmetric(n, i));
    t += static_cast<int>(i);
  }
  return make_sop_candidate(std::move(theta), t - static_cast<int>(count));
}

SopCandidate universal_sop_for(const SimplicialComplex& delta) {
  const auto count = static_cast<std::size_t>(delta.dimension() + 1);
  auto sop = universal_sop(delta.num_vertices(), count);
  sop.total_degree_t += fh_profile(delta).h_degree;
  return sop;
}

UnexpectedReport verify_unexpected(const SimplicialComplex& delta, const SopCandidate& cand,
                                   const Polynomial& f, const std::vector<int>& caps, int t) {
  const int h_degree = fh_profile(delta).h_degree;
  if (t < h_degree) {
    throw PreconditionError("total degree t = " + std::to_string(t) + " is below deg h = " +
                            std::to_string(h_degree));
  }
  if (f.is_zero() || !f.is_homogeneous()) throw PreconditionError("f must be a nonzero homogeneous form");
  if (caps.size() != delta.num_vertices()) throw PreconditionError("one cap per vertex is required");

  UnexpectedReport rep;
  const auto sop = is_sop(delta, cand);
  rep.u1 = sop.is_sop;
  rep.u1_hilbert = sop.hilbert;
  rep.u1_vanishing_degree = sop.vanishing_degree;

  const int d = delta.dimension();
  rep.u2_lhs = h_degree - (d + 1);
  for (const auto& g : cand.theta) rep.u2_lhs += g.degree();
  rep.u2 = rep.u2_lhs == t;

  rep.u3 = ideal_membership(delta, cand.theta, f);

  for (std::size_t i = 0; i < caps.size(); ++i) {
    const Polynomial power(Monomial::variable(i + 1, caps[i]));
    if (!ideal_membership(delta, cand.theta, power)) rep.u4_failing.push_back(i + 1);
  }
  rep.u4 = rep.u4_failing.empty();

  const ArtinianFrame a(delta, caps);
  rep.u5_hf_t = hilbert_function(a, t);
  rep.u5_hf_t_minus = hilbert_function(a, t - f.degree());
  rep.u5 = rep.u5_hf_t <= rep.u5_hf_t_minus;

  rep.overall = rep.u1 && rep.u2 && rep.u3 && rep.u4 && rep.u5;
  return rep;
}

ClassifierVerdict graph_wlp_classifier(const SimplicialComplex& g, int a) {
  if (g.dimension() != 1) throw InputError("classifier input must be a graph (dimension 1)");
  if (a <= 1) throw InputError("classifier needs a > 1");
  const auto edges = faces(g, 1);
  Graph graph;
  graph.num_nodes = g.num_vertices();
  for (const auto& e : edges) graph.edges.emplace_back(g.vertex_index(e[0]), g.vertex_index(e[1]));
  const auto adj = graph.adjacency();
  std::vector<bool> seen(graph.num_nodes, false);
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
  if (reached != graph.num_nodes) throw InputError("classifier needs a connected graph");

  ClassifierVerdict v;
  v.v = g.num_vertices();
  v.e = edges.size();
  if (v.v > v.e) {
    v.wlp = true;
    v.reason = "v > e (tree)";
    return v;
  }
  const auto sub = hesd(g, a - 1);
  Graph h;
  h.num_nodes = sub.complex.num_vertices();
  for (const auto& e : faces(sub.complex, 1)) {
    h.edges.emplace_back(sub.complex.vertex_index(e[0]), sub.complex.vertex_index(e[1]));
  }
  v.hesd_bipartite = is_bipartite(h).bipartite();
  v.wlp = !*v.hesd_bipartite;
  v.reason = *v.hesd_bipartite ? "v <= e and hesd(G, a-1) is bipartite"
                               : "v <= e and hesd(G, a-1) is not bipartite";
  return v;
}

bool divergence_bound_check(const Polynomial& f, int a, std::size_t n) {
  if (f.max_variable() > n) throw HypothesisError("polynomial uses more than n variables");
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [var, e] : m.entries()) {
      if (e >= a) throw HypothesisError("exponent " + std::to_string(e) + " is not below a");
    }
  }
  if (!differentiate(sum_of_variables(n), f).is_zero()) {
    throw HypothesisError("polynomial is not annihilated by L under differentiation");
  }
  if (f.is_zero()) return true;
  return 2 * static_cast<std::size_t>(f.degree()) <= n * static_cast<std::size_t>(a - 1);
}

}  // namespace facering
