#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "facering/complex.hpp"
#include "facering/exact_matrix.hpp"
#include "facering/monomial_algebra.hpp"
#include "facering/polynomial.hpp"

namespace facering {

struct SopCandidate {
  std::vector<Polynomial> theta;
  std::vector<int> degrees;
  int total_degree_t = 0;
};

/// Checks homogeneity of each form and records the degrees.
SopCandidate make_sop_candidate(std::vector<Polynomial> theta, int total_degree_t);

/// R / (I_Δ + (extra)) handled degree by degree inside the face-monomial
/// basis. Monomial generators shrink the basis; pure powers x_i^e act as
/// exponent caps; the remaining generators contribute spanning rows.
class Quotient {
 public:
  /// Throws HomogeneityError for non-homogeneous generators.
  Quotient(SimplicialComplex delta, std::vector<Polynomial> extra);

  const SimplicialComplex& complex() const noexcept { return delta_; }
  const std::vector<Polynomial>& extra() const noexcept { return extra_; }

  /// Face monomials of degree k outside the monomial part of the ideal.
  std::vector<Monomial> basis(int k) const;
  /// Reductions of m·g (m in basis(k - deg g), g non-monomial) over basis(k).
  ExactMatrix spanning_matrix(int k, const std::vector<Monomial>& basis) const;
  /// Drops the terms of p that vanish modulo the monomial part.
  Polynomial reduce(const Polynomial& p) const;

  std::size_t hilbert(int k) const;
  std::vector<std::size_t> hilbert_series(int up_to) const;
  /// Largest generator degree, 0 when there are no extra generators.
  int max_generator_degree() const;

 private:
  bool survives(const Monomial& m) const;

  SimplicialComplex delta_;
  std::vector<Polynomial> extra_;
  std::vector<int> caps_;  // 0 means uncapped
  std::vector<Monomial> monomial_gens_;
  std::vector<Polynomial> forms_;
};

std::size_t quotient_hilbert(const SimplicialComplex& delta, const std::vector<Polynomial>& extra,
                             int k);

struct SopVerdict {
  bool is_sop = false;
  std::optional<int> vanishing_degree;
  int degree_bound = 0;
  std::vector<std::size_t> hilbert;  // quotient Hilbert function, degrees 0..bound
};

/// Throws ArityError unless there are exactly dim Δ + 1 forms.
SopVerdict is_sop(const SimplicialComplex& delta, const SopCandidate& cand);

struct InverseSystemPiece {
  int degree = 0;
  std::vector<Polynomial> basis;
};

/// Degree at which the quotient must vanish if it is artinian: one past
/// max(h_degree, d+1) + (d+1)(D-1), D the largest generator degree.
int artinian_degree_bound(const SimplicialComplex& delta, const std::vector<Polynomial>& extra);

/// Throws NotArtinian when the quotient does not vanish by the bound.
void require_artinian(const Quotient& q);

InverseSystemPiece inverse_system_piece(const SimplicialComplex& delta,
                                        const std::vector<Polynomial>& extra, int k);

/// Span test in degree deg g.
bool ideal_membership(const SimplicialComplex& delta, const std::vector<Polynomial>& extra,
                      const Polynomial& g);

/// g ∘ F = 0 for every F in the inverse system in degrees >= deg g.
bool ideal_membership_by_duality(const SimplicialComplex& delta,
                                 const std::vector<Polynomial>& extra, const Polynomial& g);

enum class FailureMode { None, Injectivity, Surjectivity, Both };
std::string failure_mode_name(FailureMode m);

struct MapRank {
  int degree = 0;  // source degree
  int power = 1;   // j in ×L^j
  std::size_t dim_source = 0;
  std::size_t dim_target = 0;
  std::size_t rank = 0;
  bool full_rank = false;
  FailureMode failure_mode = FailureMode::None;
  std::optional<ExactMatrix> matrix;
};

struct WlpReport {
  bool holds = true;
  std::vector<MapRank> per_degree;
};

WlpReport wlp_check(const ArtinianFrame& a, bool keep_matrices = false);

struct SlpReport {
  bool holds = true;
  std::vector<MapRank> maps;  // all (power, degree) pairs
};

SlpReport slp_check(const ArtinianFrame& a, bool keep_matrices = false);

/// Σ over standard monomials t of degree j of (j! / t!) t; acts on A as L^j.
Polynomial restricted_power_of_sum(const ArtinianFrame& a, int j);

/// ker(×L^T : A_k -> A_{k-1}) as degree-k polynomials. Throws RangeError for k < 1.
InverseSystemPiece kernel_transpose_basis(const ArtinianFrame& a, int k);

/// θ_i = sum of variables of color i; t = h_degree. ColoringError when ρ is
/// not a proper (d+1)-coloring with non-empty classes.
SopCandidate colored_sop(const SimplicialComplex& delta, const Coloring& rho);

/// Σ_{B1} x_σ - Σ_{B2} x_σ over the facet-ridge bipartition. HypothesisError
/// when Δ is not a homology sphere, ρ is not proper, or the graph is not
/// bipartite; FalsificationError if the annihilation checks fail.
Polynomial colored_dual_generator(const SimplicialComplex& delta, const Coloring& rho);

/// e_1, ..., e_count in n variables; total degree Σ i - count (no h-term).
SopCandidate universal_sop(std::size_t n, std::size_t count);

/// e_1, ..., e_{d+1} for Δ with t = Σ deg + h_degree - (d+1).
SopCandidate universal_sop_for(const SimplicialComplex& delta);

struct UnexpectedReport {
  bool u1 = false;
  std::vector<std::size_t> u1_hilbert;
  std::optional<int> u1_vanishing_degree;

  bool u2 = false;
  int u2_lhs = 0;  // Σ deg θ_i + h_degree - (d+1)

  bool u3 = false;
  bool u4 = false;
  std::vector<std::size_t> u4_failing;  // variables whose cap power is not in the ideal

  bool u5 = false;
  std::size_t u5_hf_t = 0;
  std::size_t u5_hf_t_minus = 0;

  bool overall = false;
};

/// PreconditionError when t < h_degree or f is not homogeneous.
UnexpectedReport verify_unexpected(const SimplicialComplex& delta, const SopCandidate& cand,
                                   const Polynomial& f, const std::vector<int>& caps, int t);

struct ClassifierVerdict {
  bool wlp = false;
  std::size_t v = 0;
  std::size_t e = 0;
  std::optional<bool> hesd_bipartite;
  std::string reason;
};

/// InputError for non-graphs, disconnected graphs and a <= 1.
ClassifierVerdict graph_wlp_classifier(const SimplicialComplex& g, int a);

/// deg F <= n(a-1)/2 for F with L • F = 0 and exponents below a; HypothesisError
/// when those preconditions fail.
bool divergence_bound_check(const Polynomial& f, int a, std::size_t n);

}  // namespace facering
