#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "facering/complex.hpp"
#include "facering/exact_matrix.hpp"
#include "facering/polynomial.hpp"

namespace facering {

struct IdealPresentation {
  std::vector<Polynomial> generators;
  std::size_t ambient_vars = 0;
};

/// Squarefree monomials of the minimal non-faces. Variable x_i is the i-th
/// vertex of Δ in sorted order.
IdealPresentation stanley_reisner_generators(const SimplicialComplex& delta);

/// One squarefree monomial per facet.
IdealPresentation facet_ideal(const SimplicialComplex& delta);

/// A_Δ(a) = R / (I_Δ + (x_1^{a_1}, ..., x_n^{a_n})).
class ArtinianFrame {
 public:
  /// caps must have one entry >= 2 per vertex (RangeError otherwise).
  ArtinianFrame(SimplicialComplex delta, std::vector<int> caps);
  static ArtinianFrame uniform(SimplicialComplex delta, int a);

  const SimplicialComplex& complex() const noexcept { return delta_; }
  const std::vector<int>& caps() const noexcept { return caps_; }
  std::size_t num_vars() const noexcept { return caps_.size(); }

  /// max over facets of the sum of (a_i - 1); the top nonzero degree.
  int socle_degree() const;

  /// True iff m is a nonzero standard monomial (face support, below caps).
  bool is_standard(const Monomial& m) const;

 private:
  SimplicialComplex delta_;
  std::vector<int> caps_;
};

/// Standard monomials of degree k in graded-lex order, largest first.
std::vector<Monomial> standard_basis(const ArtinianFrame& a, int k);

/// Position of each basis monomial.
using BasisIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;
BasisIndex index_basis(const std::vector<Monomial>& basis);

std::size_t hilbert_function(const ArtinianFrame& a, int k);

/// Face-supported monomials of degree k in graded-lex order (basis of
/// (R/I_Δ)_k), optionally bounded by caps.
std::vector<Monomial> face_monomials(const SimplicialComplex& delta, int k,
                                     const std::vector<int>* caps = nullptr);

/// Matrix of ×f : A_k -> A_{k+deg f}; rows index degree k+deg f, columns
/// degree k. Throws HomogeneityError for non-homogeneous or zero f.
ExactMatrix multiplication_matrix(const ArtinianFrame& a, const Polynomial& f, int k);

struct LogMatrix {
  ExactMatrix matrix;
  std::vector<Monomial> row_labels;
};

/// Throws MonomialError when a generator is not a monomial.
LogMatrix log_matrix(const IdealPresentation& ideal);

/// Rank of the log matrix; the ideal must be monomial and equigenerated.
std::size_t analytic_spread(const IdealPresentation& ideal);

struct HesdLogComparison {
  bool equal = false;
  ExactMatrix multiplication;  // ×L : A_t -> A_{t+1}, t = d(a-1)
  ExactMatrix log;             // log matrix of F(hesd(Δ(d), a-1))
  std::vector<std::size_t> row_map;  // multiplication row -> log row
  std::vector<std::size_t> col_map;  // multiplication column -> log column
  std::string detail;                // reason when not equal
};

HesdLogComparison multiplication_equals_hesd_log(const SimplicialComplex& delta, int a);

}  // namespace facering
