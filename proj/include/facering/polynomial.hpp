#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "facering/rational.hpp"

namespace facering {

/// x^b with variables numbered from 1. Only nonzero exponents are stored,
/// sorted by variable.
class Monomial {
 public:
  using Entry = std::pair<std::size_t, int>;  // (variable, exponent)

  Monomial() = default;
  static Monomial variable(std::size_t var, int exponent = 1);
  static Monomial from_entries(std::vector<Entry> entries);
  /// exps[i] is the exponent of x_{i+1}.
  static Monomial from_dense(const std::vector<int>& exps);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  int degree() const noexcept { return degree_; }
  int exponent(std::size_t var) const;
  std::vector<std::size_t> support() const;
  bool is_one() const noexcept { return entries_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<Entry> entries_;
  int degree_ = 0;
};

/// Graded lex with x1 > x2 > ...: compares degree first, then the exponent
/// of x1, x2, ... in turn.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Orders larger monomials first; the canonical term and basis order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse polynomial with exact rational coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  explicit Polynomial(const Monomial& m, const Rational& c = Rational(1));
  static Polynomial variable(std::size_t var);

  /// Grammar: terms joined by + or -, each an optional "p" or "p/q"
  /// coefficient followed by factors "x<i>" or "x<i>^<k>", optionally
  /// separated by "*". Throws ParseError.
  static Polynomial parse(std::string_view text);
  std::string to_string() const;

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_homogeneous() const;
  bool is_monomial() const;
  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  /// Largest variable index occurring, 0 for constants.
  std::size_t max_variable() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial pow(unsigned e) const;

  /// Keeps the terms whose monomial satisfies `keep`.
  Polynomial filter(const std::function<bool(const Monomial&)>& keep) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  TermMap terms_;
};

/// Parses semicolon-separated forms ("x1+x2; x3").
std::vector<Polynomial> parse_polynomial_list(std::string_view text);

/// Contraction: x^a ∘ y^b = y^(b-a) when a <= b, else 0, bilinearly.
Polynomial contract(const Polynomial& g, const Polynomial& f);

/// Partial-derivative action g(∂) applied to f.
Polynomial differentiate(const Polynomial& g, const Polynomial& f);

/// y^b -> y^b / b!, which carries ker(g ∘) onto ker(g •).
Polynomial divided_power_to_derivative(const Polynomial& f);

/// x1 + ... + xn.
Polynomial sum_of_variables(std::size_t n);

/// Sum of all squarefree monomials of degree k in x1..xn.
Polynomial elementary_symmetric(std::size_t n, std::size_t k);

}  // namespace facering
