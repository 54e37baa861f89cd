#include "facering/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "facering/errors.hpp"

namespace facering {

Monomial Monomial::variable(std::size_t var, int exponent) {
  return from_entries({{var, exponent}});
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  Monomial m;
  for (const auto& [var, e] : entries) {
    if (var == 0) throw RangeError("variables are numbered from 1");
    if (e < 0) throw RangeError("negative exponent");
    if (e == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == var) {
      m.entries_.back().second += e;
    } else {
      m.entries_.emplace_back(var, e);
    }
    m.degree_ += e;
  }
  return m;
}

Monomial Monomial::from_dense(const std::vector<int>& exps) {
  std::vector<Entry> e;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] != 0) e.emplace_back(i + 1, exps[i]);
  }
  return from_entries(std::move(e));
}

int Monomial::exponent(std::size_t var) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0});
  return (it != entries_.end() && it->first == var) ? it->second : 0;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  s.reserve(entries_.size());
  for (const auto& e : entries_) s.push_back(e.first);
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.entries_.reserve(entries_.size() + other.entries_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < entries_.size() || j < other.entries_.size()) {
    if (j == other.entries_.size() ||
        (i < entries_.size() && entries_[i].first < other.entries_[j].first)) {
      m.entries_.push_back(entries_[i++]);
    } else if (i == entries_.size() || other.entries_[j].first < entries_[i].first) {
      m.entries_.push_back(other.entries_[j++]);
    } else {
      m.entries_.emplace_back(entries_[i].first, entries_[i].second + other.entries_[j].second);
      ++i;
      ++j;
    }
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (const auto& [var, e] : entries_) {
    if (other.exponent(var) < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<Entry> e;
  for (const auto& [var, x] : other.entries_) e.emplace_back(var, x - exponent(var));
  return from_entries(std::move(e));
}

std::string Monomial::to_string() const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [var, e] : entries_) {
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(var);
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::size_t i = 0;
  while (i < x.size() && i < y.size()) {
    if (x[i].first != y[i].first) {
      // The monomial using the earlier variable is larger.
      return x[i].first < y[i].first ? 1 : -1;
    }
    if (x[i].second != y[i].second) return x[i].second < y[i].second ? -1 : 1;
    ++i;
  }
  if (i < x.size()) return 1;
  if (i < y.size()) return -1;
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& [var, e] : m.entries()) {
    h ^= var * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(e);
    h *= 1099511628211ULL;
  }
  return h;
}

Polynomial::Polynomial(const Rational& c) { add_term(Monomial{}, c); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) { add_term(m, c); }

Polynomial Polynomial::variable(std::size_t var) { return Polynomial(Monomial::variable(var)); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    it->second.canonicalize();
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

bool Polynomial::is_monomial() const { return terms_.size() == 1; }

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

std::size_t Polynomial::max_variable() const {
  std::size_t v = 0;
  for (const auto& [m, c] : terms_) {
    if (!m.entries().empty()) v = std::max(v, m.entries().back().first);
  }
  return v;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::filter(const std::function<bool(const Monomial&)>& keep) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    if (keep(m)) r.terms_.emplace(m, c);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const Rational a = abs(c);
    std::string coeff = a.get_den() == 1 ? a.get_num().get_str() : a.get_str();
    if (m.is_one()) {
      s += coeff;
    } else if (a == 1) {
      s += m.to_string();
    } else {
      s += coeff + "*" + m.to_string();
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : src_(text) {}

  Polynomial parse() {
    Polynomial result;
    skip_ws();
    int sign = 1;
    if (take_sign(sign)) skip_ws();
    if (at_end()) fail("empty polynomial");
    while (true) {
      result += parse_term() * Rational(sign);
      skip_ws();
      if (at_end()) break;
      if (!take_sign(sign)) fail("expected '+' or '-'");
      skip_ws();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool take_sign(int& sign) {
    if (peek() == '+') {
      sign = 1;
      ++pos_;
      return true;
    }
    if (peek() == '-') {
      sign = -1;
      ++pos_;
      return true;
    }
    // U+2212 MINUS SIGN
    if (src_.substr(pos_, 3) == "\xE2\x88\x92") {
      sign = -1;
      pos_ += 3;
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Polynomial parse_term() {
    Rational coeff(1);
    bool seen = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::string den = digits();
        if (den.empty()) fail("missing denominator");
        coeff = parse_rational(num + "/" + den);
      } else {
        coeff = parse_rational(num);
      }
      seen = true;
      skip_factor_separator();
    }
    Monomial m;
    while (peek() == 'x') {
      ++pos_;
      std::string var = digits();
      if (var.empty()) fail("variable index expected after 'x'");
      const auto index = std::stoull(var);
      if (index == 0) fail("variables are numbered from 1");
      int e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        std::string ex = digits();
        if (ex.empty()) fail("exponent expected after '^'");
        e = std::stoi(ex);
      }
      m = m * Monomial::variable(static_cast<std::size_t>(index), e);
      seen = true;
      skip_factor_separator();
    }
    if (!seen) fail("term expected");
    return Polynomial(m, coeff);
  }

  void skip_factor_separator() {
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (peek() != 'x') fail("variable expected after '*'");
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(src_) +
                     "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

std::vector<Polynomial> parse_polynomial_list(std::string_view text) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(';', start);
    const auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    out.push_back(Polynomial::parse(piece));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

Polynomial contract(const Polynomial& g, const Polynomial& f) {
  Polynomial r;
  for (const auto& [a, ca] : g.terms()) {
    for (const auto& [b, cb] : f.terms()) {
      if (a.divides(b)) r.add_term(a.quotient_of(b), ca * cb);
    }
  }
  return r;
}

Polynomial differentiate(const Polynomial& g, const Polynomial& f) {
  Polynomial r;
  for (const auto& [a, ca] : g.terms()) {
    for (const auto& [b, cb] : f.terms()) {
      if (!a.divides(b)) continue;
      // d^a / dy^a of y^b = prod b_i! / (b_i - a_i)! y^(b-a)
      mpz_class factor = 1;
      for (const auto& [var, e] : a.entries()) {
        const int be = b.exponent(var);
        for (int k = be; k > be - e; --k) factor *= k;
      }
      r.add_term(a.quotient_of(b), ca * cb * Rational(factor));
    }
  }
  return r;
}

Polynomial divided_power_to_derivative(const Polynomial& f) {
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    mpz_class denom = 1;
    for (const auto& [var, e] : m.entries()) {
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(e));
      denom *= fact;
    }
    r.add_term(m, c / Rational(denom));
  }
  return r;
}

Polynomial sum_of_variables(std::size_t n) {
  Polynomial p;
  for (std::size_t i = 1; i <= n; ++i) p.add_term(Monomial::variable(i), Rational(1));
  return p;
}

Polynomial elementary_symmetric(std::size_t n, std::size_t k) {
  Polynomial p;
  if (k > n) return p;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<Monomial::Entry> e;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) e.emplace_back(i + 1, 1);
    }
    p.add_term(Monomial::from_entries(std::move(e)), Rational(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return p;
}

}  // namespace facering
