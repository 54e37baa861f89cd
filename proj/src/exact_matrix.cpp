#include "facering/exact_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "facering/errors.hpp"

namespace facering {

ExactMatrix ExactMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                       std::vector<Triplet> triplets) {
  ExactMatrix m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw RangeError("triplet index outside matrix bounds");
    }
    if (!m.triplets_.empty() && m.triplets_.back().row == t.row &&
        m.triplets_.back().col == t.col) {
      m.triplets_.back().value += t.value;
      if (m.triplets_.back().value == 0) m.triplets_.pop_back();
    } else if (t.value != 0) {
      m.triplets_.push_back(std::move(t));
    }
  }
  return m;
}

ExactMatrix ExactMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows == 0 ? 0 : dense.front().size();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < rows; ++i) {
    if (dense[i].size() != cols) throw RangeError("ragged dense matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      if (dense[i][j] != 0) t.push_back({i, j, dense[i][j]});
    }
  }
  return from_triplets(rows, cols, std::move(t));
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, Rational(1)});
  return from_triplets(n, n, std::move(t));
}

Rational ExactMatrix::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(triplets_.begin(), triplets_.end(), std::make_pair(row, col),
                             [](const Triplet& t, const std::pair<std::size_t, std::size_t>& key) {
                               return t.row != key.first ? t.row < key.first : t.col < key.second;
                             });
  if (it != triplets_.end() && it->row == row && it->col == col) return it->value;
  return Rational(0);
}

ExactMatrix ExactMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(triplets_.size());
  for (const auto& e : triplets_) t.push_back({e.col, e.row, e.value});
  return from_triplets(cols_, rows_, std::move(t));
}

std::vector<std::vector<Rational>> ExactMatrix::to_dense() const {
  std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_));
  for (const auto& e : triplets_) d[e.row][e.col] = e.value;
  return d;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw RangeError("vector length does not match column count");
  std::vector<Rational> y(rows_);
  for (const auto& e : triplets_) y[e.row] += e.value * x[e.col];
  return y;
}

ExactMatrix ExactMatrix::permuted(const std::vector<std::size_t>& row_map,
                                  const std::vector<std::size_t>& col_map) const {
  if (row_map.size() != rows_ || col_map.size() != cols_) {
    throw RangeError("permutation size mismatch");
  }
  std::vector<Triplet> t;
  t.reserve(triplets_.size());
  for (const auto& e : triplets_) t.push_back({row_map[e.row], col_map[e.col], e.value});
  return from_triplets(rows_, cols_, std::move(t));
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.triplets_.size() != b.triplets_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.triplets_.size(); ++i) {
    const auto& x = a.triplets_[i];
    const auto& y = b.triplets_[i];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

namespace {

// Fraction-free arithmetic over Z: rows are kept primitive (content 1) after
// every combination, which bounds coefficient growth on the 0/1-heavy
// matrices produced by multiplication maps.
struct IntegerArith {
  using Value = mpz_class;

  static bool is_zero(const Value& v) { return v == 0; }

  void prepare_pivot(std::vector<Value>&, std::size_t) const {}

  // target := (p/g) * target - (a/g) * pivot, with g = gcd(p, a).
  void scales(const Value& pivot_entry, const Value& target_entry, Value& keep,
              Value& sub) const {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), pivot_entry.get_mpz_t(), target_entry.get_mpz_t());
    mpz_divexact(keep.get_mpz_t(), pivot_entry.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(sub.get_mpz_t(), target_entry.get_mpz_t(), g.get_mpz_t());
  }

  Value combine(const Value& keep, const Value& t, const Value& sub, const Value& p) const {
    return keep * t - sub * p;
  }
  Value scale_keep(const Value& keep, const Value& t) const { return keep * t; }
  Value scale_sub(const Value& sub, const Value& p) const { return -(sub * p); }

  void normalize(std::vector<Value>& vals) const {
    mpz_class g = 0;
    for (const auto& v : vals) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) return;
    }
    if (g > 1) {
      for (auto& v : vals) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return r;
}

struct ModArith {
  using Value = std::uint64_t;
  std::uint64_t p;

  static bool is_zero(const Value& v) { return v == 0; }

  // Scale the pivot row so the pivot entry is 1.
  void prepare_pivot(std::vector<Value>& vals, std::size_t pivot_pos) const {
    const Value inv = pow_mod(vals[pivot_pos], p - 2, p);
    for (auto& v : vals) v = mul_mod(v, inv, p);
  }

  void scales(const Value&, const Value& target_entry, Value& keep, Value& sub) const {
    keep = 1;
    sub = target_entry;
  }
  Value combine(const Value&, const Value& t, const Value& sub, const Value& pv) const {
    const Value s = mul_mod(sub, pv, p);
    return t >= s ? t - s : t + p - s;
  }
  Value scale_keep(const Value&, const Value& t) const { return t; }
  Value scale_sub(const Value& sub, const Value& pv) const {
    const Value s = mul_mod(sub, pv, p);
    return s == 0 ? 0 : p - s;
  }
  void normalize(std::vector<Value>&) const {}
};

template <class Arith>
class SparseEliminator {
 public:
  using Value = typename Arith::Value;

  struct Row {
    std::vector<std::uint32_t> cols;
    std::vector<Value> vals;
  };

  struct Pivot {
    std::uint32_t col;
    Row row;
  };

  SparseEliminator(Arith arith, std::size_t ncols, std::vector<Row> rows)
      : arith_(std::move(arith)), rows_(std::move(rows)), col_rows_(ncols), col_count_(ncols, 0) {
    active_.assign(rows_.size(), true);
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].cols.empty()) {
        active_[r] = false;
        continue;
      }
      for (auto c : rows_[r].cols) {
        col_rows_[c].push_back(r);
        ++col_count_[c];
      }
    }
    for (std::uint32_t c = 0; c < ncols; ++c) {
      if (col_count_[c] > 0) queue_.insert({col_count_[c], c});
    }
  }

  // Markowitz-style pivoting: sparsest column first, then its sparsest row;
  // ties go to the lowest column index, then the lowest row index.
  void run() {
    while (!queue_.empty()) {
      const std::uint32_t c = queue_.begin()->second;
      std::vector<std::uint32_t> holders;
      for (auto r : col_rows_[c]) {
        if (active_[r] && contains(rows_[r], c)) holders.push_back(r);
      }
      std::sort(holders.begin(), holders.end());
      holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
      col_rows_[c].clear();
      if (holders.empty()) {
        set_count(c, 0);
        continue;
      }
      std::uint32_t pr = holders.front();
      for (auto r : holders) {
        if (rows_[r].cols.size() < rows_[pr].cols.size()) pr = r;
      }
      active_[pr] = false;
      for (auto col : rows_[pr].cols) set_count(col, col_count_[col] - 1);

      Row& prow = rows_[pr];
      const std::size_t ppos = position(prow, c);
      arith_.prepare_pivot(prow.vals, ppos);
      for (auto r : holders) {
        if (r != pr) eliminate(r, prow, ppos, c);
      }
      pivots_.push_back({c, std::move(prow)});
      rows_[pr] = Row{};
    }
  }

  std::vector<Pivot>& pivots() { return pivots_; }

 private:
  static bool contains(const Row& row, std::uint32_t c) {
    return std::binary_search(row.cols.begin(), row.cols.end(), c);
  }
  static std::size_t position(const Row& row, std::uint32_t c) {
    return static_cast<std::size_t>(std::lower_bound(row.cols.begin(), row.cols.end(), c) -
                                    row.cols.begin());
  }

  void set_count(std::uint32_t c, std::size_t n) {
    if (col_count_[c] > 0) queue_.erase({col_count_[c], c});
    col_count_[c] = n;
    if (n > 0) queue_.insert({n, c});
  }

  void eliminate(std::uint32_t r, const Row& prow, std::size_t ppos, std::uint32_t pcol) {
    Row& row = rows_[r];
    const std::size_t tpos = position(row, pcol);
    Value keep;
    Value sub;
    arith_.scales(prow.vals[ppos], row.vals[tpos], keep, sub);

    Row out;
    out.cols.reserve(row.cols.size() + prow.cols.size());
    out.vals.reserve(row.cols.size() + prow.cols.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < row.cols.size() || j < prow.cols.size()) {
      std::uint32_t col;
      Value v;
      if (j == prow.cols.size() || (i < row.cols.size() && row.cols[i] < prow.cols[j])) {
        col = row.cols[i];
        v = arith_.scale_keep(keep, row.vals[i]);
        ++i;
      } else if (i == row.cols.size() || prow.cols[j] < row.cols[i]) {
        col = prow.cols[j];
        v = arith_.scale_sub(sub, prow.vals[j]);
        ++j;
      } else {
        col = row.cols[i];
        v = arith_.combine(keep, row.vals[i], sub, prow.vals[j]);
        ++i;
        ++j;
      }
      if (col == pcol || Arith::is_zero(v)) continue;
      out.cols.push_back(col);
      out.vals.push_back(std::move(v));
    }
    arith_.normalize(out.vals);

    // Update column bookkeeping: removed columns lose a holder, new ones gain.
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < row.cols.size() || b < out.cols.size()) {
      if (b == out.cols.size() || (a < row.cols.size() && row.cols[a] < out.cols[b])) {
        if (row.cols[a] != pcol) set_count(row.cols[a], col_count_[row.cols[a]] - 1);
        ++a;
      } else if (a == row.cols.size() || out.cols[b] < row.cols[a]) {
        set_count(out.cols[b], col_count_[out.cols[b]] + 1);
        col_rows_[out.cols[b]].push_back(r);
        ++b;
      } else {
        ++a;
        ++b;
      }
    }
    // The pivot column's holder count is owned by the pivot loop.
    set_count(pcol, col_count_[pcol] - 1);

    row = std::move(out);
    if (row.cols.empty()) active_[r] = false;
  }

  Arith arith_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::vector<bool> active_;
  std::set<std::pair<std::size_t, std::uint32_t>> queue_;
  std::vector<Pivot> pivots_;
};

using IntRow = SparseEliminator<IntegerArith>::Row;

// Scale each row by the lcm of its denominators; the row space is unchanged.
std::vector<IntRow> integer_rows(const ExactMatrix& m) {
  std::vector<IntRow> rows(m.rows());
  std::vector<mpz_class> lcm(m.rows(), 1);
  for (const auto& t : m.triplets()) {
    mpz_lcm(lcm[t.row].get_mpz_t(), lcm[t.row].get_mpz_t(), t.value.get_den_mpz_t());
  }
  for (const auto& t : m.triplets()) {
    auto& row = rows[t.row];
    row.cols.push_back(static_cast<std::uint32_t>(t.col));
    mpz_class v = t.value.get_num() * (lcm[t.row] / t.value.get_den());
    row.vals.push_back(std::move(v));
  }
  return rows;
}

std::vector<std::vector<Rational>> rref_rows(std::vector<std::vector<Rational>> rows,
                                             std::size_t cols) {
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols && lead_row < rows.size(); ++c) {
    std::size_t p = lead_row;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[lead_row]);
    const Rational inv = 1 / rows[lead_row][c];
    for (auto& v : rows[lead_row]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead_row || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (rows[lead_row][k] != 0) rows[r][k] -= f * rows[lead_row][k];
      }
    }
    ++lead_row;
  }
  rows.resize(lead_row);
  return rows;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  SparseEliminator<IntegerArith> elim(IntegerArith{}, m.cols(), integer_rows(m));
  elim.run();
  return elim.pivots().size();
}

KernelBasis kernel_basis(const ExactMatrix& m) {
  SparseEliminator<IntegerArith> elim(IntegerArith{}, m.cols(), integer_rows(m));
  elim.run();
  auto& pivots = elim.pivots();

  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& p : pivots) is_pivot[p.col] = true;

  // Each pivot row only involves its own pivot column, free columns, and
  // columns pivoted later, so back-substitution runs in reverse pivot order.
  std::vector<std::vector<Rational>> vectors;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> x(m.cols());
    x[free_col] = 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Rational acc = 0;
      mpz_class lead = 0;
      for (std::size_t k = 0; k < it->row.cols.size(); ++k) {
        const auto c = it->row.cols[k];
        if (c == it->col) {
          lead = it->row.vals[k];
        } else if (x[c] != 0) {
          acc += Rational(it->row.vals[k]) * x[c];
        }
      }
      x[it->col] = -acc / Rational(lead);
    }
    vectors.push_back(std::move(x));
  }

  KernelBasis basis;
  basis.ambient_dim = m.cols();
  basis.vectors = rref_rows(std::move(vectors), m.cols());
  return basis;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p) {
  if (p >= (1ULL << 62U) || !is_prime(p)) {
    throw InvalidModulus("modulus " + std::to_string(p) + " is not a prime below 2^62");
  }
  using ModRow = SparseEliminator<ModArith>::Row;
  auto int_rows = integer_rows(m);
  std::vector<ModRow> rows(int_rows.size());
  const mpz_class pz(std::to_string(p));
  for (std::size_t r = 0; r < int_rows.size(); ++r) {
    for (std::size_t k = 0; k < int_rows[r].cols.size(); ++k) {
      mpz_class v;
      mpz_fdiv_r(v.get_mpz_t(), int_rows[r].vals[k].get_mpz_t(), pz.get_mpz_t());
      if (v == 0) continue;
      rows[r].cols.push_back(int_rows[r].cols[k]);
      rows[r].vals.push_back(static_cast<std::uint64_t>(std::stoull(v.get_str())));
    }
  }
  SparseEliminator<ModArith> elim(ModArith{p}, m.cols(), std::move(rows));
  elim.run();
  return elim.pivots().size();
}

std::size_t rank_of_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] != 0) t.push_back({i, j, rows[i][j]});
    }
  }
  return rank(ExactMatrix::from_triplets(rows.size(), cols, std::move(t)));
}

}  // namespace facering
