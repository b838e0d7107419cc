#include "vvjack/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "vvjack/errors.hpp"

namespace vvjack {

// --- Partition ------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidShape("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidShape("partition is not weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (empty()) return Partition{};
  for (int c = 0; c < parts_[0]; ++c) {
    int len = 0;
    while (len < length() && parts_[len] > c) ++len;
    t.push_back(len);
  }
  return Partition(std::move(t));
}

int Partition::n_statistic() const {
  int n = 0;
  for (int i = 0; i < length(); ++i) n += i * parts_[i];
  return n;
}

int Partition::content_sum() const {
  int s = 0;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) s += j - i;
  return s;
}

bool Partition::is_one_dimensional() const { return length() <= 1 || parts_[0] == 1; }

HookData hooks_and_dim(const Partition& tau) {
  if (tau.empty()) throw InvalidShape("empty partition");
  HookData out;
  const Partition tr = tau.transpose();
  std::int64_t prod = 1;
  for (int i = 0; i < tau.length(); ++i) {
    for (int j = 0; j < tau[i]; ++j) {
      int h = (tau[i] - j - 1) + (tr[j] - i - 1) + 1;
      out.hooks[{i, j}] = h;
      prod *= h;
    }
  }
  out.max_hook = tau[0] + tau.length() - 1;
  // N!/prod computed incrementally to stay within 64 bits for moderate N.
  mpz_class fact = 1;
  for (int k = 2; k <= tau.size(); ++k) fact *= k;
  mpz_class dim = fact / prod;
  out.dim = dim.get_si();
  return out;
}

// --- Tableau --------------------------------------------------------------

Tableau::Tableau(const Partition& shape, std::vector<std::vector<int>> rows)
    : shape_(shape), rows_(std::move(rows)) {
  const int n = shape_.size();
  if (static_cast<int>(rows_.size()) != shape_.length()) throw InvalidShape("tableau rows do not match shape");
  content_.assign(n, 0);
  pos_.assign(n, Cell{});
  std::vector<char> seen(n, 0);
  for (int r = 0; r < shape_.length(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_[r]) throw InvalidShape("tableau row length does not match shape");
    for (int c = 0; c < shape_[r]; ++c) {
      int v = rows_[r][c];
      if (v < 1 || v > n || seen[v - 1]) throw InvalidShape("tableau entries must be a permutation of 1..N");
      seen[v - 1] = 1;
      if (c > 0 && rows_[r][c - 1] <= v) throw InvalidShape("tableau rows must decrease");
      if (r > 0 && rows_[r - 1][c] <= v) throw InvalidShape("tableau columns must decrease");
      content_[v - 1] = c - r;
      pos_[v - 1] = {r, c};
    }
  }
}

bool Tableau::swap_is_valid(int i) const {
  if (i < 1 || i >= size()) return false;
  return pos_[i - 1].row != pos_[i].row && pos_[i - 1].col != pos_[i].col;
}

Tableau Tableau::swapped(int i) const {
  if (!swap_is_valid(i)) throw InvalidArgument("entries i, i+1 share a row or column");
  auto rows = rows_;
  std::swap(rows[pos_[i - 1].row][pos_[i - 1].col], rows[pos_[i].row][pos_[i].col]);
  return Tableau(shape_, std::move(rows));
}

Tableau root_tableau(const Partition& tau) {
  if (tau.empty()) throw InvalidShape("empty partition");
  std::vector<std::vector<int>> rows(tau.length());
  for (int r = 0; r < tau.length(); ++r) rows[r].assign(tau[r], 0);
  int v = tau.size();
  const Partition tr = tau.transpose();
  for (int c = 0; c < tau[0]; ++c)
    for (int r = 0; r < tr[c]; ++r) rows[r][c] = v--;
  return Tableau(tau, std::move(rows));
}

std::vector<Tableau> enumerate_rsyt(const Partition& tau) {
  if (tau.empty()) throw InvalidShape("empty partition");
  const int n = tau.size();
  std::vector<std::vector<int>> rows(tau.length());
  std::vector<Tableau> out;
  std::function<void(int)> place = [&](int v) {
    if (v == 0) {
      out.emplace_back(tau, rows);
      return;
    }
    for (int r = 0; r < tau.length(); ++r) {
      int len = static_cast<int>(rows[r].size());
      if (len >= tau[r]) continue;
      if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
      rows[r].push_back(v);
      place(v - 1);
      rows[r].pop_back();
    }
  };
  place(n);
  const Tableau root = root_tableau(tau);
  std::sort(out.begin(), out.end(), [&](const Tableau& a, const Tableau& b) {
    bool ar = a == root, br = b == root;
    if (ar != br) return ar;
    return a.content_vector() > b.content_vector();
  });
  return out;
}

Rational tableau_norm0(const Tableau& t) {
  Rational out = 1;
  for (int i = 1; i <= t.size(); ++i)
    for (int j = i + 1; j <= t.size(); ++j) {
      int d = t.content(i) - t.content(j);
      if (d <= -2) out *= Rational(1) - frac(1, d * d);
    }
  return out;
}

Rational c_eps(const Tableau& t, int eps) {
  Rational out = 1;
  for (int i = 1; i <= t.size(); ++i)
    for (int j = i + 1; j <= t.size(); ++j) {
      int d = t.content(i) - t.content(j);
      if (d <= -2) out *= Rational(1) + Rational(eps, 1) / d;
    }
  return out;
}

int inv(const Tableau& t) {
  int count = 0;
  for (int i = 1; i <= t.size(); ++i)
    for (int j = i + 1; j <= t.size(); ++j)
      if (t.content(i) >= t.content(j) + 2) ++count;
  return count;
}

// --- compositions ---------------------------------------------------------

int abs_degree(std::span<const int> alpha) {
  int s = 0;
  for (int a : alpha) s += a < 0 ? -a : a;
  return s;
}

Composition plus_rearrangement(std::span<const int> alpha) {
  Composition out(alpha.begin(), alpha.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Composition minus_rearrangement(std::span<const int> alpha) {
  Composition out(alpha.begin(), alpha.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_partition(std::span<const int> alpha) {
  return std::is_sorted(alpha.begin(), alpha.end(), std::greater<>());
}

Permutation rank_perm(std::span<const int> alpha) {
  const int n = static_cast<int>(alpha.size());
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) {
    int r = 0;
    for (int j = 0; j < n; ++j) {
      if (alpha[j] > alpha[i]) ++r;
      if (j <= i && alpha[j] == alpha[i]) ++r;
    }
    img[i] = r - 1;
  }
  return Permutation(std::move(img));
}

int inv(std::span<const int> alpha) {
  int count = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      if (alpha[i] < alpha[j]) ++count;
  return count;
}

bool dominance_less(std::span<const int> alpha, std::span<const int> beta) {
  if (alpha.size() != beta.size()) throw InvalidArgument("composition length mismatch");
  bool equal = true;
  long long sa = 0, sb = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    sa += alpha[i];
    sb += beta[i];
    if (sa > sb) return false;
    if (alpha[i] != beta[i]) equal = false;
  }
  return !equal;
}

bool graph_less(std::span<const int> alpha, std::span<const int> beta) {
  if (alpha.size() != beta.size()) throw InvalidArgument("composition length mismatch");
  if (abs_degree(alpha) != abs_degree(beta)) return false;
  const Composition ap = plus_rearrangement(alpha), bp = plus_rearrangement(beta);
  if (dominance_less(ap, bp)) return true;
  return ap == bp && dominance_less(alpha, beta);
}

OrderRelation orders(std::span<const int> alpha, std::span<const int> beta) {
  if (alpha.size() != beta.size()) throw InvalidArgument("composition length mismatch");
  return {dominance_less(alpha, beta), graph_less(alpha, beta)};
}

bool graph_linear_less(std::span<const int> alpha, std::span<const int> beta) {
  const Composition ap = plus_rearrangement(alpha), bp = plus_rearrangement(beta);
  if (ap != bp) return ap < bp;
  return std::lexicographical_compare(alpha.begin(), alpha.end(), beta.begin(), beta.end());
}

// --- fillings -------------------------------------------------------------

bool Filling::column_strict() const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c - 1] > rows[r][c]) return false;
      if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
    }
  return true;
}

int Filling::weight() const {
  int w = 0;
  for (const auto& row : rows)
    for (int v : row) w += v;
  return w;
}

Filling floor_filling(std::span<const int> alpha, const Tableau& t) {
  if (static_cast<int>(alpha.size()) != t.size()) throw InvalidArgument("composition length does not match tableau");
  for (int a : alpha)
    if (a < 0) throw InvalidArgument("floor filling needs nonnegative exponents");
  const Composition plus = plus_rearrangement(alpha);
  Filling f{t.shape(), t.rows()};
  for (auto& row : f.rows)
    for (int& v : row) v = plus[v - 1];
  return f;
}

RootSink root_sink(const Filling& f) {
  if (!f.column_strict()) throw InvalidArgument("root/sink tableaux need a column-strict filling");
  const auto& F = f.rows;
  auto rows_r = F, rows_s = F;
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < F[i].size(); ++j) {
      int greater = 0, eq_root = 0, eq_sink = 0;
      for (std::size_t k = 0; k < F.size(); ++k)
        for (std::size_t l = 0; l < F[k].size(); ++l) {
          if (F[k][l] > F[i][j]) ++greater;
          if (F[k][l] != F[i][j]) continue;
          if (l > j || (l == j && k >= i)) ++eq_root;
          if (k > i || (k == i && l >= j)) ++eq_sink;
        }
      rows_r[i][j] = greater + eq_root;
      rows_s[i][j] = greater + eq_sink;
    }
  return {Tableau(f.shape, std::move(rows_r)), Tableau(f.shape, std::move(rows_s))};
}

std::vector<std::int64_t> jack_count_series(const Partition& tau, int max_degree, bool restrict_last_zero) {
  if (max_degree < 0) return {};
  const HookData hd = hooks_and_dim(tau);
  std::vector<std::int64_t> h(max_degree + 1, 0);
  h[0] = 1;
  // Multiply by 1/(1 - z^k): running sum with stride k.
  for (const auto& [cell, k] : hd.hooks)
    for (int d = k; d <= max_degree; ++d) h[d] += h[d - k];
  std::vector<std::int64_t> out(max_degree + 1, 0);
  const int shift = tau.n_statistic();
  for (int d = shift; d <= max_degree; ++d) out[d] = h[d - shift];
  if (restrict_last_zero) {
    const int n = tau.size();
    for (int d = max_degree; d >= n; --d) out[d] -= out[d - n];
  }
  return out;
}

std::int64_t jack_count(const Partition& tau, int n, bool restrict_last_zero) {
  if (n < 0) throw InvalidArgument("degree must be nonnegative");
  return jack_count_series(tau, n, restrict_last_zero)[n];
}

}  // namespace vvjack
