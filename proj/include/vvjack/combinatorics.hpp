#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "vvjack/permutation.hpp"
#include "vvjack/rational.hpp"

namespace vvjack {

// Exponent multi-index; nonnegative in graph context, arbitrary integers for
// Laurent polynomials.
using Composition = std::vector<int>;

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; throws InvalidShape unless weakly decreasing
  // and nonnegative.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;
  // n(tau) = sum (i-1) tau_i, the minimal degree of a symmetric Jack polynomial.
  int n_statistic() const;
  // S_1(tau) = sum of contents.
  int content_sum() const;
  // One-row or one-column shapes carry one-dimensional modules.
  bool is_one_dimensional() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Cell {
  int row = 0;  // 0-based
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

struct HookData {
  std::map<Cell, int> hooks;
  int max_hook = 0;      // h_tau = tau_1 + l(tau) - 1
  std::int64_t dim = 0;  // n_tau = N! / prod hooks
};

HookData hooks_and_dim(const Partition& tau);

// Reverse standard Young tableau: entries 1..N decreasing along rows and columns.
class Tableau {
 public:
  Tableau() = default;
  // Validates the filling; throws InvalidShape otherwise.
  Tableau(const Partition& shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  // Entry i is 1-based, as in the tableau itself.
  int content(int i) const { return content_[i - 1]; }
  int row_of(int i) const { return pos_[i - 1].row; }
  int col_of(int i) const { return pos_[i - 1].col; }
  const std::vector<int>& content_vector() const { return content_; }

  // T^(i): entries i and i+1 interchanged (may not be an RSYT).
  Tableau swapped(int i) const;
  bool swap_is_valid(int i) const;

  bool operator==(const Tableau& other) const { return content_ == other.content_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> content_;
  std::vector<Cell> pos_;
};

// Root tableau T_0: N, N-1, ..., 1 entered column by column.
Tableau root_tableau(const Partition& tau);

// T_0 first, then the remaining tableaux by decreasing content vector.
std::vector<Tableau> enumerate_rsyt(const Partition& tau);

// <T,T>_0 = prod over i<j, c(i) <= c(j)-2 of (1 - 1/(c(i)-c(j))^2).
Rational tableau_norm0(const Tableau& t);

// C_eps(T) = prod over i<j, c(i) <= c(j)-2 of (1 + eps/(c(i)-c(j))).
Rational c_eps(const Tableau& t, int eps);

// inv(T) = #{i<j : c(i) >= c(j)+2}.
int inv(const Tableau& t);

// --- compositions ---------------------------------------------------------

int abs_degree(std::span<const int> alpha);
Composition plus_rearrangement(std::span<const int> alpha);
Composition minus_rearrangement(std::span<const int> alpha);
bool is_partition(std::span<const int> alpha);

// r_alpha(i) = #{j : alpha_j > alpha_i} + #{j <= i : alpha_j = alpha_i}.
Permutation rank_perm(std::span<const int> alpha);

// inv(alpha) = #{i<j : alpha_i < alpha_j}.
int inv(std::span<const int> alpha);

// Dominance alpha < beta (partial sums, alpha != beta).
bool dominance_less(std::span<const int> alpha, std::span<const int> beta);
// The derived order used for NSJP triangularity.
bool graph_less(std::span<const int> alpha, std::span<const int> beta);

struct OrderRelation {
  bool dominance = false;
  bool graph = false;
};
// Throws InvalidArgument on length mismatch.
OrderRelation orders(std::span<const int> alpha, std::span<const int> beta);

// Total order refining the derived order on compositions of equal degree:
// (alpha+ lex, alpha lex). Returns true when alpha precedes beta.
bool graph_linear_less(std::span<const int> alpha, std::span<const int> beta);

// --- fillings -------------------------------------------------------------

struct Filling {
  Partition shape;
  std::vector<std::vector<int>> rows;

  // Increasing down each column, nondecreasing along each row.
  bool column_strict() const;
  int weight() const;
  auto operator<=>(const Filling&) const = default;
};

// Replace entry i of T by alpha+_i. Throws InvalidArgument on negative entries.
Filling floor_filling(std::span<const int> alpha, const Tableau& t);

struct RootSink {
  Tableau root;
  Tableau sink;
};

// T_R and T_S of the component with the given column-strict filling.
RootSink root_sink(const Filling& f);

// Coefficient of z^n in z^{n(tau)} H_tau(z), times (1 - z^N) when restricted
// to lambda_N = 0.
std::int64_t jack_count(const Partition& tau, int n, bool restrict_last_zero);

// Coefficients 0..max_degree of the same series.
std::vector<std::int64_t> jack_count_series(const Partition& tau, int max_degree,
                                            bool restrict_last_zero);

}  // namespace vvjack
