#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "vvjack/combinatorics.hpp"
#include "vvjack/vvpoly.hpp"

namespace vvjack {

// (alpha, T) label of a nonsymmetric Jack polynomial; T by index in the
// canonical enumeration.
struct Label {
  Composition alpha;
  int tableau = 0;
  auto operator<=>(const Label&) const = default;
};

// xi_i = alpha_i + 1 + kappa c(r_alpha(i), T).
RVector spectral_vector(const KappaContext& ctx, std::span<const int> alpha, int tableau);

// E_eps(alpha, T) = prod over i<j, alpha_i < alpha_j of
// (1 + eps kappa / (alpha_j - alpha_i + kappa (c(r(j),T) - c(r(i),T)))).
Rational e_eps(const KappaContext& ctx, std::span<const int> alpha, int tableau, int eps);

struct GraphNode {
  Composition alpha;
  int tableau = 0;
  RVector xi;
  Permutation rank;
  std::shared_ptr<const VVPoly> zeta;  // may be null when not materialized
};

struct Edge {
  enum class Kind { affine, step, jump };
  Kind kind = Kind::step;
  int i = 0;  // 0-based s_i for step and jump

  static Edge affine() { return {Kind::affine, 0}; }
  static Edge step(int i) { return {Kind::step, i}; }
  static Edge jump(int i) { return {Kind::jump, i}; }
};

// Coefficient b of an s_i edge: zeta' = s_i zeta - b zeta.
// Step: kappa / (xi_i - xi_{i+1}); jump: 1 / (c(j,T) - c(j+1,T)) with j = r_alpha(i).
Rational edge_coefficient(const KappaContext& ctx, const GraphNode& node, Edge edge);

// Follow one edge. Throws InvalidArgument when the edge precondition fails and
// InadmissibleKappa on a vanishing denominator. The polynomial is carried along
// when the source node has one.
GraphNode apply_edge(const ContextPtr& ctx, const GraphNode& node, Edge edge);

// Which descent (or jump pair) the scheduler resolves first; both orders must
// produce identical polynomials.
enum class Schedule { leftmost, rightmost };

// One step of the path scheduler: the edge and predecessor that produce (alpha, T).
struct Predecessor {
  Label source;
  Edge edge;
};
// nullopt for the root (0^N, T_0).
std::optional<Predecessor> predecessor(const KappaContext& ctx, const Label& target, Schedule schedule);

// Memoized Yang-Baxter graph over a fixed context. Each node is computed once.
class YangBaxterGraph {
 public:
  explicit YangBaxterGraph(ContextPtr ctx, Schedule schedule = Schedule::leftmost);

  const ContextPtr& context() const { return ctx_; }
  Schedule schedule() const { return schedule_; }

  // zeta_{alpha, T}; alpha may have negative entries (Laurent extension).
  const VVPoly& nsjp(std::span<const int> alpha, int tableau);
  GraphNode node(std::span<const int> alpha, int tableau);
  // Labels reached so far.
  std::size_t size() const;

  // The edge path from the root to (alpha, T) chosen by the scheduler.
  std::vector<Edge> path(std::span<const int> alpha, int tableau) const;

  // Rejects kappa if two distinct labels of degree d share a spectral vector.
  void check_spectral_distinct(int degree) const;

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const VVPoly> value;
  };
  std::shared_ptr<const VVPoly> compute(const Label& label);
  std::shared_ptr<const VVPoly> get(const Label& label);

  ContextPtr ctx_;
  Schedule schedule_;
  mutable std::mutex mutex_;
  std::map<Label, std::unique_ptr<Slot>> memo_;
  mutable std::set<int> checked_degrees_;
};

// All compositions of n into N nonnegative parts, in lexicographic order.
std::vector<Composition> compositions(int n, int parts);

}  // namespace vvjack
