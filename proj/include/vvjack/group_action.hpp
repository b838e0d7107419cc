#pragma once

#include <Eigen/Dense>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "vvjack/combinatorics.hpp"
#include "vvjack/permutation.hpp"
#include "vvjack/rational.hpp"

namespace vvjack {

enum class Basis {
  unnormalized,  // {T}, exact rational entries
  orthonormal,   // {<T,T>_0^{-1/2} T}, floating point
};

// The irreducible representation tau of S_N on V_tau in the RSYT basis.
// Matrices act on coordinate columns: column T holds tau(w) T.
class Representation {
 public:
  explicit Representation(const Partition& tau);

  const Partition& shape() const { return tau_; }
  int degree() const { return tau_.size(); }  // N
  int dim() const { return static_cast<int>(tableaux_.size()); }
  const std::vector<Tableau>& tableaux() const { return tableaux_; }
  const Tableau& tableau(int t) const { return tableaux_[t]; }
  const std::vector<Rational>& norms0() const { return norms0_; }
  // Index of the tableau with this content vector, or -1.
  int index_of(const std::vector<int>& content) const;
  int index_of(const Tableau& t) const { return index_of(t.content_vector()); }

  // tau(s_i), 0-based i.
  const RMatrix& simple(int i) const;
  // tau(w) as a product over a reduced word; cached per permutation.
  const RMatrix& word(const Permutation& w) const;
  // tau(w) from an arbitrary word s_{k_1}...s_{k_m}.
  RMatrix word(const std::vector<int>& reflections) const;
  const RMatrix& transposition(int i, int j) const;

  // Floating-point matrices in the orthonormal basis: D M D^{-1}, D = diag(sqrt <T,T>_0).
  Eigen::MatrixXd orthonormal(const RMatrix& m) const;
  Eigen::MatrixXd simple_orthonormal(int i) const { return orthonormal(simple(i)); }
  Eigen::MatrixXd word_orthonormal(const Permutation& w) const { return orthonormal(word(w)); }

 private:
  Partition tau_;
  std::vector<Tableau> tableaux_;
  std::vector<Rational> norms0_;
  std::map<std::vector<int>, int> index_;
  std::vector<RMatrix> simple_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<int>, std::unique_ptr<RMatrix>> word_cache_;
};

// tau(s_i) in the requested basis; exact only for the unnormalized basis.
Eigen::MatrixXd rep_simple(const Representation& rep, int i, Basis basis);
Eigen::MatrixXd rep_word(const Representation& rep, const Permutation& w, Basis basis);

// Shared representation instance per shape.
std::shared_ptr<const Representation> representation_for(const Partition& tau);

}  // namespace vvjack
