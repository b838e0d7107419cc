#include "vvjack/group_action.hpp"

#include <cmath>

#include "vvjack/errors.hpp"

namespace vvjack {

Representation::Representation(const Partition& tau) : tau_(tau) {
  if (tau.empty()) throw InvalidShape("empty partition");
  tableaux_ = enumerate_rsyt(tau);
  for (int t = 0; t < dim(); ++t) {
    index_[tableaux_[t].content_vector()] = t;
    norms0_.push_back(tableau_norm0(tableaux_[t]));
  }
  const int n = tau.size();
  for (int i = 1; i < n; ++i) {
    RMatrix m(dim());
    for (int t = 0; t < dim(); ++t) {
      const Tableau& T = tableaux_[t];
      const int diff = T.content(i) - T.content(i + 1);
      if (diff == 1) {
        m(t, t) = 1;
      } else if (diff == -1) {
        m(t, t) = -1;
      } else {
        // tau(s_i) T = b T + (1 or 1-b^2) T^(i), b = 1/diff.
        const Rational b = frac(1, diff);
        const int u = index_of(T.swapped(i));
        m(t, t) = b;
        m(u, t) = diff >= 2 ? Rational(1) : Rational(1 - b * b);
      }
    }
    simple_.push_back(std::move(m));
  }
}

int Representation::index_of(const std::vector<int>& content) const {
  auto it = index_.find(content);
  return it == index_.end() ? -1 : it->second;
}

const RMatrix& Representation::simple(int i) const {
  if (i < 0 || i >= static_cast<int>(simple_.size())) throw InvalidArgument("simple reflection index out of range");
  return simple_[i];
}

RMatrix Representation::word(const std::vector<int>& reflections) const {
  RMatrix m = RMatrix::identity(dim());
  for (int k : reflections) m = m * simple(k);
  return m;
}

const RMatrix& Representation::word(const Permutation& w) const {
  if (w.size() != degree()) throw InvalidArgument("permutation size does not match N");
  std::lock_guard lock(cache_mutex_);
  auto& slot = word_cache_[w.images()];
  if (!slot) slot = std::make_unique<RMatrix>(word(w.reduced_word()));
  return *slot;
}

const RMatrix& Representation::transposition(int i, int j) const {
  return word(Permutation::transposition(degree(), i, j));
}

Eigen::MatrixXd Representation::orthonormal(const RMatrix& m) const {
  const int n = dim();
  Eigen::MatrixXd out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out(r, c) = to_double(m(r, c)) * std::sqrt(to_double(norms0_[r]) / to_double(norms0_[c]));
  return out;
}

namespace {

Eigen::MatrixXd to_eigen(const RMatrix& m) {
  Eigen::MatrixXd out(m.size(), m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out(r, c) = to_double(m(r, c));
  return out;
}

}  // namespace

Eigen::MatrixXd rep_simple(const Representation& rep, int i, Basis basis) {
  return basis == Basis::orthonormal ? rep.simple_orthonormal(i) : to_eigen(rep.simple(i));
}

Eigen::MatrixXd rep_word(const Representation& rep, const Permutation& w, Basis basis) {
  return basis == Basis::orthonormal ? rep.word_orthonormal(w) : to_eigen(rep.word(w));
}

std::shared_ptr<const Representation> representation_for(const Partition& tau) {
  static std::mutex mutex;
  static std::map<Partition, std::shared_ptr<const Representation>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[tau];
  if (!slot) slot = std::make_shared<const Representation>(tau);
  return slot;
}

}  // namespace vvjack
