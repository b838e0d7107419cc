#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace vvjack {

// Element of S_N stored by its 0-based images. Composition is functional:
// (a * b)(i) = a(b(i)), matching products of permutation matrices.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // s_i = (i, i+1), with 0-based i in [0, n-1).
  static Permutation simple(int n, int i);
  static Permutation transposition(int n, int i, int j);
  // The N-cycle w0 = (1,2,...,N): w0(i) = i+1, w0(N) = 1.
  static Permutation cycle(int n);
  // One-line notation with 1-based values, e.g. [3,2,4,1].
  static Permutation from_one_line(std::span<const int> one_based);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  std::vector<int> one_line() const;

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation pow(int m) const;
  bool is_identity() const;

  // Simple-reflection indices k_1..k_m (0-based) with w = s_{k_1} ... s_{k_m},
  // obtained by bubble-sorting the image vector; the word is reduced.
  std::vector<int> reduced_word() const;
  int length() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

}  // namespace vvjack
