#include "vvjack/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "vvjack/errors.hpp"

namespace vvjack {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= size() || seen[v]) throw InvalidArgument("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 0 || i + 1 >= n) throw InvalidArgument("simple reflection index out of range");
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidArgument("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.img_[i], p.img_[j]);
  return p;
}

Permutation Permutation::cycle(int n) {
  Permutation p = identity(n);
  for (int i = 0; i < n; ++i) p.img_[i] = (i + 1) % n;
  return p;
}

Permutation Permutation::from_one_line(std::span<const int> one_based) {
  std::vector<int> img;
  img.reserve(one_based.size());
  for (int v : one_based) img.push_back(v - 1);
  return Permutation(std::move(img));
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out;
  out.reserve(img_.size());
  for (int v : img_) out.push_back(v + 1);
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) throw InvalidArgument("permutation size mismatch");
  Permutation p = identity(size());
  for (int i = 0; i < size(); ++i) p.img_[i] = img_[other.img_[i]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p = identity(size());
  for (int i = 0; i < size(); ++i) p.img_[img_[i]] = i;
  return p;
}

Permutation Permutation::pow(int m) const {
  Permutation base = m >= 0 ? *this : inverse();
  Permutation out = identity(size());
  for (int k = 0; k < (m >= 0 ? m : -m); ++k) out = out * base;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::reduced_word() const {
  // w s_i swaps the images at positions i, i+1; sort to the identity and
  // read the recorded reflections backwards.
  std::vector<int> img = img_;
  std::vector<int> word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 0; i + 1 < size(); ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        word.push_back(i);
        swapped = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

int Permutation::length() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (img_[i] > img_[j]) ++count;
  return count;
}

}  // namespace vvjack
