#pragma once

#include <cstdint>
#include <vector>

#include "bkp/errors.hpp"

namespace bkp {

// A bijection on [0, degree), stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree) : img_(degree) {
    for (int i = 0; i < degree; ++i) img_[i] = i;
  }

  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  int first_moved() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return -1;
  }

  // (a*b)(x) = a(b(x)): b acts first.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  // Cycle lengths including fixed points, unsorted.
  std::vector<int> cycle_lengths() const;
  bool is_odd() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace bkp
