#include "bkp/permutation.hpp"

namespace bkp {

Permutation Permutation::from_images(std::vector<int> images) {
  int d = static_cast<int>(images.size());
  std::vector<bool> hit(d, false);
  for (int x : images) {
    if (x < 0 || x >= d || hit[x])
      throw ParamError("image array is not a bijection");
    hit[x] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) out.img_[x] = img_[rhs.img_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) out.img_[img_[x]] = static_cast<int>(x);
  return out;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

bool Permutation::is_odd() const {
  int transpositions = 0;
  for (int len : cycle_lengths()) transpositions += len - 1;
  return transpositions % 2 == 1;
}

}  // namespace bkp
