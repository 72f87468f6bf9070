#pragma once

#include <vector>

#include "cpt/error.hpp"

namespace cpt {

/// A bijection on [1..n].
class Permutation {
 public:
  /// images[i-1] is the image of i; must be a bijection on [1..n].
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  bool operator==(const Permutation& other) const = default;

 private:
  std::vector<int> images_;
};

/// compose(p, q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace cpt
