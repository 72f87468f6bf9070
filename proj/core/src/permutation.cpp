#include "cpt/permutation.hpp"

#include <numeric>

namespace cpt {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      fail(ErrorKind::invalid_argument, "permutation images are not a bijection on [1..n]");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) {
    inv[static_cast<std::size_t>((*this)(i)-1)] = i;
  }
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    fail(ErrorKind::dimension_mismatch, "composing permutations of different sizes");
  }
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) {
    images[static_cast<std::size_t>(i - 1)] = p(q(i));
  }
  return Permutation(std::move(images));
}

}  // namespace cpt
