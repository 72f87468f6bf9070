#include "cpt/tensor_ops.hpp"

#include <algorithm>
#include <map>

namespace cpt {

namespace {

void check_nonnegative(std::span<const Rational> vec, const char* what) {
  for (const Rational& v : vec) {
    if (v < 0) fail(ErrorKind::negative_factor, std::string(what) + " has a negative entry");
  }
}

}  // namespace

SymmetricTensor rank_one_power(std::span<const Rational> beta, int order) {
  if (order < 2) fail(ErrorKind::invalid_argument, "rank-one power needs order >= 2");
  check_nonnegative(beta, "rank-one factor");
  const int dim = static_cast<int>(beta.size());
  std::vector<Rational> values(canonical_count(order, dim));
  for_each_canonical(order, dim, [&](const std::vector<int>& entries, std::size_t rank) {
    Rational product = 1;
    for (int i : entries) product *= beta[static_cast<std::size_t>(i - 1)];
    values[rank] = std::move(product);
  });
  Domain domain = detect_domain(values);
  return SymmetricTensor(order, dim, std::move(values), domain);
}

SymmetricTensor sum_rank_one(std::span<const std::vector<Rational>> factors, int order) {
  int dim = factors.empty() ? 0 : static_cast<int>(factors.front().size());
  return sum_rank_one(factors, order, dim);
}

SymmetricTensor sum_rank_one(std::span<const std::vector<Rational>> factors, int order,
                             int dim) {
  for (const auto& f : factors) {
    if (static_cast<int>(f.size()) != dim) {
      fail(ErrorKind::dimension_mismatch, "rank-one factors have mixed dimensions");
    }
    check_nonnegative(f, "rank-one factor");
  }
  if (order < 2) fail(ErrorKind::invalid_argument, "rank-one power needs order >= 2");
  std::vector<Rational> values(canonical_count(order, dim), Rational(0));
  for (const auto& f : factors) {
    for_each_canonical(order, dim, [&](const std::vector<int>& entries, std::size_t rank) {
      Rational product = 1;
      for (int i : entries) product *= f[static_cast<std::size_t>(i - 1)];
      values[rank] += product;
    });
  }
  Domain domain = detect_domain(values);
  return SymmetricTensor(order, dim, std::move(values), domain);
}

Rational evaluate(const SymmetricTensor& tensor, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != tensor.dim()) {
    fail(ErrorKind::dimension_mismatch, "evaluation point does not match tensor dimension");
  }
  Rational total = 0;
  for_each_canonical(tensor.order(), tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       const Rational& value = tensor.at_rank(rank);
                       if (value == 0) return;
                       Rational product = 1;
                       for (int i : entries) product *= point[static_cast<std::size_t>(i - 1)];
                       if (product == 0) return;
                       total += value * Rational(permutation_count(entries)) * product;
                     });
  return total;
}

SymmetricTensor direct_sum(const SymmetricTensor& first, const SymmetricTensor& second) {
  if (first.order() != second.order()) {
    fail(ErrorKind::order_mismatch, "direct sum of tensors with different orders");
  }
  const int order = first.order();
  const int n1 = first.dim();
  const int dim = n1 + second.dim();
  std::vector<Rational> values(canonical_count(order, dim), Rational(0));
  std::vector<int> shifted(static_cast<std::size_t>(order));
  for_each_canonical(order, dim, [&](const std::vector<int>& entries, std::size_t rank) {
    if (entries.back() <= n1) {
      values[rank] = first.at(entries);
    } else if (entries.front() > n1) {
      std::transform(entries.begin(), entries.end(), shifted.begin(),
                     [n1](int i) { return i - n1; });
      values[rank] = second.at(shifted);
    }
  });
  return SymmetricTensor(order, dim, std::move(values),
                         join(first.domain(), second.domain()));
}

SymmetricTensor permute(const SymmetricTensor& tensor, const Permutation& perm) {
  if (perm.size() != tensor.dim()) {
    fail(ErrorKind::dimension_mismatch, "permutation size does not match tensor dimension");
  }
  std::vector<Rational> values(tensor.size(), Rational(0));
  std::vector<int> image(static_cast<std::size_t>(tensor.order()));
  for_each_canonical(tensor.order(), tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       std::transform(entries.begin(), entries.end(), image.begin(),
                                      [&perm](int i) { return perm(i); });
                       std::sort(image.begin(), image.end());
                       values[colex_rank(image)] = tensor.at_rank(rank);
                     });
  return SymmetricTensor(tensor.order(), tensor.dim(), std::move(values), tensor.domain());
}

SymmetricTensor khatri_rao_power(const std::vector<std::vector<Rational>>& columns,
                                 int order) {
  if (order < 2) fail(ErrorKind::invalid_argument, "Khatri-Rao power needs order >= 2");
  int dim = columns.empty() ? 0 : static_cast<int>(columns.front().size());
  for (const auto& column : columns) {
    if (static_cast<int>(column.size()) != dim) {
      fail(ErrorKind::dimension_mismatch, "matrix columns have mixed dimensions");
    }
    check_nonnegative(column, "matrix column");
  }
  std::vector<Rational> values(canonical_count(order, dim));
  for_each_canonical(order, dim, [&](const std::vector<int>& entries, std::size_t rank) {
    Rational total = 0;
    for (const auto& column : columns) {
      Rational product = 1;
      for (int i : entries) {
        product *= column[static_cast<std::size_t>(i - 1)];
        if (product == 0) break;
      }
      total += product;
    }
    values[rank] = std::move(total);
  });
  Domain domain = detect_domain(values);
  return SymmetricTensor(order, dim, std::move(values), domain);
}

bool is_strong_symmetric(const SymmetricTensor& tensor) {
  std::map<std::vector<int>, Rational> seen;
  bool strong = true;
  for_each_canonical(tensor.order(), tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       if (!strong) return;
                       auto [it, inserted] = seen.emplace(base_set_of(entries),
                                                          tensor.at_rank(rank));
                       if (!inserted && it->second != tensor.at_rank(rank)) strong = false;
                     });
  return strong;
}

SymmetricTensor principal_subtensor(const SymmetricTensor& tensor,
                                    std::span<const int> indices) {
  if (!std::is_sorted(indices.begin(), indices.end()) ||
      std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    fail(ErrorKind::bad_subset, "index subset must be strictly increasing");
  }
  for (int i : indices) {
    if (i < 1 || i > tensor.dim()) fail(ErrorKind::bad_subset, "index subset out of range");
  }
  const int sub_dim = static_cast<int>(indices.size());
  std::vector<Rational> values(canonical_count(tensor.order(), sub_dim));
  std::vector<int> mapped(static_cast<std::size_t>(tensor.order()));
  for_each_canonical(tensor.order(), sub_dim,
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       std::transform(entries.begin(), entries.end(), mapped.begin(),
                                      [&indices](int i) {
                                        return indices[static_cast<std::size_t>(i - 1)];
                                      });
                       values[rank] = tensor.at(mapped);
                     });
  return SymmetricTensor(tensor.order(), sub_dim, std::move(values), tensor.domain());
}

bool is_diagonal(const SymmetricTensor& tensor) {
  bool diagonal = true;
  for_each_canonical(tensor.order(), tensor.dim(),
                     [&](const std::vector<int>& entries, std::size_t rank) {
                       if (entries.front() != entries.back() && tensor.at_rank(rank) != 0) {
                         diagonal = false;
                       }
                     });
  return diagonal;
}

}  // namespace cpt
