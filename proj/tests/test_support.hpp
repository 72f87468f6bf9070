#pragma once

// Test-only helpers: independent oracles and deterministic random input
// generators. Nothing here may call the code paths it is used to check.

#include <random>
#include <vector>

#include "cpt/scalar.hpp"
#include "cpt/symmetric_tensor.hpp"

namespace cpt::testing {

/// The multilinear form expanded over all n^m raw subscripts. Independent
/// of the multiplicity-based evaluate(): no canonical iteration, no
/// multinomials, just a full odometer over raw tuples.
inline Rational evaluate_raw(const SymmetricTensor& tensor,
                             const std::vector<Rational>& point) {
  const int m = tensor.order();
  const int n = tensor.dim();
  if (n == 0) return Rational(0);
  std::vector<int> raw(static_cast<std::size_t>(m), 1);
  Rational total = 0;
  while (true) {
    Rational term = tensor.at(raw);
    for (int i : raw) term *= point[static_cast<std::size_t>(i - 1)];
    total += term;
    int k = m - 1;
    while (k >= 0 && raw[static_cast<std::size_t>(k)] == n) {
      raw[static_cast<std::size_t>(k)] = 1;
      --k;
    }
    if (k < 0) break;
    ++raw[static_cast<std::size_t>(k)];
  }
  return total;
}

/// Sum of rank-one powers expanded entry by entry over raw subscripts,
/// an oracle for both sum_rank_one and khatri_rao_power.
inline Rational rank_one_sum_entry_raw(const std::vector<std::vector<Rational>>& factors,
                                       const std::vector<int>& raw) {
  Rational total = 0;
  for (const auto& factor : factors) {
    Rational product = 1;
    for (int i : raw) product *= factor[static_cast<std::size_t>(i - 1)];
    total += product;
  }
  return total;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }

  Rational rational(int max_numerator, int max_denominator) {
    int num = uniform(0, max_numerator);
    int den = uniform(1, max_denominator);
    return Rational(num, den);
  }

  std::vector<Rational> rational_vector(int dim, int max_numerator, int max_denominator) {
    std::vector<Rational> result(static_cast<std::size_t>(dim));
    for (auto& v : result) v = rational(max_numerator, max_denominator);
    return result;
  }

  std::vector<Rational> integer_vector(int dim, int max_value) {
    std::vector<Rational> result(static_cast<std::size_t>(dim));
    for (auto& v : result) v = uniform(0, max_value);
    return result;
  }

  /// Random (0,1) symmetric tensor; `zero_percent` controls sparsity.
  SymmetricTensor binary_tensor(int order, int dim, int zero_percent) {
    std::vector<Rational> values(canonical_count(order, dim));
    for (auto& v : values) v = uniform(1, 100) <= zero_percent ? 0 : 1;
    return SymmetricTensor(order, dim, std::move(values), Domain::binary);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cpt::testing
