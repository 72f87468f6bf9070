#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpt/symmetric_tensor.hpp"

namespace cpt {

/// A d x n matrix given by its n columns, the generating vectors of a
/// Gramian tensor. The rows (the transposed view) are the rank-one factors
/// of the corresponding CP decomposition.
class FactorMatrix {
 public:
  explicit FactorMatrix(std::vector<std::vector<Rational>> columns);

  static FactorMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static FactorMatrix diagonal(std::span<const Rational> diagonal_values);

  int vector_dim() const { return dim_; }           // d
  int column_count() const { return static_cast<int>(columns_.size()); }  // n
  const std::vector<Rational>& column(int j) const { return columns_[static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<Rational>>& columns() const { return columns_; }

  /// The d rows, each an n-vector.
  std::vector<std::vector<Rational>> rows() const;

  bool is_nonnegative() const { return nonnegative_; }

 private:
  std::vector<std::vector<Rational>> columns_;
  int dim_;
  bool nonnegative_;
};

/// A factor whose coordinates are the m-th root of `weight` on `support` and
/// zero elsewhere. Its rank-one power contributes exactly `weight` at every
/// index whose base set lies inside `support`, so decompositions built from
/// these verify exactly without extracting roots.
struct WeightedFactor {
  std::vector<int> support;  // ascending, 1-based
  Rational weight;           // the m-th power mass; >= 0
};

/// A candidate CP decomposition: plain nonnegative factors beta_j plus
/// optional weighted factors. The represented tensor is
/// sum_j beta_j^m + sum of weighted contributions.
class CpDecomposition {
 public:
  CpDecomposition(int dim, std::vector<std::vector<Rational>> factors,
                  std::vector<WeightedFactor> weighted = {});

  int dim() const { return dim_; }
  std::size_t size() const { return factors_.size() + weighted_.size(); }
  const std::vector<std::vector<Rational>>& factors() const { return factors_; }
  const std::vector<WeightedFactor>& weighted() const { return weighted_; }

 private:
  int dim_;
  std::vector<std::vector<Rational>> factors_;
  std::vector<WeightedFactor> weighted_;
};

/// Coordinatewise product of a nonempty family of equal-length vectors.
std::vector<Rational> hadamard(std::span<const std::vector<Rational>> vectors);

/// Sum of the coordinates of the Hadamard product.
Rational m_inner_product(std::span<const std::vector<Rational>> vectors);

/// Sum of m-th powers of the coordinates: the m-inner product of m copies.
Rational m_power_sum(std::span<const Rational> vec, int order);

/// The m-norm (m-th root of the m-inner power). Exact when the power is a
/// perfect m-th rational power, otherwise a dyadic enclosure of width
/// <= 2^-50. Requires the power to be nonnegative.
RootEnclosure m_norm(std::span<const Rational> vec, int order);

/// The order-m Gramian tensor of the matrix columns:
/// entry (i1..im) = m-inner product of columns i1..im, with multiplicity.
SymmetricTensor gram_tensor(const FactorMatrix& matrix, int order);

/// The rank-one factors read off a nonnegative factor matrix (its rows).
CpDecomposition row_decomposition(const FactorMatrix& matrix);

struct VerifyResult {
  bool verified;
  /// First differing canonical index in colex (storage) order.
  std::optional<MultiIndex> first_mismatch;
  Rational tensor_value;
  Rational decomposition_value;
};

/// Exact entrywise check that the decomposition reproduces the tensor.
/// Weighted factors are verified in the weight domain, never through roots.
VerifyResult verify_cp_decomposition(const SymmetricTensor& tensor,
                                     const CpDecomposition& decomposition);

struct HolderCheck {
  Rational lhs;  // (m-inner product of the family)^m
  Rational rhs;  // product of the pure m-th powers
  bool holds;    // lhs <= rhs
};

/// The m-inner product inequality for nonnegative families:
/// (a1,..,am)^m <= prod_j (aj,..,aj), compared exactly.
HolderCheck holder_check(std::span<const std::vector<Rational>> vectors);

}  // namespace cpt
