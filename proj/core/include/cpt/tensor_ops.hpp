#pragma once

#include <span>
#include <vector>

#include "cpt/permutation.hpp"
#include "cpt/symmetric_tensor.hpp"

namespace cpt {

/// beta^m: the symmetric rank-one power of a nonnegative vector,
/// (beta^m)(i1..im) = prod_k beta[ik].
SymmetricTensor rank_one_power(std::span<const Rational> beta, int order);

/// Entrywise sum of rank-one powers. The empty family yields the
/// dimension-0 zero tensor; use the (factors, order, dim) overload when the
/// target dimension must survive an empty list.
SymmetricTensor sum_rank_one(std::span<const std::vector<Rational>> factors, int order);
SymmetricTensor sum_rank_one(std::span<const std::vector<Rational>> factors, int order,
                             int dim);

/// The full multilinear form A x^m, computed per canonical index with
/// multinomial multiplicities.
Rational evaluate(const SymmetricTensor& tensor, std::span<const Rational> point);

/// Block-diagonal combination; cross-block entries are zero.
SymmetricTensor direct_sum(const SymmetricTensor& first, const SymmetricTensor& second);

/// Relabels every mode by `perm`: result(p(i1)..p(im)) = tensor(i1..im).
SymmetricTensor permute(const SymmetricTensor& tensor, const Permutation& perm);

/// The symmetric tensor of the m-fold columnwise Kronecker power of a
/// nonnegative matrix given by its columns: entry (i1..im) sums
/// prod_k column[ik] over the columns. Coincides entrywise with
/// sum_rank_one over the columns; the two are computed along different
/// routes and the identity is checked in tests rather than shared code.
SymmetricTensor khatri_rao_power(const std::vector<std::vector<Rational>>& columns,
                                 int order);

/// True when entries depend only on the base set of the index. Strictly
/// stronger than symmetry: rank-one powers of non-(0,1) vectors are
/// symmetric but in general not strong symmetric.
bool is_strong_symmetric(const SymmetricTensor& tensor);

/// The subtensor induced by an ascending list of indices from [1..n].
SymmetricTensor principal_subtensor(const SymmetricTensor& tensor,
                                    std::span<const int> indices);

/// All entries with at least two distinct subscripts are zero.
bool is_diagonal(const SymmetricTensor& tensor);

}  // namespace cpt
