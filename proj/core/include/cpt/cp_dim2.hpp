#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpt/gramian.hpp"
#include "cpt/outcome.hpp"
#include "cpt/symmetric_tensor.hpp"

namespace cpt {

/// The value profile of a dimension-2 tensor: values[r] is the entry on the
/// indices with exactly r ones (and m-r twos). Canonical storage is
/// symmetric by construction, so each such class holds a single stored
/// value and `valid` is always true; it records that the profile is
/// well-defined. The tensor is strong symmetric exactly when
/// values[1] = ... = values[m-1].
struct Dim2Profile {
  int order = 0;
  std::vector<Rational> values;  // size order + 1
  bool valid = false;
  bool strong_symmetric = false;

  const Rational& diagonal_one() const { return values[static_cast<std::size_t>(order)]; }
  const Rational& diagonal_two() const { return values[0]; }
  /// The common off-diagonal value; meaningful when strong_symmetric.
  const Rational& off_value() const { return values[1]; }
};

Dim2Profile profile_dim2(const SymmetricTensor& tensor);  // throws wrong_dimension

struct DominanceWitness {
  MultiIndex off_index;
  int diagonal;  // the vertex whose diagonal entry is exceeded
  Rational off_value;
  Rational diagonal_value;
};

/// Certificate for the dimension-2 binary-CP test. positive carries the
/// constructive (0,1) decomposition with its exact factor count; negative
/// carries a dominance violation.
struct BcpCertificate {
  Outcome outcome = Outcome::not_applicable;
  std::vector<std::vector<Rational>> factors;  // (0,1) vectors of dimension 2
  std::optional<std::size_t> bcprank;
  std::optional<DominanceWitness> witness;
  std::string reason;
};

/// Decides {0,1}-CP for a strong symmetric nonnegative-integral dimension-2
/// tensor: writes n1 = A(1..1), n2 = A(2..2), n12 = common off-diagonal
/// value; the tensor is {0,1}-CP iff n12 <= min(n1, n2), with exactly
/// n1 + n2 - n12 factors. The returned factors follow the overlapping
/// prefix support layout (first n12 positions shared), so certificates are
/// reproducible. Unmet preconditions yield not_applicable with a reason.
BcpCertificate certify_binary_cp_dim2(const SymmetricTensor& tensor);

/// Result of the three-factor sufficient construction.
struct Dim2Construction {
  Outcome outcome = Outcome::not_applicable;  // positive | inconclusive | not_applicable
  CpDecomposition decomposition{2, {}, {}};
  std::string reason;
};

/// If 0 <= off <= min(diagonals), builds the weighted decomposition
/// (diag1 - off) on {1}, (diag2 - off) on {2}, off on {1,2}, dropping zero
/// weights, hence at most three factors. The condition is sufficient only;
/// when it fails the outcome is inconclusive (such a tensor may still be CP).
Dim2Construction construct_cp_dim2(const SymmetricTensor& tensor);

struct PairwiseWitness {
  MultiIndex index;
  int i;
  int j;
  Rational lhs;  // A(index)^2
  Rational rhs;  // A(i..i) * A(j..j)
};

/// Necessary condition for complete positivity of strong symmetric
/// nonnegative tensors of any dimension: A(s)^2 <= A(i..i) A(j..j) for every
/// index with base set {i, j}. A violation certifies the tensor is not CP;
/// passing proves nothing.
struct PairwiseCheck {
  bool applicable = false;  // strong symmetric and entrywise nonnegative
  bool passed = false;
  std::optional<PairwiseWitness> witness;
};

PairwiseCheck pairwise_necessary_check(const SymmetricTensor& tensor);

/// Necessary condition for {0,1}-CP of integral tensors of any dimension:
/// every entry is at most each of its associated diagonal entries.
struct DominanceCheck {
  bool applicable = false;  // entries are nonnegative integers
  bool passed = false;
  std::optional<DominanceWitness> witness;
};

DominanceCheck dominance_necessary_check(const SymmetricTensor& tensor);

}  // namespace cpt
