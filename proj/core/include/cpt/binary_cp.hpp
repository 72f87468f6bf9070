#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpt/outcome.hpp"
#include "cpt/permutation.hpp"
#include "cpt/symmetric_tensor.hpp"

namespace cpt {

/// Reducibility with respect to a proper nonempty subset I of [1..n].
///
/// is_reducible uses the base-set predicate: every canonical entry whose
/// base set meets both I and its complement is zero. This is the predicate
/// the direct-sum block structure needs.
///
/// is_reducible_slicewise checks only the entries with exactly one
/// subscript in I (the first-index form). It is implied by the base-set
/// predicate but strictly weaker: with order 3, A(1,1,2) = 1, A(1,2,2) = 0
/// the slicewise form holds for I = {1} while the base-set form fails.
bool is_reducible(const SymmetricTensor& tensor, std::span<const int> subset);
bool is_reducible_slicewise(const SymmetricTensor& tensor, std::span<const int> subset);

/// The finest splitting of a tensor into irreducible principal blocks plus a
/// trailing zero block, under a single relabeling of [1..n].
/// permute(tensor, perm) equals blocks[0] + ... + blocks[r-1] + zeros,
/// exactly. Blocks are ordered by their smallest original vertex; vertices
/// appearing in no nonzero entry form the zero block.
struct BlockDecomposition {
  Permutation perm;
  std::vector<SymmetricTensor> blocks;
  std::vector<std::vector<int>> block_vertices;  // original labels, ascending
  std::size_t zero_dim = 0;
};

BlockDecomposition irreducible_components(const SymmetricTensor& tensor);

/// blocks[0] + ... + blocks[r-1] + zero block, the right side of the
/// reconstruction identity.
SymmetricTensor reassemble(const BlockDecomposition& decomposition, int order);

/// Certificate for {0,1}-CP of a (0,1) symmetric tensor: positive iff every
/// nonzero irreducible block is all-ones. On success the indicator columns
/// of the blocks satisfy U^T U = diag(n1..nq) and sum to the tensor; on
/// failure `witness` is the first block that is not all-ones.
struct BinaryCpResult {
  Outcome outcome = Outcome::negative;
  std::vector<std::vector<int>> u_columns;  // (0,1) indicators, dimension n
  std::vector<std::size_t> block_sizes;
  struct Witness {
    std::vector<int> vertices;
    SymmetricTensor block;
  };
  std::optional<Witness> witness;
};

BinaryCpResult certify_binary_cp_01(const SymmetricTensor& tensor);

/// Exact binary cprank of a nonnegative integral diagonal tensor: the sum
/// of the diagonal, realized by repeating each standard basis vector.
struct DiagonalBcprank {
  std::size_t rank = 0;
  std::vector<std::vector<int>> factors;
};

DiagonalBcprank diagonal_bcprank(const SymmetricTensor& tensor);

/// Structural report on a verified uniform (0,1)-factor decomposition.
/// `essential_01` means every off-diagonal entry is 0 or 1 (diagonal
/// unconstrained). The bounds are informational readings of the support
/// structure, not asserted properties.
struct UniformBoundsReport {
  bool uniform = false;
  std::size_t support_size = 0;
  std::size_t factor_count = 0;
  bool tensor_is_01 = false;
  bool essential_01 = false;
  bool supports_disjoint = false;
  bool intersections_at_most_one = false;
  bool n_equals_m_times_r = false;
  std::optional<std::size_t> bound_uniform;    // r, when (0,1) + m-uniform + disjoint
  std::optional<std::size_t> bound_essential;  // ceil(n/(k-1)), when k >= 2
};

UniformBoundsReport uniform_bounds_check(const SymmetricTensor& tensor,
                                         const std::vector<std::vector<int>>& factors);

struct OracleOptions {
  /// Largest factor count searched. Defaults to the diagonal sum, which is
  /// a complete bound: every nonzero (0,1) factor adds at least one to the
  /// diagonal total, so no decomposition can be longer.
  std::optional<std::size_t> k_max;
  std::uint64_t node_cap = 10'000'000;
};

/// Exhaustive search for a (0,1) decomposition of a nonnegative integral
/// tensor: multisets of nonzero (0,1) vectors tried in ascending
/// lexicographic order with iterative deepening, pruned by entrywise
/// residual feasibility. Returns the lexicographically first decomposition
/// at the smallest feasible size, or proves exhaustion up to k_max.
struct OracleResult {
  enum class Status { found, exhausted };
  Status status = Status::exhausted;
  std::vector<std::vector<int>> factors;
  std::size_t k = 0;
  std::size_t k_max = 0;
  std::uint64_t nodes_visited = 0;
};

OracleResult oracle_binary_cp_search(const SymmetricTensor& tensor,
                                     const OracleOptions& options = {});

}  // namespace cpt
