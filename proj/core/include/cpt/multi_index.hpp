#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "cpt/error.hpp"
#include "cpt/scalar.hpp"

namespace cpt {

/// A canonical subscript of a symmetric tensor: a non-decreasing m-tuple of
/// integers drawn from [1..n]. Every permutation of a raw subscript maps to
/// the same canonical index.
class MultiIndex {
 public:
  /// `entries` must already be sorted; use canonicalize() for raw tuples.
  MultiIndex(std::vector<int> entries, int dim);

  static MultiIndex canonicalize(std::span<const int> raw, int dim);

  int order() const { return static_cast<int>(entries_.size()); }
  int dim() const { return dim_; }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }

  /// Distinct entries, ascending.
  std::vector<int> base_set() const;

  /// sum(entries) - m; ranges over [0 .. m(n-1)].
  long level() const;

  /// Number of raw subscripts mapping here: m! / prod(count_v!).
  Integer multiplicity() const;

  bool operator==(const MultiIndex& other) const = default;
  std::strong_ordering operator<=>(const MultiIndex& other) const;

 private:
  std::vector<int> entries_;
  int dim_;
};

/// Storage footprint of a symmetric tensor: C(n+m-1, m) canonical indices.
std::size_t canonical_count(int order, int dim);

/// Position of a canonical tuple in the dense colex layout. Colex compares
/// the last differing entry, so (1,..,1) is rank 0 and (n,..,n) is last.
std::size_t colex_rank(std::span<const int> entries);

/// Advance a sorted tuple to its colex successor; false after the last one.
bool next_index_colex(std::vector<int>& entries, int dim);

/// Advance a sorted tuple to its lexicographic successor; false at the end.
bool next_index_lex(std::vector<int>& entries, int dim);

/// Multinomial m! / prod(count_v!) for a sorted tuple.
Integer permutation_count(std::span<const int> entries);

std::vector<int> base_set_of(std::span<const int> entries);

/// Calls fn(entries, rank) for every canonical index in colex (storage) order.
template <typename Fn>
void for_each_canonical(int order, int dim, Fn&& fn) {
  if (dim <= 0 || order <= 0) return;
  std::vector<int> entries(static_cast<std::size_t>(order), 1);
  std::size_t rank = 0;
  do {
    fn(static_cast<const std::vector<int>&>(entries), rank);
    ++rank;
  } while (next_index_colex(entries, dim));
}

/// Calls fn(entries) for every canonical index in lexicographic order.
template <typename Fn>
void for_each_canonical_lex(int order, int dim, Fn&& fn) {
  if (dim <= 0 || order <= 0) return;
  std::vector<int> entries(static_cast<std::size_t>(order), 1);
  do {
    fn(static_cast<const std::vector<int>&>(entries));
  } while (next_index_lex(entries, dim));
}

}  // namespace cpt
