#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cpt/multi_index.hpp"
#include "cpt/scalar.hpp"

namespace cpt {

/// Value domain of a tensor. binary implies every entry is 0 or 1; integer
/// implies every entry is a nonnegative integer.
enum class Domain { binary, integer, rational };

const char* to_string(Domain domain);
std::optional<Domain> parse_domain(std::string_view text);

/// The least restrictive domain containing both.
Domain join(Domain a, Domain b);

/// The tightest domain admitting all of `values`.
Domain detect_domain(std::span<const Rational> values);

/// An order-m, dimension-n symmetric tensor over exact rationals, stored as
/// one value per canonical multi-index in a dense colex-ranked array.
/// Values are immutable after construction; lookups accept raw subscripts in
/// any order.
class SymmetricTensor {
 public:
  /// Assembles a tensor entry by entry through raw subscripts.
  class Builder {
   public:
    Builder(int order, int dim);

    Builder& set(std::span<const int> raw_index, Rational value);
    Builder& set(std::initializer_list<int> raw_index, Rational value);

    /// Tags the result with the tightest domain fitting the values.
    SymmetricTensor build() &&;
    /// Tags with `domain`, validating every value against it.
    SymmetricTensor build(Domain domain) &&;

   private:
    int order_;
    int dim_;
    std::vector<Rational> values_;
  };

  static SymmetricTensor zeros(int order, int dim);
  static SymmetricTensor constant(int order, int dim, const Rational& value);
  /// The all-ones tensor (every canonical entry 1).
  static SymmetricTensor all_ones(int order, int dim);
  static SymmetricTensor diagonal(int order, std::span<const Rational> diagonal_values);

  /// From a dense value array in colex rank order.
  SymmetricTensor(int order, int dim, std::vector<Rational> values, Domain domain);

  int order() const { return order_; }
  int dim() const { return dim_; }
  Domain domain() const { return domain_; }
  std::size_t size() const { return values_.size(); }

  const Rational& at(std::span<const int> raw_index) const;
  const Rational& at(std::initializer_list<int> raw_index) const;
  const Rational& at(const MultiIndex& index) const;
  const Rational& at_rank(std::size_t rank) const { return values_[rank]; }
  const std::vector<Rational>& values() const { return values_; }

  const Rational& diagonal_entry(int i) const;

  /// Same tensor retagged; validates the values against `domain`.
  SymmetricTensor with_domain(Domain domain) const;

  bool all_values_binary() const;
  bool all_values_nonneg_integer() const;

  /// Entrywise comparison; the domain tag is metadata and not compared.
  bool operator==(const SymmetricTensor& other) const;

 private:
  int order_;
  int dim_;
  Domain domain_;
  std::vector<Rational> values_;
};

/// First canonical index, in colex (storage) order, where the tensors differ.
std::optional<MultiIndex> first_difference(const SymmetricTensor& a,
                                           const SymmetricTensor& b);

}  // namespace cpt
