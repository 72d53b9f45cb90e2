#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "defaults.hpp"
#include "perm.hpp"

namespace jensen {

// A finite group as a Cayley table. Elements are addressed by index;
// downstream code never compares group elements except by index. When the
// group was built from permutation generators the elements themselves are
// kept, in BFS discovery order with the identity at index 0.
class FiniteGroup {
 public:
  // Breadth-first closure of the generators (embedded into a common degree).
  // Element 0 is the identity; discovery order follows the generator order.
  // Throws LimitError when the closure exceeds max_order elements.
  static FiniteGroup from_generators(const std::vector<Permutation>& generators,
                                     std::uint64_t max_order = kDefaultClosureCap);

  // Abstract group from a row-major Cayley table of 0-based indices.
  // Validates the Latin-square property, a two-sided identity, inverses,
  // and associativity (exhaustive up to order 24, random triples above).
  static FiniteGroup from_cayley_table(std::size_t order, std::vector<std::uint32_t> table);

  // Line-oriented group-spec text: "gens:" followed by one cycle-notation
  // permutation per line, or "table:" followed by the order and the table
  // entries as whitespace-separated 0-based indices, row-major.
  // '#' starts a comment; blank lines are ignored.
  static FiniteGroup parse(std::string_view text, std::uint64_t max_order = kDefaultClosureCap);

  // Symmetric group of degree n from adjacent transpositions (1 2)...(n-1 n).
  static FiniteGroup symmetric(std::uint32_t n, std::uint64_t max_order = kDefaultClosureCap);

  std::size_t order() const { return order_; }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const { return table_[i * order_ + j]; }
  std::uint32_t inv(std::uint32_t i) const { return inverse_[i]; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t power(std::uint32_t g, std::int64_t n) const;
  std::uint64_t element_order(std::uint32_t g) const;
  bool is_abelian() const;

  bool has_permutations() const { return !elements_.empty(); }
  const Permutation& permutation(std::uint32_t i) const { return elements_[i]; }
  const std::vector<std::uint32_t>& generators() const { return generators_; }
  // Cycle string for permutation-backed groups, "g<i>" otherwise.
  std::string element_name(std::uint32_t i) const;

 private:
  FiniteGroup() = default;
  void fill_inverses_and_validate();

  std::size_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// The subgroup generated by all commutators x y x^-1 y^-1, as a sorted
// index set.
std::vector<std::uint32_t> commutator_subgroup(const FiniteGroup& g);

struct Quotient {
  FiniteGroup group;                        // cosets, ordered by least member
  std::vector<std::uint32_t> coset_of;      // source index -> coset index
  std::vector<std::uint32_t> representative;  // coset index -> least source index
};

// Quotient by a normal subgroup given as a sorted index set.
Quotient quotient_by_normal(const FiniteGroup& g, const std::vector<std::uint32_t>& normal);

// A finite abelian group presented as invariant factors d1 | d2 | ... | dk,
// with basis elements realizing each factor and per-element coordinates.
struct AbelianStructure {
  std::vector<std::uint64_t> invariant_factors;
  std::vector<std::uint32_t> basis;  // basis[i] generates a Z/d_i summand
  // projection[g][i] in [0, d_i); additive: projection of a product is the
  // coordinate-wise sum of projections.
  std::vector<std::vector<std::uint64_t>> projection;
};

// Structure-theorem decomposition of a finite abelian group: repeatedly
// extracts a lowest-index element of maximal order and splits it off as a
// direct summand. Throws std::invalid_argument on non-abelian input.
AbelianStructure abelian_decompose(const FiniteGroup& g);

// Decomposition of g / [g, g]; basis and projection refer to g's own
// element indices.
AbelianStructure abelianization(const FiniteGroup& g);

}  // namespace jensen
