#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jensen {

// An element of a finitely generated abelian group, as one integer
// coordinate per cyclic factor. Canonical form: coordinate i lies in
// [0, d_i) when the factor is finite.
struct CoeffElement {
  std::vector<std::int64_t> coords;
  auto operator<=>(const CoeffElement&) const = default;
};

// A finitely generated abelian group given structurally as a list of cyclic
// factors: d >= 2 for Z/d, 0 for Z. The list may be empty (trivial group)
// and is kept exactly as given; it is not normalized to an invariant-factor
// chain.
class CoeffGroup {
 public:
  CoeffGroup() = default;
  explicit CoeffGroup(std::vector<std::uint64_t> factors);
  // Comma-separated factor list, e.g. "2,4" or "0" for Z.
  static CoeffGroup parse(std::string_view text);

  const std::vector<std::uint64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_finite() const;
  std::uint64_t order() const;  // throws UnsupportedError when infinite

  CoeffElement zero() const;
  CoeffElement make(std::vector<std::int64_t> coords) const;  // reduces to canonical form
  CoeffElement basis_element(std::size_t i) const;
  CoeffElement add(const CoeffElement& a, const CoeffElement& b) const;
  CoeffElement sub(const CoeffElement& a, const CoeffElement& b) const;
  CoeffElement neg(const CoeffElement& a) const;
  CoeffElement scalar_mul(std::int64_t n, const CoeffElement& a) const;
  bool is_zero(const CoeffElement& a) const;

  // All elements in lexicographic coordinate order; finite groups only.
  std::vector<CoeffElement> enumerate(std::uint64_t cap) const;

  std::string to_string() const;  // e.g. "Z/2 x Z/4", "Z", "trivial"
  std::string element_to_string(const CoeffElement& a) const;

  friend bool operator==(const CoeffGroup& lhs, const CoeffGroup& rhs) {
    return lhs.factors_ == rhs.factors_;
  }

 private:
  void check(const CoeffElement& a) const;
  std::vector<std::uint64_t> factors_;
};

// The m-torsion subgroup H[m] = {h : m*h = 0}: factor d > 0 contributes a
// cyclic summand of order gcd(m, d) generated by (d/gcd(m, d)) * e_i;
// factors d = 0 contribute nothing.
struct TorsionSubgroup {
  std::vector<std::uint64_t> factors;      // per contributing summand, > 1
  std::vector<CoeffElement> generators;    // aligned with factors
  std::uint64_t order() const;
};

TorsionSubgroup torsion_subgroup(const CoeffGroup& h, std::uint64_t m);

// All elements of the torsion subgroup, deduplicated and sorted.
std::vector<CoeffElement> torsion_elements(const CoeffGroup& h, const TorsionSubgroup& t);

// Canonical invariant-factor chain for an abelian group given as an
// arbitrary multiset of cyclic orders (1s dropped, 0s kept at the end).
std::vector<std::uint64_t> canonical_invariant_factors(std::vector<std::uint64_t> factors);

}  // namespace jensen
