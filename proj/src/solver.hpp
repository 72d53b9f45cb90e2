#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "defaults.hpp"
#include "group.hpp"
#include "snf.hpp"

namespace jensen {

// The two equation variants: f(xy) + f(x y^-1) = 2 f(x) and
// f(xy) + f(y^-1 x) = 2 f(x), both with f(identity) = 0.
enum class Variant : int { XyInv = 1, YinvX = 2 };

// A map f: G -> H with f(identity) = 0, stored per element index.
struct GroupMap {
  GroupPtr group;
  CoeffGroup coeff;
  std::vector<CoeffElement> values;

  bool operator==(const GroupMap& rhs) const { return values == rhs.values; }
  bool operator<(const GroupMap& rhs) const { return values < rhs.values; }
};

GroupMap zero_map(GroupPtr group, const CoeffGroup& coeff);
bool satisfies_variant(const GroupMap& f, Variant variant);
bool is_homomorphism(const GroupMap& f);

// One row per pair (x, y) expressing f(xy) + f(x y^-1) - 2 f(x) = 0 (or the
// second variant's pattern), coefficients merged on index collisions, plus
// the normalization row for f(identity) = 0. Rows are sign-normalized
// (first nonzero entry positive), zero rows dropped, duplicates removed.
struct ConstraintSystem {
  GroupPtr group;
  Variant variant = Variant::XyInv;
  std::size_t num_vars = 0;
  std::vector<std::vector<std::int32_t>> rows;
  std::size_t raw_pair_rows = 0;  // |G|^2, before merging and dedup
};

ConstraintSystem build_constraints(GroupPtr group, Variant variant);

// The solutions (or homomorphisms) as an abstract abelian group together
// with generating maps. generator_orders[i] is the exact order of
// generators[i] (0 for an infinite generator); invariant_factors is the
// canonical chain for the whole group, with one trailing 0 per free rank.
struct SolutionGroup {
  enum class Kind { Solutions1 = 1, Solutions2 = 2, Homomorphisms = 3 };

  Kind kind = Kind::Solutions1;
  GroupPtr group;
  CoeffGroup coeff;
  std::vector<std::uint64_t> invariant_factors;
  std::vector<GroupMap> generators;
  std::vector<std::uint64_t> generator_orders;

  bool is_finite() const;
  std::size_t free_rank() const;
  std::uint64_t order() const;  // throws UnsupportedError when infinite
  std::string structure_string() const;
};

// Constraint system together with the Smith normal form of a row basis of
// its row module; reused across coefficient factors and commands.
struct PreparedSystem {
  ConstraintSystem system;
  std::size_t basis_rows = 0;
  SnfResult snf;
};

PreparedSystem prepare_system(GroupPtr group, Variant variant);

// Solutions with values in Z/modulus (modulus 0 means Z): with A = U*S*V,
// the solutions of A x = 0 are x = V^-1 y where s_i * y_i = 0 constrains
// each coordinate independently. Every returned generator is re-verified
// pointwise against the defining equation.
SolutionGroup solve_mod(const ConstraintSystem& system, std::uint64_t modulus);
SolutionGroup solve_mod_prepared(const PreparedSystem& prepared, std::uint64_t modulus);

// Direct sum of the per-factor solutions over the cyclic factors of H.
SolutionGroup solve(GroupPtr group, const CoeffGroup& coeff, Variant variant);
SolutionGroup solve_prepared(const PreparedSystem& prepared, const CoeffGroup& coeff);

// Hom(G, H) computed through the abelianization: each invariant factor m of
// G/[G,G] contributes the torsion subgroup H[m], lifted along the
// projection. Every generator is verified to be a homomorphism.
SolutionGroup hom_group(GroupPtr group, const CoeffGroup& coeff);

// All members of the group, sorted; throws UnsupportedError for infinite
// groups and LimitError above the cap.
std::vector<GroupMap> enumerate_maps(const SolutionGroup& sg,
                                     std::uint64_t cap = kDefaultEnumerationCap);

// Exhaustive search over all maps with f(identity) = 0, as an independent
// oracle. Requires |H|^(|G|-1) <= cap.
std::vector<GroupMap> brute_force_solutions(GroupPtr group, const CoeffGroup& coeff,
                                            Variant variant,
                                            std::uint64_t cap = kDefaultOracleCap);

enum class Verdict { Equal, HomStrictlySmaller, OrdersOnlyEqual, OrdersOnlyDiffer };
const char* verdict_name(Verdict v);

struct ComparisonReport {
  Verdict verdict = Verdict::OrdersOnlyDiffer;
  bool containment = false;   // every generator of B satisfies A's equation
  bool enumerated = false;    // set comparison was performed
  bool set_equal = false;     // valid when enumerated
  bool orders_equal = false;  // includes free rank
  std::uint64_t order_solutions = 0;  // 0 when infinite
  std::uint64_t order_subgroup = 0;
};

// Compares a full solution group A against a subgroup candidate B (normally
// Hom(G, H)): containment of B's generators, order equality, and set
// equality by enumeration when both orders are within the cap.
ComparisonReport compare(const SolutionGroup& solutions, const SolutionGroup& subgroup,
                         std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace jensen
