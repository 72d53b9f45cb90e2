#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jensen {

enum class Parity { Even, Odd };

class Permutation;

// A transposition (a b) on 1-based points, a != b.
struct Transposition {
  std::uint32_t a;
  std::uint32_t b;

  Transposition(std::uint32_t a_, std::uint32_t b_);
  Permutation as_permutation() const;
  std::string to_string() const;
};

// A bijection on {1..n} in one-line form. Internal indexing is 0-based;
// all textual I/O (cycle notation, transposition points) is 1-based.
//
// Permutations of different degree are compared and composed by embedding
// into the larger degree, with points beyond the smaller degree fixed.
class Permutation {
 public:
  Permutation() = default;  // degree-0 identity

  static Permutation identity(std::size_t degree);
  // One-line images, 0-based: images[i] is the image of point i.
  static Permutation from_images(std::vector<std::uint32_t> images);
  // Cycle notation, e.g. "(1 2)(3 4)"; identity is "()" or "id".
  // Whitespace-insensitive. Cycles compose right to left. A point may not
  // repeat within one cycle; repeats across cycles are allowed.
  static Permutation from_cycles(std::string_view text);

  std::size_t degree() const { return images_.size(); }
  // 0-based application; points beyond the degree are fixed.
  std::uint32_t apply(std::uint32_t point) const;

  // Right-to-left composition: (p.compose(q))(i) = p(q(i)).
  Permutation compose(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation power(std::int64_t n) const;
  Permutation embedded(std::size_t degree) const;

  bool is_identity() const;
  Parity parity() const;

  // Canonical decomposition into transpositions: each cycle (c1 c2 ... cm)
  // contributes (c1 c2)(c2 c3)...(c{m-1} cm), cycles ordered by smallest
  // moved point. Composing the result right to left restores the permutation.
  std::vector<Transposition> transposition_decomposition() const;

  std::string cycle_string() const;
  const std::vector<std::uint32_t>& images() const { return images_; }

  friend bool operator==(const Permutation& lhs, const Permutation& rhs);
  friend bool operator!=(const Permutation& lhs, const Permutation& rhs) {
    return !(lhs == rhs);
  }

 private:
  std::vector<std::uint32_t> images_;
};

// Hashes the action (trailing fixed points ignored), consistent with operator==.
struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// A permutation r with r.compose(r) == s.compose(t). Three cases: equal
// transpositions give the identity; a shared point gives (st)^2, which works
// because st is then a 3-cycle; disjoint transpositions (a b), (c d) give
// the 4-cycle (a c)(c b)(b d).
Permutation square_root_of_transposition_pair(const Transposition& s,
                                              const Transposition& t);

// Writes an even permutation p as t1^2 * t2^2 * ... * tk^2 (right-to-left),
// pairing consecutive transpositions of the canonical decomposition and
// taking square roots. Rejects odd permutations.
std::vector<Permutation> even_square_decomposition(const Permutation& p);

}  // namespace jensen
