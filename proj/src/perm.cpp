#include "perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "errors.hpp"

namespace jensen {

Transposition::Transposition(std::uint32_t a_, std::uint32_t b_) : a(a_), b(b_) {
  if (a == 0 || b == 0) {
    throw std::invalid_argument("transposition points are 1-based, got 0");
  }
  if (a == b) {
    throw std::invalid_argument("transposition needs two distinct points");
  }
}

Permutation Transposition::as_permutation() const {
  const std::uint32_t n = std::max(a, b);
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::swap(images[a - 1], images[b - 1]);
  return Permutation::from_images(std::move(images));
}

std::string Transposition::to_string() const {
  return "(" + std::to_string(a) + " " + std::to_string(b) + ")";
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t v : images) {
    if (v >= images.size() || seen[v]) {
      throw std::invalid_argument("one-line form is not a bijection");
    }
    seen[v] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

std::uint32_t Permutation::apply(std::uint32_t point) const {
  return point < images_.size() ? images_[point] : point;
}

Permutation Permutation::compose(const Permutation& rhs) const {
  const std::size_t n = std::max(degree(), rhs.degree());
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    images[i] = apply(rhs.apply(i));
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> images(degree());
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    images[images_[i]] = i;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::power(std::int64_t n) const {
  Permutation base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Permutation acc = Permutation::identity(degree());
  while (e > 0) {
    if (e & 1) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return acc;
}

Permutation Permutation::embedded(std::size_t degree) const {
  if (degree <= images_.size()) return *this;
  std::vector<std::uint32_t> images(images_);
  images.reserve(degree);
  for (std::uint32_t i = static_cast<std::uint32_t>(images_.size()); i < degree; ++i) {
    images.push_back(i);
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Parity Permutation::parity() const {
  // Parity of sum over cycles of (length - 1).
  std::vector<bool> visited(images_.size(), false);
  std::size_t swaps = 0;
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (visited[start] || images_[start] == start) continue;
    std::size_t len = 0;
    for (std::uint32_t i = start; !visited[i]; i = images_[i]) {
      visited[i] = true;
      ++len;
    }
    swaps += len - 1;
  }
  return swaps % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::vector<Transposition> Permutation::transposition_decomposition() const {
  std::vector<Transposition> result;
  std::vector<bool> visited(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (visited[start] || images_[start] == start) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t i = start; !visited[i]; i = images_[i]) {
      visited[i] = true;
      cycle.push_back(i);
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
      result.emplace_back(cycle[k] + 1, cycle[k + 1] + 1);
    }
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> visited(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (visited[start] || images_[start] == start) continue;
    out += '(';
    bool first = true;
    for (std::uint32_t i = start; !visited[i]; i = images_[i]) {
      visited[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

bool operator==(const Permutation& lhs, const Permutation& rhs) {
  const std::size_t n = std::max(lhs.degree(), rhs.degree());
  for (std::uint32_t i = 0; i < n; ++i) {
    if (lhs.apply(i) != rhs.apply(i)) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t last = p.degree();
  while (last > 0 && p.images()[last - 1] == last - 1) --last;
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < last; ++i) {
    h ^= p.images()[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

std::uint32_t parse_point(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) {
    throw ParseError("expected a point at position " + std::to_string(start) +
                     " in '" + std::string(text) + "'");
  }
  std::uint64_t value = 0;
  for (std::size_t i = start; i < pos; ++i) {
    value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
    if (value > 1000000) throw ParseError("point out of range in '" + std::string(text) + "'");
  }
  if (value == 0) throw ParseError("points are 1-based; 0 is not a point");
  return static_cast<std::uint32_t>(value);
}

}  // namespace

Permutation Permutation::from_cycles(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos, 2) == "id") {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing input after 'id'");
    return Permutation::identity(1);
  }
  std::vector<std::vector<std::uint32_t>> cycles;
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw ParseError("expected '(' at position " + std::to_string(pos) + " in '" +
                       std::string(text) + "'");
    }
    ++pos;
    any = true;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::uint32_t point = parse_point(text, pos);
      if (std::find(cycle.begin(), cycle.end(), point) != cycle.end()) {
        throw ParseError("point " + std::to_string(point) + " repeats within one cycle");
      }
      cycle.push_back(point);
      skip_ws();
    }
    if (pos == text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
    ++pos;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  if (!any) throw ParseError("empty permutation expression");

  std::uint32_t degree = 1;
  for (const auto& cycle : cycles) {
    for (std::uint32_t point : cycle) degree = std::max(degree, point);
  }
  // Cycles compose right to left: the rightmost cycle acts first.
  Permutation result = Permutation::identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cycle = *it;
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
    result = Permutation::from_images(std::move(images)).compose(result);
  }
  return result;
}

Permutation square_root_of_transposition_pair(const Transposition& s, const Transposition& t) {
  const Permutation sp = s.as_permutation();
  const Permutation tp = t.as_permutation();
  if (sp == tp) {
    return Permutation::identity(std::max(sp.degree(), tp.degree()));
  }
  const bool share_a = s.a == t.a || s.a == t.b;
  const bool share_b = s.b == t.a || s.b == t.b;
  if (share_a || share_b) {
    // s*t is a 3-cycle, so (s*t)^4 = s*t and (s*t)^2 is a square root.
    const Permutation st = sp.compose(tp);
    return st.compose(st);
  }
  // Disjoint: (a b)(c d) = [(a c)(c b)(b d)]^2.
  const Permutation r = Transposition(s.a, t.a)
                            .as_permutation()
                            .compose(Transposition(t.a, s.b).as_permutation())
                            .compose(Transposition(s.b, t.b).as_permutation());
  return r;
}

std::vector<Permutation> even_square_decomposition(const Permutation& p) {
  if (p.parity() != Parity::Even) {
    throw std::invalid_argument("even_square_decomposition requires an even permutation");
  }
  const std::vector<Transposition> decomposition = p.transposition_decomposition();
  std::vector<Permutation> roots;
  roots.reserve(decomposition.size() / 2);
  for (std::size_t k = 0; k + 1 < decomposition.size(); k += 2) {
    roots.push_back(square_root_of_transposition_pair(decomposition[k], decomposition[k + 1]));
  }
  return roots;
}

}  // namespace jensen
