#include "group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <unordered_map>

#include "errors.hpp"

namespace jensen {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

FiniteGroup FiniteGroup::from_generators(const std::vector<Permutation>& generators,
                                         std::uint64_t max_order) {
  if (generators.empty()) {
    throw std::invalid_argument("at least one generator is required");
  }
  std::size_t degree = 1;
  for (const Permutation& g : generators) degree = std::max(degree, g.degree());
  std::vector<Permutation> gens;
  gens.reserve(generators.size());
  for (const Permutation& g : generators) gens.push_back(g.embedded(degree));

  FiniteGroup result;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  result.elements_.push_back(Permutation::identity(degree));
  index.emplace(result.elements_[0], 0u);

  for (std::size_t qi = 0; qi < result.elements_.size(); ++qi) {
    for (const Permutation& s : gens) {
      Permutation next = result.elements_[qi].compose(s);
      if (index.find(next) != index.end()) continue;
      if (result.elements_.size() >= max_order) {
        throw LimitError("group closure exceeds the cap of " + std::to_string(max_order) +
                         " elements");
      }
      index.emplace(next, static_cast<std::uint32_t>(result.elements_.size()));
      result.elements_.push_back(std::move(next));
    }
  }

  const std::size_t n = result.elements_.size();
  result.order_ = n;
  result.identity_ = 0;
  result.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      result.table_[i * n + j] = index.at(result.elements_[i].compose(result.elements_[j]));
    }
  }
  result.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.inverse_[i] = index.at(result.elements_[i].inverse());
  }
  for (const Permutation& g : gens) {
    result.generators_.push_back(index.at(g));
  }
  return result;
}

FiniteGroup FiniteGroup::from_cayley_table(std::size_t order, std::vector<std::uint32_t> table) {
  if (order == 0) throw std::invalid_argument("group order must be positive");
  if (table.size() != order * order) {
    throw std::invalid_argument("Cayley table must have order^2 entries");
  }
  for (std::uint32_t v : table) {
    if (v >= order) throw std::invalid_argument("Cayley table entry out of range");
  }
  FiniteGroup result;
  result.order_ = order;
  result.table_ = std::move(table);
  result.fill_inverses_and_validate();
  return result;
}

void FiniteGroup::fill_inverses_and_validate() {
  const std::size_t n = order_;
  // Latin square: every row and column hits each index once.
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t v = table_[i * n + j];
      if (seen[v]) throw std::invalid_argument("Cayley table row " + std::to_string(i) +
                                               " is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t v = table_[i * n + j];
      if (seen[v]) throw std::invalid_argument("Cayley table column " + std::to_string(j) +
                                               " is not a permutation");
      seen[v] = true;
    }
  }

  bool found = false;
  for (std::uint32_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::uint32_t j = 0; j < n && ok; ++j) {
      ok = table_[e * n + j] == j && table_[j * n + e] == j;
    }
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("Cayley table has no two-sided identity");

  inverse_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    bool ok = false;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (table_[i * n + j] == identity_ && table_[j * n + i] == identity_) {
        inverse_[i] = j;
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw std::invalid_argument("element " + std::to_string(i) + " has no two-sided inverse");
    }
  }

  auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw std::invalid_argument("Cayley table is not associative at (" + std::to_string(a) +
                                  ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  };
  if (n <= 24) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::uint64_t state = 0x6a656e73656e0001ull;
    for (int k = 0; k < 4096; ++k) {
      std::uint32_t a = static_cast<std::uint32_t>(splitmix64(state) % n);
      std::uint32_t b = static_cast<std::uint32_t>(splitmix64(state) % n);
      std::uint32_t c = static_cast<std::uint32_t>(splitmix64(state) % n);
      check_triple(a, b, c);
    }
  }
}

FiniteGroup FiniteGroup::parse(std::string_view text, std::uint64_t max_order) {
  std::vector<std::string> lines;
  std::string current;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      std::size_t hash = current.find('#');
      if (hash != std::string::npos) current.erase(hash);
      while (!current.empty() && std::isspace(static_cast<unsigned char>(current.back()))) {
        current.pop_back();
      }
      std::size_t start = 0;
      while (start < current.size() && std::isspace(static_cast<unsigned char>(current[start]))) {
        ++start;
      }
      current.erase(0, start);
      if (!current.empty()) lines.push_back(current);
      current.clear();
    } else {
      current += text[i];
    }
  }
  if (lines.empty()) throw ParseError("empty group spec");

  if (lines[0] == "gens:") {
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      gens.push_back(Permutation::from_cycles(lines[i]));
    }
    if (gens.empty()) throw ParseError("'gens:' section lists no generators");
    return from_generators(gens, max_order);
  }
  if (lines[0] == "table:") {
    std::vector<std::uint64_t> numbers;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const std::string& line = lines[i];
      std::size_t pos = 0;
      while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos == line.size()) break;
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc()) {
          throw ParseError("expected a number in table data, got '" + line.substr(pos) + "'");
        }
        numbers.push_back(value);
        pos = static_cast<std::size_t>(ptr - line.data());
      }
    }
    if (numbers.empty()) throw ParseError("'table:' section lists no entries");
    const std::uint64_t order = numbers[0];
    if (order == 0) throw ParseError("group order must be positive");
    if (order > max_order) {
      throw LimitError("table order " + std::to_string(order) + " exceeds the cap of " +
                       std::to_string(max_order));
    }
    if (numbers.size() != 1 + order * order) {
      throw ParseError("expected " + std::to_string(order * order) + " table entries, got " +
                       std::to_string(numbers.size() - 1));
    }
    std::vector<std::uint32_t> table;
    table.reserve(order * order);
    for (std::size_t i = 1; i < numbers.size(); ++i) {
      if (numbers[i] >= order) throw ParseError("table entry out of range");
      table.push_back(static_cast<std::uint32_t>(numbers[i]));
    }
    try {
      return from_cayley_table(order, std::move(table));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("group spec must start with 'gens:' or 'table:'");
}

FiniteGroup FiniteGroup::symmetric(std::uint32_t n, std::uint64_t max_order) {
  if (n == 0) throw std::invalid_argument("symmetric group degree must be >= 1");
  if (n == 1) return from_generators({Permutation::identity(1)}, max_order);
  std::vector<Permutation> gens;
  gens.reserve(n - 1);
  for (std::uint32_t i = 1; i < n; ++i) {
    gens.push_back(Transposition(i, i + 1).as_permutation());
  }
  return from_generators(gens, max_order);
}

std::uint32_t FiniteGroup::power(std::uint32_t g, std::int64_t n) const {
  std::uint32_t base = g;
  std::uint64_t e;
  if (n < 0) {
    base = inv(g);
    e = static_cast<std::uint64_t>(-(n + 1)) + 1;
  } else {
    e = static_cast<std::uint64_t>(n);
  }
  std::uint32_t acc = identity_;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t FiniteGroup::element_order(std::uint32_t g) const {
  std::uint64_t k = 1;
  std::uint32_t cur = g;
  while (cur != identity_) {
    cur = mul(cur, g);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::uint32_t i = 0; i < order_; ++i) {
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < order_; ++j) {
      if (mul(i, j) != mul(j, i)) return false;
    }
  }
  return true;
}

std::string FiniteGroup::element_name(std::uint32_t i) const {
  if (has_permutations()) return elements_[i].cycle_string();
  return "g" + std::to_string(i);
}

std::vector<std::uint32_t> commutator_subgroup(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> is_comm(n, false);
  std::vector<std::uint32_t> comms;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint32_t c = g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)));
      if (!is_comm[c]) {
        is_comm[c] = true;
        comms.push_back(c);
      }
    }
  }
  // The commutator set is closed under inversion, so one-sided closure works.
  std::vector<bool> member(n, false);
  std::vector<std::uint32_t> subgroup{g.identity()};
  member[g.identity()] = true;
  for (std::size_t qi = 0; qi < subgroup.size(); ++qi) {
    for (std::uint32_t c : comms) {
      std::uint32_t t = g.mul(subgroup[qi], c);
      if (!member[t]) {
        member[t] = true;
        subgroup.push_back(t);
      }
    }
  }
  std::sort(subgroup.begin(), subgroup.end());
  return subgroup;
}

Quotient quotient_by_normal(const FiniteGroup& g, const std::vector<std::uint32_t>& normal) {
  const std::size_t n = g.order();
  if (normal.empty() || !std::binary_search(normal.begin(), normal.end(), g.identity())) {
    throw std::invalid_argument("normal subgroup must contain the identity");
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t h : normal) {
      if (!std::binary_search(normal.begin(), normal.end(), g.mul(g.mul(x, h), g.inv(x)))) {
        throw std::invalid_argument("subgroup is not normal");
      }
    }
  }

  constexpr std::uint32_t kUnassigned = 0xffffffffu;
  Quotient q;
  q.coset_of.assign(n, kUnassigned);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (q.coset_of[x] != kUnassigned) continue;
    const std::uint32_t id = static_cast<std::uint32_t>(q.representative.size());
    q.representative.push_back(x);
    for (std::uint32_t h : normal) {
      q.coset_of[g.mul(x, h)] = id;
    }
  }
  const std::size_t m = q.representative.size();
  std::vector<std::uint32_t> table(m * m);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) {
      table[i * m + j] = q.coset_of[g.mul(q.representative[i], q.representative[j])];
    }
  }
  q.group = FiniteGroup::from_cayley_table(m, std::move(table));
  return q;
}

namespace {

AbelianStructure decompose_impl(const FiniteGroup& g) {
  AbelianStructure s;
  if (g.order() == 1) {
    s.projection.assign(1, {});
    return s;
  }

  std::uint32_t generator = 0;
  std::uint64_t max_order = 0;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    std::uint64_t o = g.element_order(i);
    if (o > max_order) {
      max_order = o;
      generator = i;
    }
  }

  std::vector<std::uint32_t> cyclic;
  std::vector<std::int64_t> dlog(g.order(), -1);
  std::uint32_t cur = g.identity();
  for (std::uint64_t k = 0; k < max_order; ++k) {
    cyclic.push_back(cur);
    dlog[cur] = static_cast<std::int64_t>(k);
    cur = g.mul(cur, generator);
  }
  std::sort(cyclic.begin(), cyclic.end());

  Quotient q = quotient_by_normal(g, cyclic);
  AbelianStructure sub = decompose_impl(q.group);

  // Lift each quotient basis element to one of equal order: if x has order
  // q_j in the quotient then x^{q_j} = generator^{c} with q_j | c, and
  // x * generator^{-c/q_j} has order exactly q_j.
  std::vector<std::uint32_t> lifted;
  for (std::size_t j = 0; j < sub.basis.size(); ++j) {
    const std::uint64_t qj = sub.invariant_factors[j];
    const std::uint32_t x = q.representative[sub.basis[j]];
    const std::uint32_t w = g.power(x, static_cast<std::int64_t>(qj));
    const std::int64_t c = dlog[w];
    if (c < 0 || static_cast<std::uint64_t>(c) % qj != 0) {
      throw std::logic_error("abelian decomposition: lift adjustment failed");
    }
    const std::int64_t t = c / static_cast<std::int64_t>(qj);
    lifted.push_back(g.mul(x, g.inv(g.power(generator, t))));
  }

  s.invariant_factors = sub.invariant_factors;
  s.invariant_factors.push_back(max_order);
  s.basis = lifted;
  s.basis.push_back(generator);

  s.projection.resize(g.order());
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    std::vector<std::uint64_t> coords = sub.projection[q.coset_of[a]];
    std::uint32_t acc = g.identity();
    for (std::size_t j = 0; j < lifted.size(); ++j) {
      acc = g.mul(acc, g.power(lifted[j], static_cast<std::int64_t>(coords[j])));
    }
    const std::int64_t e = dlog[g.mul(a, g.inv(acc))];
    if (e < 0) throw std::logic_error("abelian decomposition: residual outside cyclic part");
    coords.push_back(static_cast<std::uint64_t>(e));
    s.projection[a] = std::move(coords);
  }
  return s;
}

}  // namespace

AbelianStructure abelian_decompose(const FiniteGroup& g) {
  if (!g.is_abelian()) {
    throw std::invalid_argument("abelian_decompose requires an abelian group");
  }
  return decompose_impl(g);
}

AbelianStructure abelianization(const FiniteGroup& g) {
  Quotient q = quotient_by_normal(g, commutator_subgroup(g));
  AbelianStructure d = abelian_decompose(q.group);
  AbelianStructure out;
  out.invariant_factors = std::move(d.invariant_factors);
  out.basis.reserve(d.basis.size());
  for (std::uint32_t b : d.basis) out.basis.push_back(q.representative[b]);
  out.projection.resize(g.order());
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    out.projection[a] = d.projection[q.coset_of[a]];
  }
  return out;
}

}  // namespace jensen
