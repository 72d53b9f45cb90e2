#include "coeff.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "errors.hpp"

namespace jensen {

CoeffGroup::CoeffGroup(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
  for (std::uint64_t d : factors_) {
    if (d == 1) {
      throw std::invalid_argument("cyclic factor 1 is not allowed; omit trivial factors");
    }
  }
}

CoeffGroup CoeffGroup::parse(std::string_view text) {
  std::vector<std::uint64_t> factors;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
      token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
      token.remove_suffix(1);
    }
    if (token.empty()) {
      throw ParseError("empty entry in coefficient factor list '" + std::string(text) + "'");
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad coefficient factor '" + std::string(token) + "'");
    }
    if (value == 1) throw ParseError("coefficient factor must be 0 (for Z) or >= 2");
    factors.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return CoeffGroup(std::move(factors));
}

bool CoeffGroup::is_finite() const {
  return std::find(factors_.begin(), factors_.end(), 0u) == factors_.end();
}

std::uint64_t CoeffGroup::order() const {
  if (!is_finite()) throw UnsupportedError("coefficient group is infinite");
  std::uint64_t n = 1;
  for (std::uint64_t d : factors_) {
    if (n > UINT64_MAX / d) throw UnsupportedError("coefficient group order overflows");
    n *= d;
  }
  return n;
}

CoeffElement CoeffGroup::zero() const {
  return CoeffElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

CoeffElement CoeffGroup::make(std::vector<std::int64_t> coords) const {
  if (coords.size() != factors_.size()) {
    throw std::invalid_argument("coordinate count does not match the coefficient group");
  }
  CoeffElement e{std::move(coords)};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] != 0) {
      const std::int64_t d = static_cast<std::int64_t>(factors_[i]);
      e.coords[i] = ((e.coords[i] % d) + d) % d;
    }
  }
  return e;
}

CoeffElement CoeffGroup::basis_element(std::size_t i) const {
  CoeffElement e = zero();
  e.coords.at(i) = 1;
  return e;
}

void CoeffGroup::check(const CoeffElement& a) const {
  if (a.coords.size() != factors_.size()) {
    throw std::invalid_argument("element does not belong to this coefficient group");
  }
}

CoeffElement CoeffGroup::add(const CoeffElement& a, const CoeffElement& b) const {
  check(a);
  check(b);
  std::vector<std::int64_t> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) coords[i] = a.coords[i] + b.coords[i];
  return make(std::move(coords));
}

CoeffElement CoeffGroup::sub(const CoeffElement& a, const CoeffElement& b) const {
  return add(a, neg(b));
}

CoeffElement CoeffGroup::neg(const CoeffElement& a) const {
  check(a);
  std::vector<std::int64_t> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) coords[i] = -a.coords[i];
  return make(std::move(coords));
}

CoeffElement CoeffGroup::scalar_mul(std::int64_t n, const CoeffElement& a) const {
  check(a);
  std::vector<std::int64_t> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] != 0) {
      const std::int64_t d = static_cast<std::int64_t>(factors_[i]);
      coords[i] = (((n % d) * (a.coords[i] % d)) % d + d) % d;
    } else {
      coords[i] = n * a.coords[i];
    }
  }
  return make(std::move(coords));
}

bool CoeffGroup::is_zero(const CoeffElement& a) const {
  check(a);
  return std::all_of(a.coords.begin(), a.coords.end(), [](std::int64_t c) { return c == 0; });
}

std::vector<CoeffElement> CoeffGroup::enumerate(std::uint64_t cap) const {
  const std::uint64_t n = order();
  if (n > cap) {
    throw LimitError("coefficient group order " + std::to_string(n) + " exceeds cap " +
                     std::to_string(cap));
  }
  std::vector<CoeffElement> out;
  out.reserve(n);
  CoeffElement cur = zero();
  for (std::uint64_t k = 0; k < n; ++k) {
    out.push_back(cur);
    // Odometer increment, last coordinate fastest: lexicographic order.
    for (std::size_t i = factors_.size(); i-- > 0;) {
      if (++cur.coords[i] < static_cast<std::int64_t>(factors_[i])) break;
      cur.coords[i] = 0;
    }
  }
  return out;
}

std::string CoeffGroup::to_string() const {
  if (factors_.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += " x ";
    out += factors_[i] == 0 ? "Z" : "Z/" + std::to_string(factors_[i]);
  }
  return out;
}

std::string CoeffGroup::element_to_string(const CoeffElement& a) const {
  check(a);
  if (a.coords.empty()) return "0";
  if (a.coords.size() == 1) return std::to_string(a.coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(a.coords[i]);
  }
  return out + ")";
}

std::uint64_t TorsionSubgroup::order() const {
  std::uint64_t n = 1;
  for (std::uint64_t f : factors) n *= f;
  return n;
}

TorsionSubgroup torsion_subgroup(const CoeffGroup& h, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("torsion order must be positive");
  TorsionSubgroup t;
  const auto& factors = h.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == 0) continue;  // Z is torsion-free
    const std::uint64_t g = std::gcd(m, factors[i]);
    if (g <= 1) continue;
    t.factors.push_back(g);
    CoeffElement gen = h.zero();
    gen.coords[i] = static_cast<std::int64_t>(factors[i] / g);
    t.generators.push_back(std::move(gen));
  }
  return t;
}

std::vector<CoeffElement> torsion_elements(const CoeffGroup& h, const TorsionSubgroup& t) {
  std::set<CoeffElement> seen;
  std::vector<std::uint64_t> counter(t.factors.size(), 0);
  while (true) {
    CoeffElement e = h.zero();
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      e = h.add(e, h.scalar_mul(static_cast<std::int64_t>(counter[i]), t.generators[i]));
    }
    seen.insert(std::move(e));
    std::size_t i = t.factors.size();
    while (i-- > 0) {
      if (++counter[i] < t.factors[i]) break;
      counter[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::uint64_t> canonical_invariant_factors(std::vector<std::uint64_t> factors) {
  std::size_t free_rank = 0;
  // prime -> exponents, descending
  std::map<std::uint64_t, std::vector<std::uint32_t>> primes;
  for (std::uint64_t f : factors) {
    if (f == 0) {
      ++free_rank;
      continue;
    }
    if (f == 1) continue;
    for (std::uint64_t p = 2; p * p <= f; ++p) {
      if (f % p != 0) continue;
      std::uint32_t e = 0;
      while (f % p == 0) {
        f /= p;
        ++e;
      }
      primes[p].push_back(e);
    }
    if (f > 1) primes[f].push_back(1);
  }
  std::size_t chain_length = 0;
  for (auto& [p, exps] : primes) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    chain_length = std::max(chain_length, exps.size());
  }
  // d_k collects the largest prime powers, d_1 the smallest.
  std::vector<std::uint64_t> chain(chain_length, 1);
  for (const auto& [p, exps] : primes) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      std::uint64_t pe = 1;
      for (std::uint32_t k = 0; k < exps[i]; ++k) pe *= p;
      chain[chain_length - 1 - i] *= pe;
    }
  }
  chain.insert(chain.end(), free_rank, 0);
  return chain;
}

}  // namespace jensen
