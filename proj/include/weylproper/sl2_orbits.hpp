#pragma once

// Hyperbolic elements A_phi of Lie algebra homomorphisms sl(2,R) -> sl(n,R).
// Up to conjugation such a homomorphism is a direct sum of irreducible
// representations, recorded by the partition of n into their dimensions; a
// block of dimension d contributes the weights d-1, d-3, ..., 1-d of diag(1,-1).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "weylproper/error.hpp"
#include "weylproper/root_data.hpp"

namespace weylproper {

class Partition {
public:
  explicit Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0)
        throw InvalidArgument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw InvalidArgument("partition parts must be weakly decreasing");
      n_ += parts_[i];
    }
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<std::size_t>& parts() const noexcept { return parts_; }

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<std::size_t> parts_;
  std::size_t n_ = 0;
};

/// Exponent notation: [3,1^2], [2^2,1], [1^5].
inline std::string to_string(const Partition& p) {
  std::string out = "[";
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i])
      ++j;
    if (i)
      out += ',';
    out += std::to_string(parts[i]);
    if (j - i > 1)
      out += '^' + std::to_string(j - i);
    i = j;
  }
  return out + "]";
}

/// Accepts "[4,1]", "4,1" and exponents such as "3,1^2".
inline Partition parse_partition(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto number = [&]() -> std::size_t {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos)
      throw ParseError("expected a positive integer", pos);
    return std::stoul(std::string(text.substr(start, pos - start)));
  };
  skip();
  const bool bracketed = pos < text.size() && text[pos] == '[';
  if (bracketed)
    ++pos;
  std::vector<std::size_t> parts;
  while (true) {
    const std::size_t part = number();
    std::size_t times = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      times = number();
      skip();
    }
    parts.insert(parts.end(), times, part);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (bracketed) {
    if (pos >= text.size() || text[pos] != ']')
      throw ParseError("expected ']'", pos);
    ++pos;
    skip();
  }
  if (pos != text.size())
    throw ParseError("unexpected trailing input", pos);
  return Partition(std::move(parts));
}

/// All partitions of n, [n] first and [1^n] last (reverse lexicographic order).
inline std::vector<Partition> partitions(std::size_t n) {
  if (n < 1)
    throw InvalidArgument("partitions need n >= 1");
  std::vector<Partition> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t remaining, std::size_t cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

struct HyperbolicElement {
  Partition source;
  CartanPoint point; // integer entries, dominant, fixed by -w0

  friend bool operator==(const HyperbolicElement&, const HyperbolicElement&) = default;
};

inline HyperbolicElement a_phi(const Partition& p) {
  if (p.n() == 0)
    throw InvalidArgument("a_phi needs a nonempty partition");
  std::vector<long> weights;
  weights.reserve(p.n());
  for (std::size_t d : p.parts())
    for (long w = static_cast<long>(d) - 1; w >= 1 - static_cast<long>(d); w -= 2)
      weights.push_back(w);
  std::sort(weights.begin(), weights.end(), std::greater<>());
  return {p, CartanPoint::from_integers(weights)};
}

inline std::vector<HyperbolicElement> hyperbolic_set(std::size_t n) {
  if (n < 2)
    throw InvalidArgument("hyperbolic_set needs n >= 2");
  std::vector<HyperbolicElement> out;
  for (const auto& p : partitions(n))
    out.push_back(a_phi(p));
  return out;
}

} // namespace weylproper
