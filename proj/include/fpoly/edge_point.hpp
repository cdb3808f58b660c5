#pragma once

#include <span>
#include <string>
#include <vector>

#include "fpoly/graph.hpp"
#include "fpoly/rational.hpp"

namespace fpoly {

/// A vector x indexed by edge id, x(e) exact.
class EdgePoint {
 public:
  EdgePoint() = default;
  explicit EdgePoint(std::size_t edge_count) : values_(edge_count) {}
  explicit EdgePoint(std::vector<Rational> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  Rational& operator[](EdgeId e) { return values_.at(e); }
  const Rational& operator[](EdgeId e) const { return values_.at(e); }
  std::span<const Rational> values() const noexcept { return values_; }

  /// x(F), the sum over an edge set.
  Rational sum(std::span<const EdgeId> edges) const {
    Rational total = 0;
    for (EdgeId e : edges) total += values_.at(e);
    return total;
  }

  Rational dot(const EdgePoint& other) const {
    Rational total = 0;
    for (std::size_t i = 0; i < values_.size() && i < other.size(); ++i) {
      total += values_[i] * other.values_[i];
    }
    return total;
  }

  bool operator==(const EdgePoint&) const = default;

  /// "(x0, x1, ...)" with exact rationals.
  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i > 0) out += ", ";
      out += to_string(values_[i]);
    }
    return out + ")";
  }

 private:
  std::vector<Rational> values_;
};

}  // namespace fpoly
