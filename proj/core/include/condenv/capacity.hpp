#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "condenv/rational.hpp"

namespace condenv {

// Subsets of the ground set as bit masks; element k is bit k.
using Mask = std::uint32_t;

class Capacity {
 public:
  static constexpr std::size_t kMaxGround = 20;

  Capacity() = default;
  // values[m] is the capacity of subset m; checks normalization and monotonicity.
  Capacity(std::vector<std::string> ground, std::vector<Rational> values);
  static Capacity with_default_names(std::size_t size, std::vector<Rational> values);

  std::size_t size() const { return ground_.size(); }
  Mask full() const { return size() == 0 ? 0 : static_cast<Mask>((1ULL << size()) - 1); }
  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator()(Mask m) const { return values_.at(m); }

  friend bool operator==(const Capacity& a, const Capacity& b) { return a.values_ == b.values_; }

 private:
  std::vector<std::string> ground_;
  std::vector<Rational> values_;
};

std::vector<std::string> default_names(std::size_t size);

struct Mobius {
  std::vector<Rational> mass;
};

Mobius mobius(const Capacity& v);
Capacity unmobius(const std::vector<std::string>& ground, const Mobius& m);

struct MonotonicityReport {
  bool ok = true;
  std::vector<Mask> witness;  // sets violating the inequality
  Rational lhs, rhs;
};

// Exhaustive check of the n-monotone inequality; ground limited to 6 elements.
MonotonicityReport check_n_monotone(const Capacity& v, std::size_t n);
bool is_n_monotone(const Capacity& v, std::size_t n);
bool is_totally_monotone(const Capacity& v);
// Supermodularity through local second differences; any ground size.
bool is_supermodular(const Capacity& v);

Capacity dual(const Capacity& v);

// Inner measure of an additive prior on the algebra generated by `blocks` (a partition of the ground).
Capacity inner_measure(std::size_t ground, const std::vector<Mask>& blocks, const std::vector<Rational>& mass);
Capacity outer_measure(std::size_t ground, const std::vector<Mask>& blocks, const std::vector<Rational>& mass);

// Marginal allocations over all orderings, duplicates removed.
std::vector<std::vector<Rational>> core_vertices(const Capacity& v);

Rational choquet(const std::vector<Rational>& x, const Capacity& v);

Rational lower_stieltjes(const std::vector<Rational>& x, const std::vector<Mask>& blocks,
                         const std::vector<Rational>& mass);
Rational upper_stieltjes(const std::vector<Rational>& x, const std::vector<Mask>& blocks,
                         const std::vector<Rational>& mass);

}  // namespace condenv
