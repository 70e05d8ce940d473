#include "condenv/capacity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "condenv/error.hpp"

namespace condenv {

namespace {

constexpr std::size_t kExhaustiveGround = 6;
constexpr std::size_t kPermutationGround = 9;

void check_ground(std::size_t n) {
  if (n > Capacity::kMaxGround)
    throw Error(ErrorCode::GroundTooLarge, "ground of " + std::to_string(n) + " elements exceeds " +
                                               std::to_string(Capacity::kMaxGround));
}

}  // namespace

std::vector<std::string> default_names(std::size_t size) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < size; ++k) out.push_back("x" + std::to_string(k + 1));
  return out;
}

Capacity::Capacity(std::vector<std::string> ground, std::vector<Rational> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  check_ground(ground_.size());
  if (values_.size() != (std::size_t{1} << ground_.size()))
    throw Error(ErrorCode::InvalidInput, "capacity needs 2^n values");
  if (values_.front() != 0) throw Error(ErrorCode::InvalidInput, "capacity of the empty set must be 0");
  if (values_.back() != 1) throw Error(ErrorCode::InvalidInput, "capacity of the ground set must be 1");
  for (Mask m = 0; m < values_.size(); ++m)
    for (std::size_t k = 0; k < ground_.size(); ++k)
      if (!(m >> k & 1U) && values_[m | (Mask{1} << k)] < values_[m])
        throw Error(ErrorCode::InvalidInput, "capacity is not monotone");
}

Capacity Capacity::with_default_names(std::size_t size, std::vector<Rational> values) {
  return Capacity(default_names(size), std::move(values));
}

Mobius mobius(const Capacity& v) {
  Mobius m{v.values()};
  const std::size_t n = v.size();
  for (std::size_t k = 0; k < n; ++k)
    for (Mask s = 0; s < m.mass.size(); ++s)
      if (s >> k & 1U) m.mass[s] -= m.mass[s ^ (Mask{1} << k)];
  return m;
}

Capacity unmobius(const std::vector<std::string>& ground, const Mobius& m) {
  std::vector<Rational> values = m.mass;
  for (std::size_t k = 0; k < ground.size(); ++k)
    for (Mask s = 0; s < values.size(); ++s)
      if (s >> k & 1U) values[s] += values[s ^ (Mask{1} << k)];
  return Capacity(ground, std::move(values));
}

namespace {

// Antichains of size n in increasing mask order; the inequality for comparable sets reduces to lower order.
bool search(const Capacity& v, std::size_t n, std::vector<Mask>& chosen, Mask start, MonotonicityReport& rep) {
  if (chosen.size() == n) {
    Mask uni = 0;
    for (auto a : chosen) uni |= a;
    Rational rhs = 0;
    for (Mask pick = 1; pick < (Mask{1} << n); ++pick) {
      Mask inter = v.full();
      for (std::size_t q = 0; q < n; ++q)
        if (pick >> q & 1U) inter &= chosen[q];
      if (std::popcount(pick) % 2 == 1)
        rhs += v(inter);
      else
        rhs -= v(inter);
    }
    if (v(uni) < rhs) {
      rep.ok = false;
      rep.witness = chosen;
      rep.lhs = v(uni);
      rep.rhs = rhs;
      return false;
    }
    return true;
  }
  for (Mask a = start; a <= v.full(); ++a) {
    bool comparable = false;
    for (auto b : chosen) comparable = comparable || (a & b) == a || (a & b) == b;
    if (comparable) continue;
    chosen.push_back(a);
    const bool ok = search(v, n, chosen, a + 1, rep);
    chosen.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

MonotonicityReport check_n_monotone(const Capacity& v, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "n-monotonicity needs n >= 2");
  if (v.size() > kExhaustiveGround)
    throw Error(ErrorCode::GroundTooLarge, "exhaustive n-monotone check limited to " +
                                               std::to_string(kExhaustiveGround) + " elements");
  MonotonicityReport rep;
  for (std::size_t order = 2; order <= n; ++order) {
    std::vector<Mask> chosen;
    if (!search(v, order, chosen, 1, rep)) return rep;
  }
  return rep;
}

bool is_n_monotone(const Capacity& v, std::size_t n) {
  if (v.size() > kExhaustiveGround) {
    if (n == 2) return is_supermodular(v);
    if (is_totally_monotone(v)) return true;
  }
  return check_n_monotone(v, n).ok;
}

bool is_totally_monotone(const Capacity& v) {
  const auto m = mobius(v);
  return std::all_of(m.mass.begin(), m.mass.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

bool is_supermodular(const Capacity& v) {
  const std::size_t n = v.size();
  for (Mask a = 0; a <= v.full(); ++a)
    for (std::size_t i = 0; i < n; ++i) {
      if (a >> i & 1U) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a >> j & 1U) continue;
        const Mask ai = a | (Mask{1} << i), aj = a | (Mask{1} << j);
        if (v(ai | aj) + v(a) < v(ai) + v(aj)) return false;
      }
    }
  return true;
}

Capacity dual(const Capacity& v) {
  std::vector<Rational> values(v.values().size());
  for (Mask m = 0; m <= v.full(); ++m) values[m] = 1 - v(v.full() ^ m);
  return Capacity(v.ground(), std::move(values));
}

Capacity inner_measure(std::size_t ground, const std::vector<Mask>& blocks, const std::vector<Rational>& mass) {
  check_ground(ground);
  if (blocks.size() != mass.size()) throw Error(ErrorCode::InvalidInput, "block and mass counts differ");
  const Mask full = static_cast<Mask>((1ULL << ground) - 1);
  Mask seen = 0;
  for (auto b : blocks) {
    if (b == 0 || (b & seen) != 0 || (b & ~full) != 0)
      throw Error(ErrorCode::InvalidInput, "blocks must be nonempty, disjoint subsets of the ground");
    seen |= b;
  }
  if (seen != full) throw Error(ErrorCode::InvalidInput, "blocks do not cover the ground");
  std::vector<Rational> values(std::size_t{1} << ground);
  for (Mask m = 0; m <= full; ++m)
    for (std::size_t k = 0; k < blocks.size(); ++k)
      if ((blocks[k] & m) == blocks[k]) values[m] += mass[k];
  return Capacity(default_names(ground), std::move(values));
}

Capacity outer_measure(std::size_t ground, const std::vector<Mask>& blocks, const std::vector<Rational>& mass) {
  return dual(inner_measure(ground, blocks, mass));
}

std::vector<std::vector<Rational>> core_vertices(const Capacity& v) {
  if (v.size() > kPermutationGround)
    throw Error(ErrorCode::GroundTooLarge, "vertex enumeration limited to " + std::to_string(kPermutationGround) +
                                               " elements");
  if (!is_supermodular(v)) throw Error(ErrorCode::NotTwoMonotone, "core vertices need a 2-monotone capacity");
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<Rational>> out;
  do {
    std::vector<Rational> p(v.size());
    Mask acc = 0;
    for (auto k : order) {
      const Mask next = acc | (Mask{1} << k);
      p[k] = v(next) - v(acc);
      acc = next;
    }
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Rational choquet(const std::vector<Rational>& x, const Capacity& v) {
  if (x.size() != v.size()) throw Error(ErrorCode::InvalidInput, "integrand and capacity sizes differ");
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  Rational total = 0;
  Mask level = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    level |= Mask{1} << order[k];
    const Rational next = k + 1 < order.size() ? x[order[k + 1]] : Rational(0);
    total += (x[order[k]] - next) * v(level);
  }
  return total;
}

namespace {

template <class Pick>
Rational stieltjes(const std::vector<Rational>& x, const std::vector<Mask>& blocks, const std::vector<Rational>& mass,
                   Pick pick) {
  if (blocks.size() != mass.size()) throw Error(ErrorCode::InvalidInput, "block and mass counts differ");
  Rational total = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::optional<Rational> best;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (blocks[b] >> k & 1U)
        if (!best || pick(x[k], *best)) best = x[k];
    if (!best) throw Error(ErrorCode::InvalidInput, "empty block");
    total += mass[b] * *best;
  }
  return total;
}

}  // namespace

// On a finite algebra the finest partition (the blocks) attains the supremum of lower sums.
Rational lower_stieltjes(const std::vector<Rational>& x, const std::vector<Mask>& blocks,
                         const std::vector<Rational>& mass) {
  return stieltjes(x, blocks, mass, [](const Rational& a, const Rational& b) { return a < b; });
}

Rational upper_stieltjes(const std::vector<Rational>& x, const std::vector<Mask>& blocks,
                         const std::vector<Rational>& mass) {
  return stieltjes(x, blocks, mass, [](const Rational& a, const Rational& b) { return a > b; });
}

}  // namespace condenv
