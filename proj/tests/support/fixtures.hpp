#pragma once

#include <random>
#include <vector>

#include "condenv/algebra.hpp"
#include "condenv/assessment.hpp"
#include "condenv/envelopes.hpp"
#include "condenv/rational.hpp"

namespace fixtures {

using condenv::AtomSpace;
using condenv::Event;
using condenv::Instance;
using condenv::Prior;
using condenv::Rational;
using condenv::StatisticalModel;

inline Rational q(long p, unsigned long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

inline Rational power(const Rational& x, unsigned n) {
  Rational r = 1;
  for (unsigned k = 0; k < n; ++k) r *= x;
  return r;
}

inline Rational binomial(unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// pi = (1/2, 1/2), lambda(E1|.) = (1/4, 3/4).
inline Instance grid2x2() {
  auto space = AtomSpace::full(2, 2);
  Prior prior = Prior::on_cells(space, {q(1, 2), q(1, 2)});
  StatisticalModel m{{{q(1, 4), q(3, 4)}, {q(3, 4), q(1, 4)}}};
  return Instance::from_model(space, prior, m);
}

// Row 0: theta = 0 carrying all prior mass, compatible with X = 0 only.
// Rows 1..9: theta = i/10, prior zero, binomial likelihood on X = 0..n.
inline Instance binomial_surrogate(unsigned n) {
  std::vector<std::vector<bool>> compat(10, std::vector<bool>(n + 1, true));
  for (unsigned x = 1; x <= n; ++x) compat[0][x] = false;
  auto space = AtomSpace::build(compat);
  std::vector<Rational> mass(10, Rational(0));
  mass[0] = 1;
  Prior prior = Prior::on_cells(space, mass);
  StatisticalModel m;
  m.rows.push_back(std::vector<Rational>(n + 1, Rational(0)));
  m.rows[0][0] = 1;
  for (unsigned i = 1; i <= 9; ++i) {
    const Rational th = q(i, 10);
    std::vector<Rational> row;
    for (unsigned x = 0; x <= n; ++x) row.push_back(binomial(n, x) * power(th, x) * power(1 - th, n - x));
    m.rows.push_back(row);
  }
  return Instance::from_model(space, prior, m);
}

// C = (X = n), D = theta in {1/10, ..., 9/10}.
inline Event binomial_c(const Instance& inst, unsigned n) { return inst.space.column(n); }
inline Event binomial_d(const Instance& inst) {
  Event d = inst.space.none();
  for (std::size_t i = 1; i <= 9; ++i) d |= inst.space.row(i);
  return d;
}

// 3x2 grid, pi = (1, 0, 0), lambda rows (0,1), (1/2,1/2), (1/3,2/3).
inline Instance vacuity() {
  auto space = AtomSpace::full(3, 2);
  Prior prior = Prior::on_cells(space, {q(1), q(0), q(0)});
  StatisticalModel m{{{q(0), q(1)}, {q(1, 2), q(1, 2)}, {q(1, 3), q(2, 3)}}};
  return Instance::from_model(space, prior, m);
}

// Grid theta_j = j/k, uniform prior, binomial likelihood with n draws.
inline Instance bayes_grid(unsigned k, unsigned n) {
  std::vector<std::vector<bool>> compat(k + 1, std::vector<bool>(n + 1, true));
  for (unsigned x = 1; x <= n; ++x) compat[0][x] = false;
  for (unsigned x = 0; x < n; ++x) compat[k][x] = false;
  auto space = AtomSpace::build(compat);
  Prior prior = Prior::on_cells(space, std::vector<Rational>(k + 1, q(1, k + 1)));
  StatisticalModel m;
  for (unsigned j = 0; j <= k; ++j) {
    const Rational th = q(j, k);
    std::vector<Rational> row;
    for (unsigned x = 0; x <= n; ++x) row.push_back(binomial(n, x) * power(th, x) * power(1 - th, n - x));
    m.rows.push_back(row);
  }
  return Instance::from_model(space, prior, m);
}

// Probability vector with small denominators; zeros appear with some frequency.
inline std::vector<Rational> random_distribution(std::mt19937& rng, std::size_t size, bool allow_zero = true) {
  std::uniform_int_distribution<int> w(allow_zero ? 0 : 1, 4);
  std::vector<int> raw(size);
  int total = 0;
  for (auto& x : raw) total += (x = w(rng));
  if (total == 0) {
    raw[0] = 1;
    total = 1;
  }
  std::vector<Rational> out;
  for (int x : raw) out.push_back(q(x, static_cast<unsigned long>(total)));
  return out;
}

inline Instance random_instance(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  auto space = AtomSpace::full(rows, cols);
  Prior prior = Prior::on_cells(space, random_distribution(rng, rows));
  StatisticalModel m;
  for (std::size_t i = 0; i < rows; ++i) m.rows.push_back(random_distribution(rng, cols));
  return Instance::from_model(space, prior, m);
}

}  // namespace fixtures
