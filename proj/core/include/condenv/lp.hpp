#pragma once

#include <cstddef>
#include <vector>

#include "condenv/rational.hpp"

namespace condenv {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;

  bool optimal() const { return status == LpStatus::Optimal; }
};

// Exact linear program over nonnegative variables, solved by a dense two-phase
// simplex with Bland's rule.
class LinearProgram {
 public:
  enum class Sense { Minimize, Maximize };

  explicit LinearProgram(std::size_t n_vars) : n_(n_vars), objective_(n_vars) {}

  std::size_t variables() const { return n_; }
  std::size_t constraints() const { return rows_.size(); }

  void add_eq(std::vector<Rational> row, Rational rhs) { add(std::move(row), 0, std::move(rhs)); }
  void add_le(std::vector<Rational> row, Rational rhs) { add(std::move(row), 1, std::move(rhs)); }
  void add_ge(std::vector<Rational> row, Rational rhs) { add(std::move(row), -1, std::move(rhs)); }
  void set_objective(std::vector<Rational> c, Sense sense);

  // Feasibility only: the objective is ignored and x is any feasible point.
  LpResult feasible_point() const;
  LpResult solve() const;

 private:
  void add(std::vector<Rational> row, int kind, Rational rhs);
  LpResult run(bool with_objective) const;

  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> kinds_;
  std::vector<Rational> rhs_;
  std::vector<Rational> objective_;
  Sense sense_ = Sense::Minimize;
};

}  // namespace condenv
