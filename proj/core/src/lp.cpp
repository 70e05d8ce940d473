#include "condenv/lp.hpp"

#include "condenv/error.hpp"

namespace condenv {

namespace {

// Tableau rows 0..m-1 hold constraints with the right-hand side in the last column;
// row m is the reduced-cost row of the current phase.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t cols) : m_(m), cols_(cols), t_(m + 1, std::vector<Rational>(cols + 1)), basis_(m) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    auto& prow = t_[pr];
    if (prow[pc] != 1) {
      const Rational inv = 1 / prow[pc];
      for (auto& v : prow)
        if (sgn(v) != 0) v *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c <= cols_; ++c)
      if (sgn(prow[c]) != 0) nz.push_back(c);
    Rational f, prod;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == pr || sgn(t_[r][pc]) == 0) continue;
      f = t_[r][pc];
      for (auto c : nz) {
        mpq_mul(prod.get_mpq_t(), f.get_mpq_t(), prow[c].get_mpq_t());
        mpq_sub(t_[r][c].get_mpq_t(), t_[r][c].get_mpq_t(), prod.get_mpq_t());
      }
    }
    basis_[pr] = pc;
  }

  // Minimizes the cost row over columns allowed by `usable`; returns false if unbounded.
  template <class Usable>
  bool optimize(Usable usable) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t c = 0; c < cols_; ++c)
        if (usable(c) && sgn(t_[m_][c]) < 0) {
          enter = c;
          break;
        }
      if (enter == cols_) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(t_[r][enter]) <= 0) continue;
        Rational ratio = t_[r][cols_] / t_[r][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

 private:
  std::size_t m_, cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

void LinearProgram::add(std::vector<Rational> row, int kind, Rational rhs) {
  if (row.size() != n_) throw Error(ErrorCode::InvalidInput, "constraint has wrong width");
  rows_.push_back(std::move(row));
  kinds_.push_back(kind);
  rhs_.push_back(std::move(rhs));
}

void LinearProgram::set_objective(std::vector<Rational> c, Sense sense) {
  if (c.size() != n_) throw Error(ErrorCode::InvalidInput, "objective has wrong width");
  objective_ = std::move(c);
  sense_ = sense;
}

LpResult LinearProgram::feasible_point() const { return run(false); }

LpResult LinearProgram::solve() const { return run(true); }

LpResult LinearProgram::run(bool with_objective) const {
  const std::size_t m = rows_.size();
  std::size_t slacks = 0;
  for (int k : kinds_) slacks += k != 0 ? 1 : 0;
  // Columns: original, slack, artificial.
  const std::size_t art0 = n_ + slacks;
  const std::size_t cols = art0 + m;
  Tableau t(m, cols);

  std::size_t s = n_;
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = sgn(rhs_[r]) < 0;
    for (std::size_t c = 0; c < n_; ++c)
      if (sgn(rows_[r][c]) != 0) t.at(r, c) = flip ? Rational(-rows_[r][c]) : rows_[r][c];
    if (kinds_[r] != 0) t.at(r, s++) = (kinds_[r] > 0) != flip ? 1 : -1;
    t.rhs(r) = flip ? Rational(-rhs_[r]) : rhs_[r];
    t.at(r, art0 + r) = 1;
    t.basis(r) = art0 + r;
  }
  // Phase I: minimize the sum of artificials.
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c <= cols; ++c)
      if (c < art0 || c == cols) t.at(m, c) -= t.at(r, c);
  t.optimize([](std::size_t) { return true; });

  LpResult out;
  if (sgn(t.at(t.rows(), cols)) != 0) return out;

  for (std::size_t r = 0; r < t.rows();) {
    if (t.basis(r) < art0) {
      ++r;
      continue;
    }
    std::size_t c = 0;
    while (c < art0 && sgn(t.at(r, c)) == 0) ++c;
    if (c == art0) {
      t.drop_row(r);
    } else {
      t.pivot(r, c);
      ++r;
    }
  }

  const std::size_t mr = t.rows();
  if (with_objective) {
    for (std::size_t c = 0; c <= cols; ++c) t.at(mr, c) = 0;
    for (std::size_t c = 0; c < n_; ++c)
      t.at(mr, c) = sense_ == Sense::Maximize ? Rational(-objective_[c]) : objective_[c];
    for (std::size_t r = 0; r < mr; ++r) {
      const std::size_t b = t.basis(r);
      if (sgn(t.at(mr, b)) == 0) continue;
      const Rational f = t.at(mr, b);
      for (std::size_t c = 0; c <= cols; ++c)
        if (sgn(t.at(r, c)) != 0) t.at(mr, c) -= f * t.at(r, c);
    }
    if (!t.optimize([art0](std::size_t c) { return c < art0; })) {
      out.status = LpStatus::Unbounded;
      return out;
    }
  }

  out.status = LpStatus::Optimal;
  out.x.assign(n_, Rational(0));
  for (std::size_t r = 0; r < mr; ++r)
    if (t.basis(r) < n_) out.x[t.basis(r)] = t.rhs(r);
  out.value = 0;
  for (std::size_t c = 0; c < n_; ++c) out.value += objective_[c] * out.x[c];
  return out;
}

}  // namespace condenv
