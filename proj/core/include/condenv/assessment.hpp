#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "condenv/algebra.hpp"
#include "condenv/rational.hpp"

namespace condenv {

// Finitely additive prior on a subalgebra whose blocks are unions of H-rows.
class Prior {
 public:
  Prior() = default;
  Prior(const AtomSpace& space, std::vector<std::vector<std::size_t>> block_rows, std::vector<Rational> mass);
  // One block per H-row.
  static Prior on_cells(const AtomSpace& space, std::vector<Rational> mass);

  const Subalgebra& sub() const { return sub_; }
  std::size_t block_count() const { return mass_.size(); }
  const std::vector<std::vector<std::size_t>>& block_rows() const { return block_rows_; }
  const std::vector<Rational>& mass() const { return mass_; }
  std::size_t block_of_row(std::size_t i) const { return row_block_.at(i); }
  bool singleton_blocks() const;

  bool measurable(const Event& e) const { return sub_.contains(e); }
  Rational of(const Event& e) const;

 private:
  Subalgebra sub_;
  std::vector<std::vector<std::size_t>> block_rows_;
  std::vector<Rational> mass_;
  std::vector<std::size_t> row_block_;
};

// lambda(E_j|H_i); entries at incompatible (i,j) must be zero.
struct StatisticalModel {
  std::vector<std::vector<Rational>> rows;

  void validate(const AtomSpace& space) const;
};

class Strategy {
 public:
  Strategy() = default;
  Strategy(const AtomSpace& space, std::vector<Rational> atom_mass);

  // sigma(F|H_i)
  Rational operator()(const Event& f, std::size_t i) const;
  const Rational& atom_mass(std::size_t a) const { return atom_mass_.at(a); }
  std::size_t n_conditioning() const { return row_atoms_.size(); }

 private:
  std::vector<Rational> atom_mass_;
  std::vector<std::vector<std::size_t>> row_atoms_;
};

Strategy strategy_from_model(const AtomSpace& space, const StatisticalModel& model);

// Full conditional probability as a sequence of probability vectors with disjoint supports.
class LayeredConditional {
 public:
  LayeredConditional() = default;
  LayeredConditional(std::size_t atom_count, std::vector<std::vector<Rational>> layers);

  std::size_t atom_count() const { return atom_count_; }
  const std::vector<std::vector<Rational>>& layers() const { return layers_; }
  std::vector<std::vector<Rational>>& mutable_layers() { return layers_; }

  // First layer giving K positive mass.
  std::optional<std::size_t> first_layer(const Event& k) const;
  Rational mass(std::size_t layer, const Event& e) const;
  Rational evaluate(const Event& f, const Event& k) const;

 private:
  std::size_t atom_count_ = 0;
  std::vector<std::vector<Rational>> layers_;
};

// Dense P(F|K) table on the whole atom algebra, for small spaces.
class ConditionalTable {
 public:
  static constexpr std::size_t kMaxAtoms = 10;

  explicit ConditionalTable(std::size_t atom_count);
  static ConditionalTable from(const LayeredConditional& p);

  std::size_t atom_count() const { return n_; }
  const Rational& get(unsigned long long f, unsigned long long k) const { return values_[(k << n_) | f]; }
  void set(unsigned long long f, unsigned long long k, Rational v) { values_[(k << n_) | f] = std::move(v); }

 private:
  std::size_t n_;
  std::vector<Rational> values_;
};

struct FcpReport {
  bool ok = true;
  bool exhaustive = true;
  std::string condition;
  Event e, f, h;
  std::string detail;
};

FcpReport validate_full_conditional(const LayeredConditional& p);
FcpReport validate_full_conditional(const ConditionalTable& t);

bool extends_assessment(const AtomSpace& space, const LayeredConditional& p, const Prior& prior,
                        const Strategy& sigma);

// Product extension: prior mass spread uniformly over the rows of each block, then deeper
// layers for prior-null rows and for atoms the strategy leaves at zero.
LayeredConditional canonical_extension(const AtomSpace& space, const Prior& prior, const Strategy& sigma);

}  // namespace condenv
