#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "condenv/algebra.hpp"
#include "condenv/assessment.hpp"
#include "condenv/capacity.hpp"
#include "condenv/envelopes.hpp"
#include "condenv/rational.hpp"

namespace condenv {

// Behaviour of sigma(S|H_i) along the indices i of one profile, S a set of E-columns.
struct TailSpec {
  std::map<std::uint64_t, Rational> exceptions;
  Rational liminf, limsup;
  Rational inf_value, sup_value;
  bool inf_attained = true;
  bool sup_attained = true;

  static TailSpec constant(const Rational& v);
  // Tail of the complementary column set: 1 - x, with inf and sup exchanged.
  TailSpec complement() const;
  void validate() const;
};

// Indices n >= 1 with n mod modulus == residue.
struct Profile {
  std::string name;
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;

  bool contains(std::uint64_t n) const { return n % modulus == residue % modulus; }
};

struct NamedIndex {
  std::string name;
  std::uint64_t index = 0;
  std::vector<Rational> sigma;  // sigma(E_j|H_index)
  Rational mass;
};

// Union of profiles carrying diffuse prior weight: every finite set inside has prior zero.
struct DiffuseCell {
  std::string name;
  std::vector<std::size_t> profiles;
  Rational weight;
};

// Countable conditioning partition described by finitely many profiles and named indices.
// The quotient space has one row per profile (minus named indices) followed by one row per
// named index, and one column per E_j.
class ProfileModel {
 public:
  ProfileModel(std::size_t n_observable, std::vector<Profile> profiles, std::vector<NamedIndex> named,
               std::vector<DiffuseCell> cells);

  void set_tail(std::size_t profile, Mask columns, TailSpec spec);

  const AtomSpace& quotient() const { return space_; }
  std::size_t n_observable() const { return m_; }
  const std::vector<Profile>& profiles() const { return profiles_; }
  const std::vector<NamedIndex>& named() const { return named_; }
  const std::vector<DiffuseCell>& cells() const { return cells_; }
  const std::map<std::pair<std::size_t, Mask>, TailSpec>& tails() const { return tails_; }

  std::size_t profile_row(std::size_t p) const { return p; }
  std::size_t named_row(std::size_t q) const { return profiles_.size() + q; }
  bool is_named_row(std::size_t r) const { return r >= profiles_.size(); }
  Event cell_event(std::size_t c) const;

  // Columns of F inside quotient row r.
  Mask columns_of(const Event& f, std::size_t r) const;
  // Tail of sigma(S|.) on the residual of profile p (named indices removed).
  TailSpec residual_tail(std::size_t p, Mask columns) const;
  Rational named_sigma(std::size_t q, Mask columns) const;

  // Prior on the describable part of A_L: unions of cells and named indices.
  bool in_prior_algebra(const Event& k) const;
  Rational prior(const Event& k) const;
  // Cells and named indices as blocks of the quotient rows.
  std::vector<Mask> quotient_blocks() const;
  std::vector<Rational> quotient_masses() const;

 private:
  std::size_t m_;
  std::vector<Profile> profiles_;
  std::vector<NamedIndex> named_;
  std::vector<DiffuseCell> cells_;
  std::vector<std::size_t> cell_of_profile_;
  std::map<std::pair<std::size_t, Mask>, TailSpec> tails_;
  AtomSpace space_;
};

struct InfSup {
  Rational inf, sup;
  bool inf_attained = true;
  bool sup_attained = true;
};

// inf and sup of sigma(F|H_i) over the indices i inside K (K a union of quotient rows).
InfSup profile_inf_sup(const ProfileModel& model, const Event& f, const Event& k);

// Inner measure of the prior on the quotient rows.
Capacity quotient_inner_measure(const ProfileModel& model);

EnvelopeResult sc_envelope(const ProfileModel& model, const Event& f);
EnvelopeResult joint_bounds_countable(const ProfileModel& model, const Event& f);
EnvelopeResult fd_envelope_countable(const ProfileModel& model, const Event& f, const Event& k);

struct FscResult {
  Rational lower;
  std::vector<std::size_t> allocation;  // profile receiving each cell's weight
};
FscResult fsc_lower(const ProfileModel& model, const Event& f, const Event& k);

struct CongReport {
  bool ok = true;
  Event f, b, k;
  std::string detail;
};

// candidate: joint mass on quotient atoms.
CongReport check_strong_conglomerability(const ProfileModel& model, const std::vector<Rational>& candidate);
// candidate: full conditional probability on the quotient atoms.
CongReport check_full_strong_conglomerability(const ProfileModel& model, const LayeredConditional& candidate);

}  // namespace condenv
