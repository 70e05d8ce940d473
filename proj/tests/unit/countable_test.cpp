#include <gtest/gtest.h>

#include "condenv/countable.hpp"
#include "condenv/error.hpp"
#include "fixtures.hpp"

using namespace condenv;
using fixtures::q;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidInput;
}

const std::vector<Profile> kParity = {{"odd", 2, 1}, {"even", 2, 0}};

// Diffuse mass on the odds; sigma(E1|H_n) on the evens is 3/4 at n = 2 and 1/2 elsewhere.
ProfileModel ultrafilter() {
  ProfileModel m(2, kParity, {}, {{"B", {0}, 1}, {"Bc", {1}, 0}});
  m.set_tail(0, 0b01, TailSpec::constant(q(1, 2)));
  TailSpec even;
  even.liminf = even.limsup = even.inf_value = q(1, 2);
  even.sup_value = q(3, 4);
  even.inf_attained = false;
  even.exceptions[2] = q(3, 4);
  m.set_tail(1, 0b01, even);
  return m;
}

// One diffuse cell over both parities; E1 is sure on evens and impossible on odds.
ProfileModel split_cell() {
  ProfileModel m(2, kParity, {}, {{"N", {0, 1}, 1}});
  m.set_tail(0, 0b01, TailSpec::constant(0));
  m.set_tail(1, 0b01, TailSpec::constant(1));
  return m;
}

}  // namespace

TEST(TailSpec, ComplementAndValidation) {
  TailSpec t;
  t.liminf = q(1, 4);
  t.limsup = q(1, 2);
  t.inf_value = q(1, 8);
  t.sup_value = q(1, 2);
  t.exceptions[3] = q(1, 8);
  t.sup_attained = false;
  EXPECT_NO_THROW(t.validate());
  auto c = t.complement();
  EXPECT_EQ(c.liminf, q(1, 2));
  EXPECT_EQ(c.limsup, q(3, 4));
  EXPECT_EQ(c.sup_value, q(7, 8));
  EXPECT_FALSE(c.inf_attained);
  EXPECT_TRUE(c.sup_attained);
  EXPECT_NO_THROW(c.validate());

  TailSpec no_witness = t;
  no_witness.exceptions.clear();
  EXPECT_EQ(code_of([&] { no_witness.validate(); }), ErrorCode::InvalidInput);
  TailSpec crossed = TailSpec::constant(q(1, 2));
  crossed.liminf = q(3, 4);
  EXPECT_EQ(code_of([&] { crossed.validate(); }), ErrorCode::InvalidInput);
}

TEST(ProfileModel, Validation) {
  EXPECT_EQ(code_of([] { ProfileModel(2, {{"a", 2, 1}, {"b", 3, 0}}, {}, {{"N", {0, 1}, 1}}); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { ProfileModel(2, kParity, {}, {{"N", {0, 1}, q(1, 2)}}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { ProfileModel(2, kParity, {}, {{"N", {0}, 1}}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { ProfileModel(2, kParity, {{"h", 0, {1, 0}, q(1, 2)}}, {{"N", {0, 1}, q(1, 2)}}); }),
            ErrorCode::InvalidInput);
  EXPECT_NO_THROW(ProfileModel(2, kParity, {{"h", 3, {1, 0}, q(1, 2)}}, {{"N", {0, 1}, q(1, 2)}}));
  auto m = ultrafilter();
  TailSpec wrong = TailSpec::constant(q(1, 2));
  wrong.exceptions[3] = q(1, 2);
  EXPECT_EQ(code_of([&] { m.set_tail(1, 0b01, wrong); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] { m.set_tail(1, 0b11, TailSpec::constant(1)); }), ErrorCode::InvalidInput);
}

TEST(ProfileModel, QuotientAndPrior) {
  ProfileModel m(2, kParity, {{"h2", 2, {q(1, 3), q(2, 3)}, q(1, 4)}}, {{"B", {0}, q(3, 4)}, {"Bc", {1}, 0}});
  const auto& s = m.quotient();
  EXPECT_EQ(s.n_conditioning(), 3u);
  EXPECT_TRUE(m.is_named_row(2));
  EXPECT_TRUE(m.in_prior_algebra(s.row(0) | s.row(2)));
  EXPECT_FALSE(m.in_prior_algebra(s.atom(0)));
  EXPECT_EQ(m.prior(s.row(2)), q(1, 4));
  EXPECT_EQ(m.prior(s.row(1)), 0);
  EXPECT_EQ(m.named_sigma(0, 0b10), q(2, 3));
  EXPECT_EQ(m.quotient_masses(), (std::vector<Rational>{q(3, 4), 0, q(1, 4)}));
}

TEST(ProfileModel, ResidualTail) {
  TailSpec even;
  even.liminf = even.limsup = q(1, 2);
  even.inf_value = q(1, 4);
  even.sup_value = q(1, 2);
  even.exceptions[4] = q(1, 4);
  ProfileModel keeps(2, kParity, {{"h2", 2, {1, 0}, 0}}, {{"N", {0, 1}, 1}});
  keeps.set_tail(1, 0b01, even);
  EXPECT_EQ(keeps.residual_tail(1, 0b01).inf_value, q(1, 4));

  ProfileModel loses(2, kParity, {{"h4", 4, {1, 0}, 0}}, {{"N", {0, 1}, 1}});
  loses.set_tail(1, 0b01, even);
  EXPECT_EQ(code_of([&] { loses.residual_tail(1, 0b01); }), ErrorCode::NotDescribable);
  EXPECT_EQ(code_of([&] { loses.residual_tail(1, 0b10); }), ErrorCode::NotDescribable);
}

TEST(ProfileModel, MissingTail) {
  ProfileModel m(3, kParity, {}, {{"N", {0, 1}, 1}});
  m.set_tail(0, 0b001, TailSpec::constant(q(1, 2)));
  const Event e1 = m.quotient().column(0);
  EXPECT_EQ(code_of([&] { sc_envelope(m, e1); }), ErrorCode::NotDescribable);
}

TEST(Countable, UltrafilterFullyDisintegrable) {
  auto m = ultrafilter();
  const auto& s = m.quotient();
  auto r = fd_envelope_countable(m, s.column(0), s.row(1));
  EXPECT_EQ(r.lower, q(1, 2));
  EXPECT_EQ(r.upper, q(3, 4));
  auto r2 = fd_envelope_countable(m, s.column(1), s.row(1));
  EXPECT_EQ(r2.lower, q(1, 4));
  EXPECT_EQ(r2.upper, q(1, 2));
  auto inf = profile_inf_sup(m, s.column(0), s.row(1));
  EXPECT_FALSE(inf.inf_attained);
  EXPECT_TRUE(inf.sup_attained);
  auto pos = fd_envelope_countable(m, s.column(0), s.row(0));
  EXPECT_EQ(pos.lower, q(1, 2));
  EXPECT_EQ(pos.upper, q(1, 2));
}

TEST(Countable, ConditioningOutsidePriorAlgebra) {
  auto m = split_cell();
  EXPECT_EQ(code_of([&] { fd_envelope_countable(m, m.quotient().column(0), m.quotient().row(1)); }),
            ErrorCode::NotDescribable);
  EXPECT_EQ(code_of([&] { fd_envelope_countable(m, m.quotient().column(0), m.quotient().omega()); }),
            ErrorCode::NotIntegrable);
}

TEST(Countable, StronglyConglomerableEnvelope) {
  auto m = split_cell();
  const auto& s = m.quotient();
  auto sc = sc_envelope(m, s.column(0));
  EXPECT_EQ(sc.lower, 0);
  EXPECT_EQ(sc.upper, 1);
  auto inner = quotient_inner_measure(m);
  EXPECT_EQ(inner(0b10), 0);
  EXPECT_EQ(inner(0b11), 1);
  auto joint = joint_bounds_countable(m, s.column(0));
  EXPECT_EQ(joint.lower, sc.lower);
  EXPECT_EQ(joint.upper, sc.upper);
  EXPECT_EQ(fsc_lower(m, s.column(0), s.omega()).lower, 0);
  EXPECT_EQ(fsc_lower(m, ~s.column(0), s.omega()).lower, 0);
}

TEST(Countable, NamedIndicesEnterTheJoint) {
  ProfileModel m(2, kParity, {{"h1", 1, {q(1, 3), q(2, 3)}, q(1, 2)}}, {{"N", {0, 1}, q(1, 2)}});
  m.set_tail(0, 0b01, TailSpec::constant(q(1, 5)));
  m.set_tail(1, 0b01, TailSpec::constant(q(3, 5)));
  const auto& s = m.quotient();
  auto sc = sc_envelope(m, s.column(0));
  EXPECT_EQ(sc.lower, q(1, 6) + q(1, 10));
  EXPECT_EQ(sc.upper, q(1, 6) + q(3, 10));
  auto joint = joint_bounds_countable(m, s.column(0));
  EXPECT_LE(joint.lower, sc.lower);
  EXPECT_GE(joint.upper, sc.upper);
}

TEST(Conglomerability, JointCandidates) {
  auto m = split_cell();
  const auto& s = m.quotient();
  std::vector<Rational> all_odd(s.atom_count(), Rational(0));
  all_odd[*s.atom_index(0, 1)] = 1;
  EXPECT_TRUE(check_strong_conglomerability(m, all_odd).ok);

  auto u = ultrafilter();
  const auto& us = u.quotient();
  std::vector<Rational> bad(us.atom_count(), Rational(0));
  bad[*us.atom_index(0, 0)] = 1;
  auto rep = check_strong_conglomerability(u, bad);
  EXPECT_FALSE(rep.ok);
  std::vector<Rational> wrong_total(us.atom_count(), Rational(0));
  EXPECT_EQ(code_of([&] { check_strong_conglomerability(u, wrong_total); }), ErrorCode::InconsistentCandidate);
}

TEST(Conglomerability, FullCandidates) {
  auto u = ultrafilter();
  const auto& s = u.quotient();
  std::vector<Rational> first(s.atom_count(), Rational(0)), second(s.atom_count(), Rational(0));
  first[*s.atom_index(0, 0)] = q(1, 2);
  first[*s.atom_index(0, 1)] = q(1, 2);
  second[*s.atom_index(1, 0)] = q(5, 8);
  second[*s.atom_index(1, 1)] = q(3, 8);
  EXPECT_TRUE(check_full_strong_conglomerability(u, LayeredConditional(s.atom_count(), {first, second})).ok);
  second[*s.atom_index(1, 0)] = q(7, 8);
  second[*s.atom_index(1, 1)] = q(1, 8);
  EXPECT_FALSE(check_full_strong_conglomerability(u, LayeredConditional(s.atom_count(), {first, second})).ok);
}
