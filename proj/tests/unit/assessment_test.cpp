#include <gtest/gtest.h>

#include "condenv/assessment.hpp"
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

}  // namespace

TEST(Prior, Validation) {
  auto s = AtomSpace::full(3, 2);
  EXPECT_EQ(code_of([&] { Prior(s, {{0}, {1, 2}}, {q(1, 2), q(1, 3)}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] { Prior(s, {{0}, {1, 2}}, {q(3, 2), q(-1, 2)}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] { Prior(s, {{0}, {1}}, {q(1, 2), q(1, 2)}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] { Prior(s, {{0, 1}, {1, 2}}, {q(1, 2), q(1, 2)}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] { Prior(s, {{0, 1}, {3}}, {q(1, 2), q(1, 2)}); }), ErrorCode::BadIndex);
}

TEST(Prior, Measure) {
  auto s = AtomSpace::full(3, 2);
  Prior p(s, {{0, 2}, {1}}, {q(1, 3), q(2, 3)});
  EXPECT_EQ(p.of(s.row(0) | s.row(2)), q(1, 3));
  EXPECT_EQ(p.of(s.omega()), 1);
  EXPECT_EQ(p.block_of_row(2), 0u);
  EXPECT_FALSE(p.singleton_blocks());
  EXPECT_EQ(code_of([&] { p.of(s.row(0)); }), ErrorCode::EventNotInPriorAlgebra);
}

TEST(StatisticalModel, Validation) {
  auto s = AtomSpace::build({{true, false}, {true, true}});
  StatisticalModel ok{{{1, 0}, {q(1, 2), q(1, 2)}}};
  EXPECT_NO_THROW(ok.validate(s));
  StatisticalModel mass_on_excluded{{{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}}};
  EXPECT_EQ(code_of([&] { mass_on_excluded.validate(s); }), ErrorCode::InvalidInput);
  StatisticalModel bad_sum{{{1, 0}, {q(1, 2), q(1, 3)}}};
  EXPECT_EQ(code_of([&] { bad_sum.validate(s); }), ErrorCode::InvalidInput);
}

TEST(Strategy, RowConditionals) {
  auto inst = fixtures::grid2x2();
  EXPECT_EQ(inst.sigma(inst.space.column(0), 0), q(1, 4));
  EXPECT_EQ(inst.sigma(inst.space.column(0), 1), q(3, 4));
  EXPECT_EQ(inst.sigma(inst.space.omega(), 1), 1);
}

TEST(LayeredConditional, Evaluate) {
  LayeredConditional p(4, {{q(1, 2), q(1, 2), 0, 0}, {0, 0, q(1, 3), q(2, 3)}});
  auto k = Event::from_mask(4, 0b1100);
  EXPECT_EQ(p.first_layer(k), 1u);
  EXPECT_EQ(p.evaluate(Event::from_mask(4, 0b0100), k), q(1, 3));
  EXPECT_EQ(p.evaluate(Event::from_mask(4, 0b0101), Event::from_mask(4, 0b1111)), q(1, 2));
  EXPECT_EQ(code_of([&] { p.evaluate(k, Event(4)); }), ErrorCode::EmptyConditioning);
}

TEST(FullConditional, CanonicalExtensionIsValid) {
  auto inst = fixtures::grid2x2();
  auto p = canonical_extension(inst.space, inst.prior, inst.sigma);
  auto rep = validate_full_conditional(p);
  EXPECT_TRUE(rep.ok) << rep.condition << " " << rep.detail;
  EXPECT_TRUE(rep.exhaustive);
  EXPECT_TRUE(extends_assessment(inst.space, p, inst.prior, inst.sigma));
  auto t = ConditionalTable::from(p);
  EXPECT_EQ(t.get(inst.space.row(0).mask(), inst.space.column(0).mask()), q(1, 4));
  EXPECT_TRUE(validate_full_conditional(t).ok);
}

TEST(FullConditional, CanonicalExtensionWithNullCells) {
  auto inst = fixtures::vacuity();
  auto p = canonical_extension(inst.space, inst.prior, inst.sigma);
  EXPECT_TRUE(validate_full_conditional(p).ok);
  EXPECT_TRUE(extends_assessment(inst.space, p, inst.prior, inst.sigma));
  EXPECT_EQ(p.evaluate(inst.space.column(0), inst.space.row(2)), q(1, 3));
}

TEST(FullConditional, DetectsBrokenLayers) {
  LayeredConditional overlap(3, {{q(1, 2), q(1, 2), 0}, {0, q(1, 2), q(1, 2)}});
  EXPECT_FALSE(validate_full_conditional(overlap).ok);
  LayeredConditional short_sum(2, {{q(1, 2), q(1, 4)}});
  EXPECT_FALSE(validate_full_conditional(short_sum).ok);
  LayeredConditional uncovered(3, {{q(1, 2), q(1, 2), 0}});
  EXPECT_FALSE(validate_full_conditional(uncovered).ok);
}

TEST(FullConditional, TableDetectsViolatedProductRule) {
  LayeredConditional p(2, {{q(1, 2), q(1, 2)}});
  auto t = ConditionalTable::from(p);
  t.set(0b01, 0b11, q(1, 3));
  EXPECT_FALSE(validate_full_conditional(t).ok);
}

TEST(FullConditional, LargeSpacesAreNotExhaustive) {
  auto inst = fixtures::binomial_surrogate(2);
  auto p = canonical_extension(inst.space, inst.prior, inst.sigma);
  auto rep = validate_full_conditional(p);
  EXPECT_TRUE(rep.ok);
  EXPECT_FALSE(rep.exhaustive);
  EXPECT_EQ(code_of([&] { ConditionalTable::from(p); }), ErrorCode::GroundTooLarge);
}

TEST(FullConditional, ExtensionMustMatchPrior) {
  auto inst = fixtures::grid2x2();
  LayeredConditional p(4, {{q(1, 4), q(1, 4), q(1, 4), q(1, 4)}});
  EXPECT_FALSE(extends_assessment(inst.space, p, inst.prior, inst.sigma));
}
