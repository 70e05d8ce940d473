#include <gtest/gtest.h>

#include "condenv/algebra.hpp"
#include "condenv/error.hpp"
#include "condenv/rational.hpp"

using namespace condenv;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST(AtomSpace, FullGrid) {
  auto s = AtomSpace::full(2, 3);
  EXPECT_EQ(s.atom_count(), 6u);
  EXPECT_EQ(s.row(1).count(), 3u);
  EXPECT_EQ(s.column(2).count(), 2u);
  EXPECT_TRUE(s.omega().full());
  EXPECT_EQ(s.atom_label(4), "H2&E2");
}

TEST(AtomSpace, ExcludedCells) {
  auto s = AtomSpace::build({{true, false}, {true, true}});
  EXPECT_EQ(s.atom_count(), 3u);
  EXPECT_FALSE(s.atom_index(0, 1).has_value());
  EXPECT_EQ(s.column(1).count(), 1u);
  EXPECT_EQ(code_of([] { AtomSpace::build({{false, false}, {true, true}}); }), ErrorCode::EmptyRowOrColumn);
  EXPECT_EQ(code_of([] { AtomSpace::build({{true, false}, {true, false}}); }), ErrorCode::EmptyRowOrColumn);
  EXPECT_EQ(code_of([] { AtomSpace::build({}); }), ErrorCode::EmptyRowOrColumn);
  EXPECT_EQ(code_of([&] { s.row(2); }), ErrorCode::BadIndex);
}

TEST(AtomSpace, RowQueries) {
  auto s = AtomSpace::full(3, 2);
  const Event e = s.atom(0) | s.row(2);
  EXPECT_EQ(s.rows_inside(e), (std::vector<std::size_t>{2}));
  EXPECT_EQ(s.rows_meeting(e), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(s.row_hull(e), s.row(0) | s.row(2));
  EXPECT_FALSE(s.is_row_union(e));
  EXPECT_TRUE(s.is_row_union(s.row(1)));
}

TEST(Event, MaskRoundTrip) {
  auto s = AtomSpace::full(2, 2);
  const Event e = s.atom(1) | s.atom(3);
  EXPECT_EQ(e.mask(), 0b1010u);
  EXPECT_EQ(Event::from_mask(4, 0b1010), e);
  EXPECT_EQ((~e).count(), 2u);
  EXPECT_EQ(e.atoms(), (std::vector<std::size_t>{1, 3}));
}

TEST(EventOf, Expressions) {
  auto s = AtomSpace::full(2, 2);
  EXPECT_EQ(event_of(s, "H1 & E2"), s.atom(*s.atom_index(0, 1)));
  EXPECT_EQ(event_of(s, "~H1"), s.row(1));
  EXPECT_EQ(event_of(s, "H1 + E1").count(), 3u);
  EXPECT_EQ(event_of(s, "Omega"), s.omega());
  EXPECT_TRUE(event_of(s, "empty").empty());
  EXPECT_EQ(event_of(s, "~(H1 + E1)"), s.atom(3));
  EXPECT_EQ(event_of(s, "A & E1", {{"A", s.row(0)}}), s.atom(0));
}

TEST(EventOf, Errors) {
  auto s = AtomSpace::full(2, 2);
  EXPECT_EQ(code_of([&] { event_of(s, "H3"); }), ErrorCode::BadIndex);
  EXPECT_EQ(code_of([&] { event_of(s, "E0"); }), ErrorCode::BadIndex);
  EXPECT_EQ(code_of([&] { event_of(s, "Z"); }), ErrorCode::BadIndex);
  EXPECT_EQ(code_of([&] { event_of(s, "H1 &"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { event_of(s, "(H1"); }), ErrorCode::ParseError);
}

TEST(Subalgebra, FromRows) {
  auto s = AtomSpace::full(3, 2);
  auto sub = Subalgebra::from_rows(s, {{0, 1}, {2}});
  EXPECT_EQ(sub.size(), 2u);
  EXPECT_TRUE(sub.contains(s.row(0) | s.row(1)));
  EXPECT_FALSE(sub.contains(s.row(0)));
  EXPECT_TRUE(sub.contains(s.omega()));
  EXPECT_TRUE(sub.contains(s.none()));
  EXPECT_EQ(sub.blocks_inside(s.row(2) | s.row(0)), (std::vector<std::size_t>{1}));
  EXPECT_EQ(sub.blocks_meeting(s.row(2) | s.row(0)), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(code_of([&] { Subalgebra(s, {s.row(0), s.row(0) | s.row(1), s.row(2)}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] { Subalgebra(s, {s.row(0), s.row(1)}); }), ErrorCode::InvalidInput);
}

TEST(Subalgebra, PartitionsAreCountedByBellNumbers) {
  auto s = AtomSpace::full(4, 1);
  auto parts = finite_partitions(s, Subalgebra::finest(s));
  EXPECT_EQ(parts.size(), 15u);
  EXPECT_EQ(parts.front().size(), 4u);
  auto three = finite_partitions(AtomSpace::full(3, 2), Subalgebra::from_rows(AtomSpace::full(3, 2), {{0}, {1}, {2}}));
  EXPECT_EQ(three.size(), 5u);
}

TEST(GnImplies, Order) {
  auto s = AtomSpace::full(2, 2);
  const Event e1 = s.column(0), h1 = s.row(0), om = s.omega();
  EXPECT_TRUE(gn_implies(e1, om, e1 | h1, om));
  EXPECT_FALSE(gn_implies(e1 & h1, h1, e1, om));
  EXPECT_TRUE(gn_implies(e1, om, e1, om));
  EXPECT_EQ(code_of([&] { gn_implies(e1, s.none(), e1, om); }), ErrorCode::EmptyConditioning);
}

TEST(ParseRational, FractionsAndDecimals) {
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational(" -2 "), Rational(-2));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-.5"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("3."), Rational(3));
  for (const char* bad : {"", ".", "1e-3", "1/0", "1/2/3", "0.5/2", "x"})
    EXPECT_THROW(parse_rational(bad), Error) << bad;
}
