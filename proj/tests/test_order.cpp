#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "knitord/instances.hpp"
#include "knitord/order.hpp"

using namespace knitord;

namespace {

using Vec = std::vector<std::int64_t>;

Element ve(std::initializer_list<std::int64_t> v) { return Vec(v); }

// Direct evaluation of the lexicographic cone clause, independent of the
// handle's implementation.
ConeSign lex_sign_oracle(const Vec& v) {
  for (auto c : v) {
    if (c > 0) return ConeSign::Positive;
    if (c < 0) return ConeSign::Negative;
  }
  return ConeSign::Identity;
}

}  // namespace

TEST_CASE("compare_left on Z") {
  GroupHandle z = build_z_lex(1);
  CHECK(compare_left(z, ve({2}), ve({5})) == Ordering::Less);
  CHECK(compare_left(z, ve({5}), ve({2})) == Ordering::Greater);
  CHECK(compare_left(z, ve({3}), ve({3})) == Ordering::Equal);
  CHECK(compare_left(z, ve({0}), ve({-1})) == Ordering::Greater);
}

TEST_CASE("z-lex cone matches the clause oracle") {
  GroupHandle z3 = build_z_lex(3);
  for (std::int64_t a : {-2, 0, 1})
    for (std::int64_t b : {-1, 0, 3})
      for (std::int64_t c : {-5, 0, 2}) {
        Vec v{a, b, c};
        CHECK(z3.cone_sign(v) == lex_sign_oracle(v));
      }
  CHECK(z3.cone_sign(ve({0, 0, 0})) == ConeSign::Identity);
  CHECK(z3.cone_sign(ve({0, 1, -5})) == ConeSign::Positive);
}

TEST_CASE("partial bi-order comparison can be Incomparable") {
  auto inst = find_instance("thm2-direct");
  REQUIRE(inst);
  const GroupHandle& g = inst->group;
  CHECK(g.order_kind == OrderKind::PartialBi);
  // (1, -1) vs (0, 0): neither difference lies in the lifted cone.
  Element a = inst->parse("(u;V)");
  Element b = inst->parse("(;)");
  CHECK(compare_left(g, a, b) == Ordering::Incomparable);
  CHECK(compare_left(g, b, a) == Ordering::Incomparable);
  CHECK(compare_left(g, b, inst->parse("(u;v)")) == Ordering::Less);
}

TEST_CASE("comparison functions reject the wrong order kind") {
  GroupHandle left = make_z_lex_handle(1, "u", OrderKind::TotalLeft, "zl");
  GroupHandle right = make_z_lex_handle(1, "u", OrderKind::TotalRight, "zr");
  CHECK_THROWS_AS((void)compare_left(right, ve({0}), ve({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)compare_right(left, ve({0}), ve({1})),
                  std::invalid_argument);
  CHECK(compare_right(right, ve({0}), ve({1})) == Ordering::Less);
}

TEST_CASE("elements_equal and normalized_ball") {
  GroupHandle z2 = build_z_lex(2);
  CHECK(elements_equal(z2, ve({1, 2}), ve({1, 2})));
  CHECK(!elements_equal(z2, ve({1, 2}), ve({1, 3})));

  // |ball| in Z^2 of radius r is the l1 ball: 2r^2 + 2r + 1.
  for (int r = 0; r <= 3; ++r) {
    auto ball = normalized_ball(z2, r);
    CHECK(ball.size() == static_cast<std::size_t>(2 * r * r + 2 * r + 1));
    std::set<std::string> seen;
    for (const auto& e : ball) {
      CHECK(seen.insert(z2.show(e.elem)).second);
      CHECK(elements_equal(z2, z2.normalize(e.word), e.elem));
      CHECK(e.word.size() <= static_cast<std::size_t>(r));
    }
  }
  // first entry is the identity with the empty witness
  auto ball = normalized_ball(z2, 2);
  CHECK(ball[0].word.empty());
  CHECK(z2.is_identity(ball[0].elem));
}

TEST_CASE("convexity_violation") {
  GroupHandle z2 = build_z_lex(2);
  std::vector<Element> ball;
  for (const auto& e : normalized_ball(z2, 3)) ball.push_back(e.elem);

  auto second_axis = [](const Element& e) {
    return std::any_cast<const Vec&>(e)[0] == 0;
  };
  // {0} x Z is convex under lex
  CHECK(!convexity_violation(z2, second_axis, ball));

  auto first_axis = [](const Element& e) {
    return std::any_cast<const Vec&>(e)[1] == 0;
  };
  // Z x {0} is not: (0,0) < (0,1) < (1,0) with the middle outside
  auto w = convexity_violation(z2, first_axis, ball);
  REQUIRE(w);
  CHECK(first_axis(w->x));
  CHECK(first_axis(w->z));
  CHECK(!first_axis(w->y));
  CHECK(compare_left(z2, w->x, w->y) == Ordering::Less);
  CHECK(compare_left(z2, w->y, w->z) == Ordering::Less);

  auto everything = [](const Element&) { return true; };
  CHECK(!convexity_violation(z2, everything, ball));
}
