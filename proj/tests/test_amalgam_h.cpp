#include <doctest.h>

#include <map>
#include <set>

#include "knitord/amalgam_h.hpp"
#include "knitord/order.hpp"
#include "knitord/verifier.hpp"
#include "knitord/words.hpp"

using namespace knitord;

namespace {

Word W(std::string_view text) { return parse_word(text, "yz"); }

HNormalForm NF(std::string_view text) { return h_normalize(W(text)); }

}  // namespace

TEST_CASE("h_normalize examples") {
  CHECK(h_show(NF("yyy")) == "Δ^1");
  CHECK(h_show(NF("yy")) == "Y Δ^1");
  CHECK(h_show(NF("yZ")) == "yZ Δ^0");
  CHECK(h_show(NF("zzzYYY")) == "Δ^0");
  CHECK(h_show(NF("")) == "Δ^0");
  CHECK(NF("zzzYYY").is_identity());
  CHECK(NF("yyyZZZ").is_identity());

  // y^2 = y^{-1} Delta, and Delta is central
  HNormalForm yy = NF("yy");
  REQUIRE(yy.syllables.size() == 1);
  CHECK(yy.syllables[0] == HSyllable{'y', -1});
  CHECK(yy.delta_exp == 1);
  CHECK(h_mul(NF("yyy"), NF("z")) == h_mul(NF("z"), NF("yyy")));
}

TEST_CASE("h_push") {
  HNormalForm p;
  p = h_push(p, {'y', 1});
  CHECK(p == NF("y"));
  p = h_push(p, {'y', 1});  // same gen, same sign: fold into Delta
  CHECK(p == NF("yy"));
  p = h_push(p, {'y', 1});
  CHECK(p == NF("yyy"));
  CHECK(h_push(NF("yz"), {'z', -1}) == NF("y"));
  CHECK_THROWS_AS(h_push(HNormalForm{}, {'q', 1}), std::invalid_argument);
}

TEST_CASE("h_mul, h_inv on the ball") {
  auto words = enumerate_ball("yz", 4);
  for (const auto& u : words) {
    HNormalForm p = h_normalize(u);
    CHECK(h_mul(p, h_inv(p)).is_identity());
    CHECK(h_inv(h_inv(p)) == p);
    // round trips
    CHECK(h_normalize(h_serialize_word(p)) == p);
    CHECK(h_parse(h_show(p)) == p);
    for (const auto& v : words) {
      HNormalForm q = h_normalize(v);
      CHECK(h_mul(p, q) == h_normalize(concat(u, v)));
      CHECK(h_exp(h_mul(p, q)) == h_exp(p) + h_exp(q));  // homomorphism
    }
  }
}

TEST_CASE("h_mul can drop a Delta when syllables merge") {
  // both class B, ending/starting with y^{-1}: the merged y^{-1} y^{-1}
  // refolds as y Delta^{-1}
  HNormalForm p = NF("YZYyyy");  // Y Z Y, Delta^1
  REQUIRE(h_cone_class(p) == HConeClass::B);
  REQUIRE(p.delta_exp == 1);
  HNormalForm q = NF("yyyYZY");
  REQUIRE(q.delta_exp == 1);
  HNormalForm r = h_mul(p, q);
  CHECK(r.delta_exp == p.delta_exp + q.delta_exp - 1);
  CHECK(h_exp(r) == 0);
}

TEST_CASE("exp and cone classes") {
  CHECK(h_exp(NF("y")) == 1);
  CHECK(h_exp(NF("yyy")) == 3);
  CHECK(h_exp(NF("yZ")) == 0);
  CHECK(h_exp(NF("YY")) == -2);

  CHECK(h_cone_class(NF("y")) == HConeClass::A);
  CHECK(h_cone_class(NF("yzY")) == HConeClass::A);
  CHECK(h_cone_class(NF("yyy")) == HConeClass::A);  // exp = 3
  CHECK(h_cone_class(NF("YZYyyy")) == HConeClass::B);  // exp = 0, Delta^1
  CHECK(h_cone_class(NF("yZ")) == HConeClass::C);
  CHECK(h_cone_class(NF("")) == HConeClass::Identity);
  CHECK(h_cone_class(NF("zY")) == HConeClass::NotPositive);
  CHECK(h_cone_class(NF("Y")) == HConeClass::NotPositive);

  CHECK(h_sign(NF("yZ")) == ConeSign::Positive);
  CHECK(h_sign(NF("zY")) == ConeSign::Negative);
  CHECK(h_sign(NF("")) == ConeSign::Identity);
}

TEST_CASE("class C forms start with y and end with z^{-1}") {
  for (const auto& w : enumerate_ball("yz", 6)) {
    HNormalForm p = h_normalize(w);
    if (h_cone_class(p) != HConeClass::C) continue;
    REQUIRE(!p.syllables.empty());
    CHECK(p.syllables.size() % 2 == 0);  // exp 0 with alternating +-1 syllables
    CHECK(p.syllables.front().gen == 'y');
    CHECK(p.delta_exp == 0);
  }
}

TEST_CASE("trichotomy on the radius-7 ball") {
  for (const auto& w : enumerate_ball("yz", 7)) {
    HNormalForm p = h_normalize(w);
    ConeSign s = h_sign(p);
    ConeSign si = h_sign(h_inv(p));
    if (p.is_identity()) {
      CHECK(s == ConeSign::Identity);
    } else if (s == ConeSign::Positive) {
      CHECK(si == ConeSign::Negative);
    } else {
      CHECK(s == ConeSign::Negative);
      CHECK(si == ConeSign::Positive);
    }
  }
}

TEST_CASE("semigroup closure with per-case counts, radius 4") {
  GroupHandle h = make_h_handle();
  PairTag tag = [](const Element& p, const Element& q) -> std::string {
    HConeClass cp = h_cone_class(std::any_cast<const HNormalForm&>(p));
    HConeClass cq = h_cone_class(std::any_cast<const HNormalForm&>(q));
    if (cp == HConeClass::A) return "A.any";
    return std::string(to_string(cp)) + "." + to_string(cq);
  };
  auto rep = verify_semigroup(h, 4, {}, tag);
  CHECK(rep.passed());
  CHECK(rep.checked == 3249);
  for (const char* key : {"A.any", "B.A", "B.B", "B.C", "C.A", "C.B", "C.C"}) {
    INFO(key);
    CHECK(rep.stats.count(key) == 1);
    CHECK(rep.stats[key] > 0);
  }
}

TEST_CASE("h_parse grammar") {
  CHECK(h_parse("yZ Δ^0") == NF("yZ"));
  CHECK(h_parse("yZ D^-2") == h_mul(NF("yZ"), NF("YYYYYY")));
  CHECK(h_parse("Δ^1") == NF("yyy"));
  CHECK(h_parse("zY") == NF("zY"));
  CHECK(h_parse("") == HNormalForm{});
  CHECK_THROWS_AS(h_parse("yq"), ParseError);
}

TEST_CASE("h handle wiring") {
  GroupHandle h = make_h_handle();
  CHECK(h.order_kind == OrderKind::TotalLeft);
  CHECK(h.alphabet == "yz");
  CHECK(h.is_identity(h.identity));
  Element e = h.normalize(W("yy"));
  CHECK(h.show(e) == "Y Δ^1");
  CHECK(h.cone_sign(e) == ConeSign::Positive);
  CHECK(compare_left(h, h.identity, e) == Ordering::Less);
  CHECK(elements_equal(h, h.normalize(W("yyy")), h.normalize(W("zzz"))));
}
