#include "knitord/order.hpp"

#include <stdexcept>
#include <unordered_set>

namespace knitord {

const char* to_string(ConeSign s) {
  switch (s) {
    case ConeSign::Positive: return "Positive";
    case ConeSign::Negative: return "Negative";
    case ConeSign::Identity: return "Identity";
    case ConeSign::Incomparable: return "Incomparable";
  }
  return "?";
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Greater: return "Greater";
    case Ordering::Equal: return "Equal";
    case Ordering::Incomparable: return "Incomparable";
  }
  return "?";
}

bool elements_equal(const GroupHandle& g, const Element& x, const Element& y) {
  if (g.key) return g.key(x) == g.key(y);
  return g.is_identity(g.multiply(g.invert(x), y));
}

static ConeSign sign_of_quotient_left(const GroupHandle& g, const Element& a,
                                      const Element& b) {
  return g.cone_sign(g.multiply(g.invert(a), b));
}

Ordering compare_left(const GroupHandle& g, const Element& a, const Element& b) {
  if (g.order_kind == OrderKind::TotalRight) {
    throw std::invalid_argument("compare_left: handle '" + g.name +
                                "' carries a right order; use compare_right");
  }
  switch (sign_of_quotient_left(g, a, b)) {
    case ConeSign::Positive: return Ordering::Less;
    case ConeSign::Negative: return Ordering::Greater;
    case ConeSign::Identity: return Ordering::Equal;
    case ConeSign::Incomparable: return Ordering::Incomparable;
  }
  return Ordering::Incomparable;
}

Ordering compare_right(const GroupHandle& g, const Element& a, const Element& b) {
  if (g.order_kind != OrderKind::TotalRight) {
    throw std::invalid_argument("compare_right: handle '" + g.name +
                                "' does not carry a right order");
  }
  switch (g.cone_sign(g.multiply(b, g.invert(a)))) {
    case ConeSign::Positive: return Ordering::Less;
    case ConeSign::Negative: return Ordering::Greater;
    case ConeSign::Identity: return Ordering::Equal;
    case ConeSign::Incomparable: return Ordering::Incomparable;
  }
  return Ordering::Incomparable;
}

std::vector<BallEntry> normalized_ball(const GroupHandle& g, int radius) {
  std::vector<BallEntry> out;
  auto words = enumerate_ball(g.alphabet, radius);
  if (g.key) {
    std::unordered_set<std::string> seen;
    for (auto& w : words) {
      Element e = g.normalize(w);
      if (seen.insert(g.key(e)).second) {
        out.push_back({std::move(w), std::move(e)});
      }
    }
  } else {
    for (auto& w : words) {
      Element e = g.normalize(w);
      bool dup = false;
      for (const auto& entry : out) {
        if (elements_equal(g, entry.elem, e)) {
          dup = true;
          break;
        }
      }
      if (!dup) out.push_back({std::move(w), std::move(e)});
    }
  }
  return out;
}

std::optional<ConvexityWitness> convexity_violation(
    const GroupHandle& g, const std::function<bool(const Element&)>& member,
    const std::vector<Element>& ball) {
  auto less = [&](const Element& a, const Element& b) {
    Ordering o = g.order_kind == OrderKind::TotalRight ? compare_right(g, a, b)
                                                       : compare_left(g, a, b);
    return o == Ordering::Less;
  };
  for (const auto& y : ball) {
    if (member(y)) continue;
    for (const auto& x : ball) {
      if (!member(x) || !less(x, y)) continue;
      for (const auto& z : ball) {
        if (member(z) && less(y, z)) {
          return ConvexityWitness{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace knitord
