#pragma once

#include <any>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "knitord/words.hpp"

namespace knitord {

// Sign of an element relative to a positive cone. Incomparable may occur only
// for partial (bi-)orders; total left/right orders never return it.
enum class ConeSign { Positive, Negative, Identity, Incomparable };

enum class Ordering { Less, Greater, Equal, Incomparable };

enum class OrderKind { TotalLeft, TotalRight, PartialBi };

const char* to_string(ConeSign s);
const char* to_string(Ordering o);

// Type-erased group element. Each concrete group decides the payload type.
using Element = std::any;

// An immutable bundle of pure functions describing a group together with a
// positive cone. All operations must be deterministic and safe to call
// concurrently.
//
// Right orders use the convention g < h iff h g^{-1} in Q, so that a cone Q
// closed under the group operation yields a right-invariant order.
struct GroupHandle {
  std::string name;
  std::string alphabet;  // positive generator letters, fixed order
  OrderKind order_kind = OrderKind::TotalLeft;
  Element identity;
  std::function<Element(const Element&, const Element&)> multiply;
  std::function<Element(const Element&)> invert;
  std::function<Element(const Word&)> normalize;
  std::function<bool(const Element&)> is_identity;
  std::function<ConeSign(const Element&)> cone_sign;
  std::function<std::string(const Element&)> show;
  // Optional canonical key, injective on group elements. Used to deduplicate
  // balls and to short-circuit equality; semantics always agree with
  // is_identity(x^{-1} y).
  std::function<std::string(const Element&)> key;
};

bool elements_equal(const GroupHandle& g, const Element& x, const Element& y);

// g < h iff cone_sign(g^{-1} h) = Positive. Rejects TotalRight handles.
Ordering compare_left(const GroupHandle& g, const Element& a, const Element& b);

// g < h iff cone_sign(h g^{-1}) = Positive. Rejects non-right-order handles.
Ordering compare_right(const GroupHandle& g, const Element& a, const Element& b);

struct BallEntry {
  Word word;  // a shortest enumerated word producing the element
  Element elem;
};

// Normalizes every freely reduced word of length <= radius and keeps the
// first occurrence of each distinct group element, in enumeration order.
std::vector<BallEntry> normalized_ball(const GroupHandle& g, int radius);

struct ConvexityWitness {
  Element x, y, z;
};

// Searches the ball for x < y < z with member(x), member(z), !member(y).
// Scans in enumeration order and returns the first violation found.
std::optional<ConvexityWitness> convexity_violation(
    const GroupHandle& g, const std::function<bool(const Element&)>& member,
    const std::vector<Element>& ball);

}  // namespace knitord
