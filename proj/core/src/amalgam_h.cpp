#include "knitord/amalgam_h.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace knitord {

const char* to_string(HConeClass c) {
  switch (c) {
    case HConeClass::A: return "A";
    case HConeClass::B: return "B";
    case HConeClass::C: return "C";
    case HConeClass::Identity: return "Identity";
    case HConeClass::NotPositive: return "NotPositive";
  }
  return "?";
}

HNormalForm h_push(HNormalForm nf, SignedLetter letter) {
  if (letter.gen != 'y' && letter.gen != 'z') {
    throw std::invalid_argument("h_push: generator must be y or z");
  }
  if (!nf.syllables.empty() && nf.syllables.back().gen == letter.gen) {
    HSyllable& back = nf.syllables.back();
    if (back.exp == letter.sign) {
      // g^e g^e = g^{-e} Delta^e
      back.exp = -letter.sign;
      nf.delta_exp += letter.sign;
    } else {
      nf.syllables.pop_back();
    }
  } else {
    nf.syllables.push_back({letter.gen, letter.sign});
  }
  return nf;
}

HNormalForm h_normalize(const Word& w) {
  HNormalForm nf;
  for (const auto& l : w) nf = h_push(std::move(nf), l);
  return nf;
}

HNormalForm h_mul(const HNormalForm& p, const HNormalForm& q) {
  HNormalForm out = p;
  for (const auto& s : q.syllables) out = h_push(std::move(out), {s.gen, s.exp});
  out.delta_exp += q.delta_exp;  // Delta is central
  return out;
}

HNormalForm h_inv(const HNormalForm& p) {
  HNormalForm out;
  out.syllables.reserve(p.syllables.size());
  for (auto it = p.syllables.rbegin(); it != p.syllables.rend(); ++it) {
    out.syllables.push_back({it->gen, -it->exp});
  }
  out.delta_exp = -p.delta_exp;
  return out;
}

std::int64_t h_exp(const HNormalForm& p) {
  std::int64_t e = 3 * p.delta_exp;
  for (const auto& s : p.syllables) e += s.exp;
  return e;
}

HConeClass h_cone_class(const HNormalForm& p) {
  if (p.is_identity()) return HConeClass::Identity;
  const std::int64_t e = h_exp(p);
  if (e > 0) return HConeClass::A;
  if (e < 0) return HConeClass::NotPositive;
  if (p.delta_exp > 0) return HConeClass::B;
  if (p.delta_exp < 0) return HConeClass::NotPositive;
  return p.syllables.front().gen == 'y' ? HConeClass::C
                                        : HConeClass::NotPositive;
}

static bool h_positive(const HNormalForm& p) {
  HConeClass c = h_cone_class(p);
  return c == HConeClass::A || c == HConeClass::B || c == HConeClass::C;
}

ConeSign h_sign(const HNormalForm& p) {
  if (p.is_identity()) return ConeSign::Identity;
  if (h_positive(p)) return ConeSign::Positive;
  if (h_positive(h_inv(p))) return ConeSign::Negative;
  return ConeSign::Incomparable;  // unreachable: the cone partitions H
}

std::string h_show(const HNormalForm& p) {
  std::string s;
  for (const auto& syl : p.syllables) {
    s.push_back(syl.exp > 0
                    ? syl.gen
                    : static_cast<char>(std::toupper(
                          static_cast<unsigned char>(syl.gen))));
  }
  if (!s.empty()) s.push_back(' ');
  s += "Δ^" + std::to_string(p.delta_exp);
  return s;
}

Word h_serialize_word(const HNormalForm& p) {
  Word w;
  for (const auto& s : p.syllables) w.push_back({s.gen, s.exp});
  const int sign = p.delta_exp >= 0 ? +1 : -1;
  for (std::int64_t i = 0; i < (p.delta_exp >= 0 ? p.delta_exp : -p.delta_exp);
       ++i) {
    for (int j = 0; j < 3; ++j) w.push_back({'y', sign});
  }
  return w;
}

HNormalForm h_parse(std::string_view text) {
  std::int64_t delta = 0;
  std::size_t cut = text.size();
  std::size_t mark = text.find("Δ");
  std::size_t mark_len = 2;  // UTF-8 bytes of Delta
  if (mark == std::string_view::npos) {
    mark = text.find('D');
    mark_len = 1;
  }
  if (mark != std::string_view::npos) {
    std::string_view tail = text.substr(mark + mark_len);
    if (tail.empty() || tail[0] != '^') {
      throw ParseError("expected '^<int>' after Δ", mark);
    }
    delta = std::strtoll(std::string(tail.substr(1)).c_str(), nullptr, 10);
    cut = mark;
  }
  HNormalForm nf = h_normalize(parse_word(text.substr(0, cut), "yz"));
  nf.delta_exp += delta;
  return nf;
}

GroupHandle make_h_handle() {
  GroupHandle g;
  g.name = "h-amalgam";
  g.alphabet = "yz";
  g.order_kind = OrderKind::TotalLeft;
  g.identity = HNormalForm{};
  g.multiply = [](const Element& x, const Element& y) -> Element {
    return h_mul(std::any_cast<const HNormalForm&>(x),
                 std::any_cast<const HNormalForm&>(y));
  };
  g.invert = [](const Element& x) -> Element {
    return h_inv(std::any_cast<const HNormalForm&>(x));
  };
  g.normalize = [](const Word& w) -> Element { return h_normalize(w); };
  g.is_identity = [](const Element& x) {
    return std::any_cast<const HNormalForm&>(x).is_identity();
  };
  g.cone_sign = [](const Element& x) {
    return h_sign(std::any_cast<const HNormalForm&>(x));
  };
  g.show = [](const Element& x) {
    return h_show(std::any_cast<const HNormalForm&>(x));
  };
  g.key = [](const Element& x) {
    return h_show(std::any_cast<const HNormalForm&>(x));
  };
  return g;
}

}  // namespace knitord
