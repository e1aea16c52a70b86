#include "knitord/instances.hpp"

#include <cstdint>
#include <stdexcept>

#include "knitord/amalgam_h.hpp"

namespace knitord {

namespace {

using Vec = std::vector<std::int64_t>;

ConeSign lex_sign(const Vec& v) {
  for (auto c : v) {
    if (c > 0) return ConeSign::Positive;
    if (c < 0) return ConeSign::Negative;
  }
  return ConeSign::Identity;
}

}  // namespace

GroupHandle make_z_lex_handle(int n, std::string alphabet, OrderKind kind,
                              std::string name) {
  if (n < 1) throw std::invalid_argument("make_z_lex_handle: rank must be >= 1");
  if (static_cast<int>(alphabet.size()) != n) {
    throw std::invalid_argument("make_z_lex_handle: need one letter per rank");
  }
  GroupHandle g;
  g.name = std::move(name);
  g.alphabet = std::move(alphabet);
  g.order_kind = kind;
  g.identity = Vec(n, 0);
  g.multiply = [](const Element& x, const Element& y) -> Element {
    const auto& a = std::any_cast<const Vec&>(x);
    const auto& b = std::any_cast<const Vec&>(y);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
  };
  g.invert = [](const Element& x) -> Element {
    Vec out = std::any_cast<const Vec&>(x);
    for (auto& c : out) c = -c;
    return out;
  };
  g.normalize = [alpha = g.alphabet, n](const Word& w) -> Element {
    Vec out(n, 0);
    for (const auto& l : w) {
      auto pos = alpha.find(l.gen);
      if (pos == std::string::npos) {
        throw std::invalid_argument(std::string("letter '") + l.gen +
                                    "' outside alphabet " + alpha);
      }
      out[pos] += l.sign;
    }
    return out;
  };
  g.is_identity = [](const Element& x) {
    for (auto c : std::any_cast<const Vec&>(x)) {
      if (c != 0) return false;
    }
    return true;
  };
  g.cone_sign = [](const Element& x) {
    return lex_sign(std::any_cast<const Vec&>(x));
  };
  g.show = [alpha = g.alphabet](const Element& x) {
    // canonical word form: generator repeated |count| times, coordinate order
    const auto& v = std::any_cast<const Vec&>(x);
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      char c = v[i] >= 0 ? alpha[i]
                         : static_cast<char>(std::toupper(
                               static_cast<unsigned char>(alpha[i])));
      for (std::int64_t j = 0; j < (v[i] >= 0 ? v[i] : -v[i]); ++j) {
        s.push_back(c);
      }
    }
    return s;
  };
  g.key = g.show;
  return g;
}

GroupHandle build_z_lex(int n) {
  static const std::string letters = "uvwx";
  if (n < 1 || n > static_cast<int>(letters.size())) {
    throw std::invalid_argument("build_z_lex: rank must be in 1..4");
  }
  return make_z_lex_handle(n, letters.substr(0, n), OrderKind::PartialBi,
                           "z-lex(" + std::to_string(n) + ")");
}

namespace {

MatchedPair paper_pair(std::size_t step_limit,
                       std::function<int(const HNormalForm&)> flip_parity,
                       std::string name) {
  MatchedPair mp;
  mp.name = std::move(name);
  mp.H = make_h_handle();
  mp.K = make_b3_handle(step_limit);
  mp.alpha = [](const Element&, const Element& h) -> Element { return h; };
  mp.beta = [step_limit, parity = std::move(flip_parity)](
                const Element& h, const Element& k) -> Element {
    const auto& nf = std::any_cast<const HNormalForm&>(h);
    const auto& braid = std::any_cast<const B3Element&>(k);
    if (parity(nf) % 2 == 0) return braid;
    return b3_element(flip(braid.reduced), step_limit);
  };
  return mp;
}

}  // namespace

MatchedPair build_paper_example(std::size_t step_limit) {
  return paper_pair(
      step_limit,
      [](const HNormalForm& nf) {
        return static_cast<int>(((h_exp(nf) % 2) + 2) % 2);
      },
      "g-paper");
}

MatchedPair build_paper_example_bad_beta(std::size_t step_limit) {
  return paper_pair(
      step_limit,
      [](const HNormalForm& nf) {
        int y_syllables = 0;
        for (const auto& s : nf.syllables) {
          if (s.gen == 'y') ++y_syllables;
        }
        return y_syllables % 2;
      },
      "g-paper-badbeta");
}

MatchedPair build_thm2_direct() {
  MatchedPair mp;
  mp.name = "thm2-direct";
  mp.H = make_z_lex_handle(1, "u", OrderKind::PartialBi, "z-lex(1)");
  mp.K = make_z_lex_handle(1, "v", OrderKind::PartialBi, "z-lex(1)");
  mp.alpha = [](const Element&, const Element& h) -> Element { return h; };
  mp.beta = [](const Element&, const Element& k) -> Element { return k; };
  return mp;
}

MatchedPair build_thm2_shear() {
  MatchedPair mp;
  mp.name = "thm2-shear";
  mp.H = make_z_lex_handle(2, "uv", OrderKind::PartialBi, "z-lex(2)");
  mp.K = make_z_lex_handle(1, "w", OrderKind::PartialBi, "z-lex(1)");
  mp.alpha = [](const Element& k, const Element& h) -> Element {
    const auto kk = std::any_cast<const Vec&>(k)[0];
    Vec out = std::any_cast<const Vec&>(h);
    out[1] += kk * out[0];
    return out;
  };
  mp.beta = [](const Element&, const Element& k) -> Element { return k; };
  return mp;
}

namespace {

std::function<Element(std::string_view)> word_parser(GroupHandle g) {
  return [g = std::move(g)](std::string_view text) -> Element {
    return g.normalize(parse_word(text, g.alphabet));
  };
}

std::function<Element(std::string_view)> pair_parser(
    MatchedPair mp, GroupHandle product,
    std::function<Element(std::string_view)> parse_h) {
  return [mp = std::move(mp), product = std::move(product),
          parse_h = std::move(parse_h)](std::string_view text) -> Element {
    if (!text.empty() && text.front() == '(') {
      if (text.back() != ')') {
        throw ParseError("expected ')' closing the (h;k) pair",
                         text.size() - 1);
      }
      auto body = text.substr(1, text.size() - 2);
      auto semi = body.find(';');
      if (semi == std::string_view::npos) {
        throw ParseError("expected ';' separating the (h;k) pair", 1);
      }
      Element h = parse_h(body.substr(0, semi));
      Element k = mp.K.normalize(parse_word(body.substr(semi + 1),
                                            mp.K.alphabet));
      return ZSElement{std::move(h), std::move(k)};
    }
    return product.normalize(parse_word(text, product.alphabet));
  };
}

Instance pair_instance(MatchedPair mp, GroupHandle product) {
  std::function<Element(std::string_view)> parse_h;
  if (mp.H.name == "h-amalgam") {
    parse_h = [](std::string_view t) -> Element { return h_parse(t); };
  } else {
    auto h = mp.H;
    parse_h = [h](std::string_view t) -> Element {
      return h.normalize(parse_word(t, h.alphabet));
    };
  }
  Instance inst;
  inst.id = mp.name;
  inst.group = product;
  inst.parse = pair_parser(mp, product, std::move(parse_h));
  inst.pair = std::move(mp);
  return inst;
}

}  // namespace

std::optional<Instance> find_instance(std::string_view id,
                                      std::size_t step_limit) {
  std::string name(id);
  if (name == "h-amalgam") {
    Instance inst;
    inst.id = name;
    inst.group = make_h_handle();
    inst.parse = [](std::string_view t) -> Element { return h_parse(t); };
    return inst;
  }
  if (name == "b3") {
    Instance inst;
    inst.id = name;
    inst.group = make_b3_handle(step_limit);
    inst.parse = word_parser(inst.group);
    return inst;
  }
  if (name == "b3-corrupt") {
    Instance inst;
    inst.id = name;
    inst.group = make_b3_corrupted_handle(step_limit);
    inst.parse = word_parser(inst.group);
    return inst;
  }
  if (name == "g-paper") {
    auto mp = build_paper_example(step_limit);
    return pair_instance(mp, make_left_lift_handle(mp));
  }
  if (name == "g-paper-badbeta") {
    auto mp = build_paper_example_bad_beta(step_limit);
    return pair_instance(mp, make_left_lift_handle(mp));
  }
  if (name == "thm2-direct") {
    auto mp = build_thm2_direct();
    return pair_instance(mp, make_bi_lift_handle(mp));
  }
  if (name == "thm2-shear") {
    auto mp = build_thm2_shear();
    return pair_instance(mp, make_bi_lift_handle(mp));
  }
  if (name.starts_with("z-lex(") && name.ends_with(")")) {
    int n = 0;
    try {
      n = std::stoi(name.substr(6, name.size() - 7));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (n < 1 || n > 4) return std::nullopt;
    Instance inst;
    inst.id = name;
    inst.group = build_z_lex(n);
    inst.parse = word_parser(inst.group);
    return inst;
  }
  return std::nullopt;
}

std::vector<std::string> instance_ids() {
  return {"h-amalgam",   "b3",         "g-paper",        "z-lex(1)",
          "z-lex(2)",    "z-lex(3)",   "z-lex(4)",       "thm2-direct",
          "thm2-shear",  "b3-corrupt", "g-paper-badbeta"};
}

}  // namespace knitord
