#include "knitord/zappa_szep.hpp"

#include <memory>
#include <stdexcept>
#include <unordered_set>

#include "knitord/detail/parallel.hpp"

namespace knitord {

ZSElement zs_mul(const MatchedPair& mp, const ZSElement& g1, const ZSElement& g2) {
  return {mp.H.multiply(g1.h, mp.alpha(g1.k, g2.h)),
          mp.K.multiply(mp.beta(g2.h, g1.k), g2.k)};
}

ZSElement zs_inv(const MatchedPair& mp, const ZSElement& g) {
  Element hi = mp.H.invert(g.h);
  Element ki = mp.K.invert(g.k);
  return {mp.alpha(ki, hi), mp.beta(hi, ki)};
}

bool zs_is_identity(const MatchedPair& mp, const ZSElement& g) {
  return mp.H.is_identity(g.h) && mp.K.is_identity(g.k);
}

std::string zs_show(const MatchedPair& mp, const ZSElement& g) {
  return "(" + mp.H.show(g.h) + ";" + mp.K.show(g.k) + ")";
}

namespace {

bool positive(const GroupHandle& g, const Element& e) {
  return g.cone_sign(e) == ConeSign::Positive;
}

bool in_left_cone(const MatchedPair& mp, const ZSElement& g) {
  if (positive(mp.H, g.h)) return true;
  return mp.H.is_identity(g.h) && positive(mp.K, g.k);
}

bool in_right_cone(const MatchedPair& mp, const ZSElement& g) {
  if (positive(mp.K, g.k)) return true;
  return mp.K.is_identity(g.k) && positive(mp.H, g.h);
}

bool in_bi_cone(const MatchedPair& mp, const ZSElement& g) {
  const bool h1 = mp.H.is_identity(g.h);
  const bool k1 = mp.K.is_identity(g.k);
  const bool hp = positive(mp.H, g.h);
  const bool kp = positive(mp.K, g.k);
  return (hp && kp) || (h1 && kp) || (k1 && hp);
}

template <class InCone>
ConeSign lift_sign(const MatchedPair& mp, const ZSElement& g, InCone in_cone) {
  if (zs_is_identity(mp, g)) return ConeSign::Identity;
  if (in_cone(mp, g)) return ConeSign::Positive;
  if (in_cone(mp, zs_inv(mp, g))) return ConeSign::Negative;
  return ConeSign::Incomparable;
}

}  // namespace

ConeSign left_lift_sign(const MatchedPair& mp, const ZSElement& g) {
  return lift_sign(mp, g, in_left_cone);
}

ConeSign right_lift_sign(const MatchedPair& mp, const ZSElement& g) {
  return lift_sign(mp, g, in_right_cone);
}

ConeSign bi_lift_sign(const MatchedPair& mp, const ZSElement& g) {
  return lift_sign(mp, g, in_bi_cone);
}

GroupHandle make_product_handle(
    const MatchedPair& mp, OrderKind kind,
    std::function<ConeSign(const MatchedPair&, const ZSElement&)> sign) {
  auto p = std::make_shared<MatchedPair>(mp);
  GroupHandle g;
  g.name = mp.name;
  g.alphabet = mp.H.alphabet + mp.K.alphabet;
  g.order_kind = kind;
  g.identity = ZSElement{p->H.identity, p->K.identity};
  g.multiply = [p](const Element& x, const Element& y) -> Element {
    return zs_mul(*p, std::any_cast<const ZSElement&>(x),
                  std::any_cast<const ZSElement&>(y));
  };
  g.invert = [p](const Element& x) -> Element {
    return zs_inv(*p, std::any_cast<const ZSElement&>(x));
  };
  g.normalize = [p](const Word& w) -> Element {
    ZSElement acc{p->H.identity, p->K.identity};
    for (const auto& l : w) {
      ZSElement letter{p->H.identity, p->K.identity};
      if (p->H.alphabet.find(l.gen) != std::string::npos) {
        letter.h = p->H.normalize({l});
      } else if (p->K.alphabet.find(l.gen) != std::string::npos) {
        letter.k = p->K.normalize({l});
      } else {
        throw std::invalid_argument(std::string("letter '") + l.gen +
                                    "' outside product alphabet");
      }
      acc = zs_mul(*p, acc, letter);
    }
    return acc;
  };
  g.is_identity = [p](const Element& x) {
    return zs_is_identity(*p, std::any_cast<const ZSElement&>(x));
  };
  g.cone_sign = [p, sign](const Element& x) {
    return sign(*p, std::any_cast<const ZSElement&>(x));
  };
  g.show = [p](const Element& x) {
    return zs_show(*p, std::any_cast<const ZSElement&>(x));
  };
  if (mp.H.key && mp.K.key) {
    g.key = [p](const Element& x) {
      const auto& e = std::any_cast<const ZSElement&>(x);
      return "(" + p->H.key(e.h) + ";" + p->K.key(e.k) + ")";
    };
  }
  return g;
}

GroupHandle make_left_lift_handle(const MatchedPair& mp) {
  return make_product_handle(mp, OrderKind::TotalLeft, left_lift_sign);
}

GroupHandle make_right_lift_handle(const MatchedPair& mp) {
  return make_product_handle(mp, OrderKind::TotalRight, right_lift_sign);
}

GroupHandle make_bi_lift_handle(const MatchedPair& mp) {
  return make_product_handle(mp, OrderKind::PartialBi, bi_lift_sign);
}

std::vector<BallEntry> component_ball(const MatchedPair& mp, int rH, int rK) {
  auto hs = normalized_ball(mp.H, rH);
  auto ks = normalized_ball(mp.K, rK);
  std::vector<BallEntry> out;
  out.reserve(hs.size() * ks.size());
  // unique hk representation: distinct component pairs are distinct elements
  for (const auto& h : hs) {
    for (const auto& k : ks) {
      out.push_back({concat(h.word, k.word), ZSElement{h.elem, k.elem}});
    }
  }
  return out;
}

namespace {

// K-ball entries extended with the generator letters and their inverses, so
// beta laws are exercised even at rK = 0.
std::vector<BallEntry> ball_with_generators(const GroupHandle& g, int radius) {
  auto ball = normalized_ball(g, radius);
  for (char gen : g.alphabet) {
    for (int sign : {+1, -1}) {
      Word w{{gen, sign}};
      Element e = g.normalize(w);
      bool dup = false;
      for (const auto& entry : ball) {
        if (elements_equal(g, entry.elem, e)) {
          dup = true;
          break;
        }
      }
      if (!dup) ball.push_back({w, e});
    }
  }
  return ball;
}

std::string wshow(const Word& w) { return show_word(w); }

}  // namespace

VerificationReport check_matched_pair(const MatchedPair& mp, int rH, int rK,
                                      const CheckOptions& opts) {
  VerificationReport rep;
  rep.suite = "matched-pair";
  rep.instance = mp.name;
  rep.radii = {rH, rK};

  const auto hs = normalized_ball(mp.H, rH);
  const auto ks = ball_with_generators(mp.K, rK);
  const std::uint64_t nh = hs.size();
  const std::uint64_t nk = ks.size();

  // beta_tab[i][j] = beta_{hs[i]}(ks[j]); alpha_tab[j][i] = alpha_{ks[j]}(hs[i])
  std::vector<std::vector<Element>> beta_tab(nh, std::vector<Element>(nk));
  std::vector<std::vector<Element>> alpha_tab(nk, std::vector<Element>(nh));
  for (std::uint64_t i = 0; i < nh; ++i) {
    for (std::uint64_t j = 0; j < nk; ++j) {
      beta_tab[i][j] = mp.beta(hs[i].elem, ks[j].elem);
      alpha_tab[j][i] = mp.alpha(ks[j].elem, hs[i].elem);
    }
  }

  auto violation = [&](const char* law, std::vector<std::string> witness,
                       const Element& lhs, const Element& rhs,
                       const GroupHandle& side) -> Violation {
    return Violation{0, std::move(witness),
                     std::string(law) + ": " + side.show(rhs), side.show(lhs)};
  };

  // alpha_1 = id and beta_h(1) = 1
  detail::run_check(rep, nh, opts.workers,
                    [&](std::uint64_t i) -> std::optional<Violation> {
                      Element lhs = mp.alpha(mp.K.identity, hs[i].elem);
                      if (!elements_equal(mp.H, lhs, hs[i].elem)) {
                        return violation("alpha_1 = id", {wshow(hs[i].word)},
                                         lhs, hs[i].elem, mp.H);
                      }
                      return std::nullopt;
                    });
  detail::run_check(rep, nh, opts.workers,
                    [&](std::uint64_t i) -> std::optional<Violation> {
                      Element lhs = mp.beta(hs[i].elem, mp.K.identity);
                      if (!mp.K.is_identity(lhs)) {
                        return violation("beta_h(1) = 1", {wshow(hs[i].word)},
                                         lhs, mp.K.identity, mp.K);
                      }
                      return std::nullopt;
                    });
  // beta_1 = id and alpha_k(1) = 1
  detail::run_check(rep, nk, opts.workers,
                    [&](std::uint64_t j) -> std::optional<Violation> {
                      Element lhs = mp.beta(mp.H.identity, ks[j].elem);
                      if (!elements_equal(mp.K, lhs, ks[j].elem)) {
                        return violation("beta_1 = id", {wshow(ks[j].word)},
                                         lhs, ks[j].elem, mp.K);
                      }
                      return std::nullopt;
                    });
  detail::run_check(rep, nk, opts.workers,
                    [&](std::uint64_t j) -> std::optional<Violation> {
                      Element lhs = mp.alpha(ks[j].elem, mp.H.identity);
                      if (!mp.H.is_identity(lhs)) {
                        return violation("alpha_k(1) = 1", {wshow(ks[j].word)},
                                         lhs, mp.H.identity, mp.H);
                      }
                      return std::nullopt;
                    });

  // alpha homomorphism: alpha_{k1 k2} = alpha_{k1} o alpha_{k2}
  detail::run_check(
      rep, nk * nk * nh, opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const std::uint64_t j1 = idx / (nk * nh);
        const std::uint64_t j2 = (idx / nh) % nk;
        const std::uint64_t i = idx % nh;
        Element k12 = mp.K.multiply(ks[j1].elem, ks[j2].elem);
        Element lhs = mp.alpha(k12, hs[i].elem);
        Element rhs = mp.alpha(ks[j1].elem, alpha_tab[j2][i]);
        if (!elements_equal(mp.H, lhs, rhs)) {
          return violation(
              "alpha_{k1 k2} = alpha_{k1} o alpha_{k2}",
              {wshow(ks[j1].word), wshow(ks[j2].word), wshow(hs[i].word)}, lhs,
              rhs, mp.H);
        }
        return std::nullopt;
      });

  // beta anti-homomorphism: beta_{h1 h2} = beta_{h2} o beta_{h1}
  detail::run_check(
      rep, nh * nh * nk, opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const std::uint64_t i1 = idx / (nh * nk);
        const std::uint64_t i2 = (idx / nk) % nh;
        const std::uint64_t j = idx % nk;
        Element h12 = mp.H.multiply(hs[i1].elem, hs[i2].elem);
        Element lhs = mp.beta(h12, ks[j].elem);
        Element rhs = mp.beta(hs[i2].elem, beta_tab[i1][j]);
        if (!elements_equal(mp.K, lhs, rhs)) {
          return violation(
              "beta_{h1 h2} = beta_{h2} o beta_{h1}",
              {wshow(hs[i1].word), wshow(hs[i2].word), wshow(ks[j].word)}, lhs,
              rhs, mp.K);
        }
        return std::nullopt;
      });

  // alpha_k(h1 h2) = alpha_k(h1) alpha_{beta_{h1}(k)}(h2)
  detail::run_check(
      rep, nk * nh * nh, opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const std::uint64_t j = idx / (nh * nh);
        const std::uint64_t i1 = (idx / nh) % nh;
        const std::uint64_t i2 = idx % nh;
        Element h12 = mp.H.multiply(hs[i1].elem, hs[i2].elem);
        Element lhs = mp.alpha(ks[j].elem, h12);
        Element rhs = mp.H.multiply(alpha_tab[j][i1],
                                    mp.alpha(beta_tab[i1][j], hs[i2].elem));
        if (!elements_equal(mp.H, lhs, rhs)) {
          return violation(
              "alpha_k(h1 h2) = alpha_k(h1) alpha_{beta_{h1}(k)}(h2)",
              {wshow(ks[j].word), wshow(hs[i1].word), wshow(hs[i2].word)}, lhs,
              rhs, mp.H);
        }
        return std::nullopt;
      });

  // beta_h(k1 k2) = beta_{alpha_{k2}(h)}(k1) beta_h(k2)
  detail::run_check(
      rep, nh * nk * nk, opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const std::uint64_t i = idx / (nk * nk);
        const std::uint64_t j1 = (idx / nk) % nk;
        const std::uint64_t j2 = idx % nk;
        Element k12 = mp.K.multiply(ks[j1].elem, ks[j2].elem);
        Element lhs = mp.beta(hs[i].elem, k12);
        Element rhs = mp.K.multiply(mp.beta(alpha_tab[j2][i], ks[j1].elem),
                                    beta_tab[i][j2]);
        if (!elements_equal(mp.K, lhs, rhs)) {
          return violation(
              "beta_h(k1 k2) = beta_{alpha_{k2}(h)}(k1) beta_h(k2)",
              {wshow(hs[i].word), wshow(ks[j1].word), wshow(ks[j2].word)}, lhs,
              rhs, mp.K);
        }
        return std::nullopt;
      });

  rep.truncate(opts.max_violations);
  return rep;
}

VerificationReport check_alpha_positivity(const MatchedPair& mp, int rH, int rK,
                                          const CheckOptions& opts) {
  VerificationReport rep;
  rep.suite = "alpha-positivity";
  rep.instance = mp.name;
  rep.radii = {rH, rK};

  std::vector<BallEntry> pos_h;
  for (auto& e : normalized_ball(mp.H, rH)) {
    if (positive(mp.H, e.elem)) pos_h.push_back(std::move(e));
  }
  const auto ks = normalized_ball(mp.K, rK);
  const std::uint64_t nh = pos_h.size();
  const std::uint64_t nk = ks.size();

  detail::run_check(
      rep, nk * nh, opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const std::uint64_t j = idx / nh;
        const std::uint64_t i = idx % nh;
        Element image = mp.alpha(ks[j].elem, pos_h[i].elem);
        ConeSign s = mp.H.cone_sign(image);
        if (s != ConeSign::Positive) {
          return Violation{0,
                           {wshow(ks[j].word), wshow(pos_h[i].word)},
                           "alpha_k(h) Positive",
                           std::string(to_string(s)) + " (" +
                               mp.H.show(image) + ")"};
        }
        return std::nullopt;
      });

  rep.truncate(opts.max_violations);
  return rep;
}

VerificationReport check_bi_lift_conditions(const MatchedPair& mp, int rH,
                                            int rK, const CheckOptions& opts) {
  VerificationReport rep;
  rep.suite = "bi-lift-conditions";
  rep.instance = mp.name;
  rep.radii = {rH, rK};

  const auto hs = normalized_ball(mp.H, rH);
  const auto ks = normalized_ball(mp.K, rK);
  std::vector<std::uint64_t> hp, kp;  // indices of positive elements
  for (std::uint64_t i = 0; i < hs.size(); ++i) {
    if (positive(mp.H, hs[i].elem)) hp.push_back(i);
  }
  for (std::uint64_t j = 0; j < ks.size(); ++j) {
    if (positive(mp.K, ks[j].elem)) kp.push_back(j);
  }

  // alpha_k(P_H) in P_H for positive k
  detail::run_check(
      rep, kp.size() * hp.size(), opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const auto& k = ks[kp[idx / hp.size()]];
        const auto& h = hs[hp[idx % hp.size()]];
        Element image = mp.alpha(k.elem, h.elem);
        ConeSign s = mp.H.cone_sign(image);
        if (s != ConeSign::Positive) {
          return Violation{0,
                           {wshow(k.word), wshow(h.word)},
                           "alpha_k(h) Positive for positive k, h",
                           std::string(to_string(s)) + " (" +
                               mp.H.show(image) + ")"};
        }
        return std::nullopt;
      });

  // beta_h(P_K) in P_K for positive h
  detail::run_check(
      rep, hp.size() * kp.size(), opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const auto& h = hs[hp[idx / kp.size()]];
        const auto& k = ks[kp[idx % kp.size()]];
        Element image = mp.beta(h.elem, k.elem);
        ConeSign s = mp.K.cone_sign(image);
        if (s != ConeSign::Positive) {
          return Violation{0,
                           {wshow(h.word), wshow(k.word)},
                           "beta_h(k) Positive for positive h, k",
                           std::string(to_string(s)) + " (" +
                               mp.K.show(image) + ")"};
        }
        return std::nullopt;
      });

  // k P_H k^{-1} in P_H for all k, computed inside the product
  detail::run_check(
      rep, ks.size() * hp.size(), opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const auto& k = ks[idx / hp.size()];
        const auto& h = hs[hp[idx % hp.size()]];
        ZSElement ke{mp.H.identity, k.elem};
        ZSElement he{h.elem, mp.K.identity};
        ZSElement conj = zs_mul(mp, zs_mul(mp, ke, he), zs_inv(mp, ke));
        if (!mp.K.is_identity(conj.k)) {
          return Violation{0,
                           {wshow(k.word), wshow(h.word)},
                           "k h k^{-1} stays in H",
                           "leaves the factor: " + zs_show(mp, conj)};
        }
        if (mp.H.cone_sign(conj.h) != ConeSign::Positive) {
          return Violation{
              0,
              {wshow(k.word), wshow(h.word)},
              "k h k^{-1} in P_H",
              std::string(to_string(mp.H.cone_sign(conj.h))) + " (" +
                  mp.H.show(conj.h) + ")"};
        }
        return std::nullopt;
      });

  // h P_K h^{-1} in P_K for all h
  detail::run_check(
      rep, hs.size() * kp.size(), opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const auto& h = hs[idx / kp.size()];
        const auto& k = ks[kp[idx % kp.size()]];
        ZSElement he{h.elem, mp.K.identity};
        ZSElement ke{mp.H.identity, k.elem};
        ZSElement conj = zs_mul(mp, zs_mul(mp, he, ke), zs_inv(mp, he));
        if (!mp.H.is_identity(conj.h)) {
          return Violation{0,
                           {wshow(h.word), wshow(k.word)},
                           "h k h^{-1} stays in K",
                           "leaves the factor: " + zs_show(mp, conj)};
        }
        if (mp.K.cone_sign(conj.k) != ConeSign::Positive) {
          return Violation{
              0,
              {wshow(h.word), wshow(k.word)},
              "h k h^{-1} in P_K",
              std::string(to_string(mp.K.cone_sign(conj.k))) + " (" +
                  mp.K.show(conj.k) + ")"};
        }
        return std::nullopt;
      });

  rep.truncate(opts.max_violations);
  return rep;
}

VerificationReport check_bi_lift_monotonicity(const MatchedPair& mp, int rH,
                                              int rK,
                                              const CheckOptions& opts) {
  VerificationReport rep;
  rep.suite = "bi-lift-monotonicity";
  rep.instance = mp.name;
  rep.radii = {rH, rK};

  const auto hs = normalized_ball(mp.H, rH);
  const auto ks = normalized_ball(mp.K, rK);
  const std::uint64_t nh = hs.size();
  const std::uint64_t nk = ks.size();

  auto le = [](Ordering o) { return o == Ordering::Less || o == Ordering::Equal; };

  // h << h'  =>  alpha_k(h) <= alpha_k(h'), beta_h(k) <= beta_{h'}(k),
  // at least one strict
  detail::run_check(
      rep, nh * nh * nk, opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const std::uint64_t i1 = idx / (nh * nk);
        const std::uint64_t i2 = (idx / nk) % nh;
        const std::uint64_t j = idx % nk;
        if (compare_left(mp.H, hs[i1].elem, hs[i2].elem) != Ordering::Less) {
          return std::nullopt;
        }
        Ordering oa = compare_left(mp.H, mp.alpha(ks[j].elem, hs[i1].elem),
                                   mp.alpha(ks[j].elem, hs[i2].elem));
        Ordering ob = compare_left(mp.K, mp.beta(hs[i1].elem, ks[j].elem),
                                   mp.beta(hs[i2].elem, ks[j].elem));
        if (!le(oa) || !le(ob) ||
            (oa == Ordering::Equal && ob == Ordering::Equal)) {
          return Violation{
              0,
              {wshow(hs[i1].word), wshow(hs[i2].word), wshow(ks[j].word)},
              "alpha/beta monotone in h",
              std::string("alpha: ") + to_string(oa) + ", beta: " +
                  to_string(ob)};
        }
        return std::nullopt;
      });

  // k << k'  =>  alpha_k(h) <= alpha_{k'}(h), beta_h(k) <= beta_h(k')
  detail::run_check(
      rep, nk * nk * nh, opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const std::uint64_t j1 = idx / (nk * nh);
        const std::uint64_t j2 = (idx / nh) % nk;
        const std::uint64_t i = idx % nh;
        if (compare_left(mp.K, ks[j1].elem, ks[j2].elem) != Ordering::Less) {
          return std::nullopt;
        }
        Ordering oa = compare_left(mp.H, mp.alpha(ks[j1].elem, hs[i].elem),
                                   mp.alpha(ks[j2].elem, hs[i].elem));
        Ordering ob = compare_left(mp.K, mp.beta(hs[i].elem, ks[j1].elem),
                                   mp.beta(hs[i].elem, ks[j2].elem));
        if (!le(oa) || !le(ob) ||
            (oa == Ordering::Equal && ob == Ordering::Equal)) {
          return Violation{
              0,
              {wshow(ks[j1].word), wshow(ks[j2].word), wshow(hs[i].word)},
              "alpha/beta monotone in k",
              std::string("alpha: ") + to_string(oa) + ", beta: " +
                  to_string(ob)};
        }
        return std::nullopt;
      });

  rep.truncate(opts.max_violations);
  return rep;
}

}  // namespace knitord
