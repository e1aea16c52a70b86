#pragma once

#include <functional>
#include <string>
#include <vector>

#include "knitord/order.hpp"
#include "knitord/report.hpp"
#include "knitord/words.hpp"

namespace knitord {

// A matched pair of groups: an action alpha: K -> Sym(H) (homomorphism) and
// beta: H -> Sym(K) (anti-homomorphism) satisfying the compatibility laws
//   alpha_k(h1 h2) = alpha_k(h1) alpha_{beta_{h1}(k)}(h2)
//   beta_h(k1 k2)  = beta_{alpha_{k2}(h)}(k1) beta_h(k2)
// The laws are runtime-verified on balls by check_matched_pair, never assumed.
struct MatchedPair {
  std::string name;
  GroupHandle H;
  GroupHandle K;
  std::function<Element(const Element& k, const Element& h)> alpha;
  std::function<Element(const Element& h, const Element& k)> beta;
};

// Element of H |x| K in its unique hk representation.
struct ZSElement {
  Element h;
  Element k;
};

// (h1, k1)(h2, k2) = (h1 alpha_{k1}(h2), beta_{h2}(k1) k2)
ZSElement zs_mul(const MatchedPair& mp, const ZSElement& g1, const ZSElement& g2);

// (h, k)^{-1} = (alpha_{k^{-1}}(h^{-1}), beta_{h^{-1}}(k^{-1}))
ZSElement zs_inv(const MatchedPair& mp, const ZSElement& g);

bool zs_is_identity(const MatchedPair& mp, const ZSElement& g);

std::string zs_show(const MatchedPair& mp, const ZSElement& g);

// Cone of the lifted left order: hk positive iff h in P_H, or h = 1 and k in
// P_K. Total whenever the factors are totally left-ordered and alpha maps P_H
// into itself.
ConeSign left_lift_sign(const MatchedPair& mp, const ZSElement& g);

// Mirror cone for right orders: hk positive iff k in Q_K, or k = 1 and h in
// Q_H. The induced right order makes H a convex subgroup.
ConeSign right_lift_sign(const MatchedPair& mp, const ZSElement& g);

// Cone of the lifted partial bi-order: positive iff both parts positive, or
// one part is trivial and the other positive.
ConeSign bi_lift_sign(const MatchedPair& mp, const ZSElement& g);

// Wraps a matched pair as a group handle over the combined alphabet. Words
// normalize letterwise through zs_mul, so a plain concatenated word h-word
// k-word lands on (h, k). The cone is chosen by `sign`.
GroupHandle make_product_handle(
    const MatchedPair& mp, OrderKind kind,
    std::function<ConeSign(const MatchedPair&, const ZSElement&)> sign);

GroupHandle make_left_lift_handle(const MatchedPair& mp);
GroupHandle make_right_lift_handle(const MatchedPair& mp);
GroupHandle make_bi_lift_handle(const MatchedPair& mp);

// The pairwise product ball: every (h, k) with h from the radius-rH H-ball
// and k from the radius-rK K-ball. Witness words are the concatenations
// h-word k-word over the combined alphabet.
std::vector<BallEntry> component_ball(const MatchedPair& mp, int rH, int rK);

// Verifies the matched-pair axioms on balls of the given radii: both
// compatibility laws, the homomorphism law for alpha, the anti-homomorphism
// law for beta, alpha_1 = beta_1 = id, and alpha_k(1) = 1, beta_h(1) = 1.
// The beta laws are additionally evaluated at the K generators so that an
// ill-defined beta is caught even with rK = 0.
VerificationReport check_matched_pair(const MatchedPair& mp, int rH, int rK,
                                      const CheckOptions& opts = {});

// The left-lift hypothesis: alpha_k(P_H) subset of P_H for every k in the
// radius-rK ball and every positive h in the radius-rH ball.
VerificationReport check_alpha_positivity(const MatchedPair& mp, int rH, int rK,
                                          const CheckOptions& opts = {});

// Hypotheses of the bi-order lift, four families on balls:
//   alpha_k(P_H) in P_H for positive k;  beta_h(P_K) in P_K for positive h;
//   k P_H k^{-1} in P_H for all k;       h P_K h^{-1} in P_K for all h.
// Conjugates are computed inside the product via zs_mul; a conjugate leaving
// its factor is itself a violation.
VerificationReport check_bi_lift_conditions(const MatchedPair& mp, int rH,
                                            int rK,
                                            const CheckOptions& opts = {});

// Monotonicity of the actions under the factor bi-orders: h << h' implies
// alpha_k(h) <= alpha_k(h') and beta_h(k) <= beta_{h'}(k) with at least one
// strict, and symmetrically for k << k'.
VerificationReport check_bi_lift_monotonicity(const MatchedPair& mp, int rH,
                                              int rK,
                                              const CheckOptions& opts = {});

}  // namespace knitord
