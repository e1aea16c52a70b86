#include "knitord/verifier.hpp"

#include <stdexcept>

#include "knitord/detail/parallel.hpp"

namespace knitord {

namespace {

std::vector<BallEntry> positive_entries(const GroupHandle& g,
                                        const std::vector<BallEntry>& ball) {
  std::vector<BallEntry> out;
  for (const auto& e : ball) {
    if (g.cone_sign(e.elem) == ConeSign::Positive) out.push_back(e);
  }
  return out;
}

}  // namespace

VerificationReport verify_semigroup_on(const GroupHandle& g,
                                       const std::vector<BallEntry>& ball,
                                       std::vector<int> radii,
                                       const CheckOptions& opts,
                                       const PairTag& tag) {
  VerificationReport rep;
  rep.suite = "semigroup";
  rep.instance = g.name;
  rep.radii = std::move(radii);

  const auto pos = positive_entries(g, ball);
  const std::uint64_t n = pos.size();

  if (tag) {
    for (const auto& p : pos) {
      for (const auto& q : pos) {
        ++rep.stats[tag(p.elem, q.elem)];
      }
    }
  }

  detail::run_check(rep, n * n, opts.workers,
                    [&](std::uint64_t idx) -> std::optional<Violation> {
                      const auto& p = pos[idx / n];
                      const auto& q = pos[idx % n];
                      Element prod = g.multiply(p.elem, q.elem);
                      ConeSign s = g.cone_sign(prod);
                      if (s != ConeSign::Positive) {
                        return Violation{
                            0,
                            {show_word(p.word), show_word(q.word)},
                            "Positive",
                            std::string(to_string(s)) + " (" + g.show(prod) +
                                ")"};
                      }
                      return std::nullopt;
                    });

  rep.truncate(opts.max_violations);
  return rep;
}

VerificationReport verify_semigroup(const GroupHandle& g, int radius,
                                    const CheckOptions& opts,
                                    const PairTag& tag) {
  return verify_semigroup_on(g, normalized_ball(g, radius), {radius}, opts,
                             tag);
}

VerificationReport verify_partition_on(const GroupHandle& g,
                                       const std::vector<BallEntry>& ball,
                                       std::vector<int> radii,
                                       const CheckOptions& opts) {
  if (g.order_kind == OrderKind::PartialBi) {
    throw std::invalid_argument(
        "verify_partition: handle '" + g.name +
        "' carries a partial order; the partition property needs a total one");
  }
  VerificationReport rep;
  rep.suite = "partition";
  rep.instance = g.name;
  rep.radii = std::move(radii);

  detail::run_check(
      rep, ball.size(), opts.workers,
      [&](std::uint64_t i) -> std::optional<Violation> {
        const auto& e = ball[i];
        const bool ident = g.is_identity(e.elem);
        const bool pos = g.cone_sign(e.elem) == ConeSign::Positive;
        const bool inv_pos =
            g.cone_sign(g.invert(e.elem)) == ConeSign::Positive;
        const int count = int(ident) + int(pos) + int(inv_pos);
        if (count != 1) {
          std::string actual = count == 0 ? "none of the three" : "";
          if (count > 1) {
            if (ident) actual += "Identity ";
            if (pos) actual += "Positive ";
            if (inv_pos) actual += "InversePositive ";
            actual += "(overlap)";
          }
          return Violation{0,
                           {show_word(e.word)},
                           "exactly one of Identity/Positive/InversePositive",
                           actual};
        }
        return std::nullopt;
      });

  rep.truncate(opts.max_violations);
  return rep;
}

VerificationReport verify_partition(const GroupHandle& g, int radius,
                                    const CheckOptions& opts) {
  return verify_partition_on(g, normalized_ball(g, radius), {radius}, opts);
}

VerificationReport verify_left_invariance(const GroupHandle& g, int radius,
                                          const CheckOptions& opts) {
  if (g.order_kind != OrderKind::TotalLeft) {
    throw std::invalid_argument(
        "verify_left_invariance: handle '" + g.name +
        "' does not carry a total left order");
  }
  VerificationReport rep;
  rep.suite = "left-invariance";
  rep.instance = g.name;
  rep.radii = {radius};

  const auto ball = normalized_ball(g, radius);
  const std::uint64_t n = ball.size();

  detail::run_check(
      rep, n * n * n, opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const auto& f = ball[idx / (n * n)];
        const auto& a = ball[(idx / n) % n];
        const auto& b = ball[idx % n];
        if (compare_left(g, a.elem, b.elem) != Ordering::Less) {
          return std::nullopt;
        }
        Ordering o = compare_left(g, g.multiply(f.elem, a.elem),
                                  g.multiply(f.elem, b.elem));
        if (o != Ordering::Less) {
          return Violation{
              0,
              {show_word(f.word), show_word(a.word), show_word(b.word)},
              "fg < fh when g < h",
              to_string(o)};
        }
        return std::nullopt;
      });

  rep.truncate(opts.max_violations);
  return rep;
}

VerificationReport verify_convexity_K(const MatchedPair& mp, int radius,
                                      const CheckOptions& opts) {
  VerificationReport rep;
  rep.suite = "convexity-k";
  rep.instance = mp.name;
  rep.radii = {radius};

  const GroupHandle g = make_left_lift_handle(mp);
  const auto ks = normalized_ball(mp.K, radius);
  const auto ball = component_ball(mp, radius, radius);
  const std::uint64_t nb = ball.size();
  const std::uint64_t nk = ks.size();

  // P intersect K = P_K elementwise on the K-ball
  detail::run_check(
      rep, nk, opts.workers, [&](std::uint64_t j) -> std::optional<Violation> {
        ZSElement embedded{mp.H.identity, ks[j].elem};
        const bool in_p = left_lift_sign(mp, embedded) == ConeSign::Positive;
        const bool in_pk = mp.K.cone_sign(ks[j].elem) == ConeSign::Positive;
        if (in_p != in_pk) {
          return Violation{0,
                           {show_word(ks[j].word)},
                           "k in P iff k in P_K",
                           std::string("P: ") + (in_p ? "yes" : "no") +
                               ", P_K: " + (in_pk ? "yes" : "no")};
        }
        return std::nullopt;
      });

  // no 1 < g < k' with g having a nontrivial H-part
  detail::run_check(
      rep, nb * nk, opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const auto& ge = ball[idx / nk];
        const auto& kp = ks[idx % nk];
        const auto& zg = std::any_cast<const ZSElement&>(ge.elem);
        if (mp.H.is_identity(zg.h)) return std::nullopt;
        if (left_lift_sign(mp, zg) != ConeSign::Positive) return std::nullopt;
        ZSElement embedded{mp.H.identity, kp.elem};
        ZSElement quot = zs_mul(mp, zs_inv(mp, zg), embedded);
        if (left_lift_sign(mp, quot) == ConeSign::Positive) {
          return Violation{0,
                           {show_word(ge.word), show_word(kp.word)},
                           "no 1 < g < k' with nontrivial H-part",
                           "1 < " + zs_show(mp, zg) + " < " +
                               mp.K.show(kp.elem)};
        }
        return std::nullopt;
      });

  rep.truncate(opts.max_violations);
  return rep;
}

VerificationReport verify_conjugation_on(const GroupHandle& g,
                                         const std::vector<BallEntry>& ball,
                                         std::vector<int> radii,
                                         const CheckOptions& opts) {
  VerificationReport rep;
  rep.suite = "conjugation";
  rep.instance = g.name;
  rep.radii = std::move(radii);

  const auto pos = positive_entries(g, ball);
  const std::uint64_t np = pos.size();
  const std::uint64_t nb = ball.size();

  detail::run_check(
      rep, nb * np, opts.workers,
      [&](std::uint64_t idx) -> std::optional<Violation> {
        const auto& f = ball[idx / np];
        const auto& p = pos[idx % np];
        Element conj =
            g.multiply(g.multiply(f.elem, p.elem), g.invert(f.elem));
        ConeSign s = g.cone_sign(conj);
        if (s != ConeSign::Positive) {
          return Violation{0,
                           {show_word(f.word), show_word(p.word)},
                           "g p g^{-1} Positive",
                           std::string(to_string(s)) + " (" + g.show(conj) +
                               ")"};
        }
        return std::nullopt;
      });

  rep.truncate(opts.max_violations);
  return rep;
}

VerificationReport verify_conjugation(const GroupHandle& g, int radius,
                                      const CheckOptions& opts) {
  return verify_conjugation_on(g, normalized_ball(g, radius), {radius}, opts);
}

}  // namespace knitord
