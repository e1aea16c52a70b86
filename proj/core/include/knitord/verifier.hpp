#pragma once

#include <functional>
#include <string>
#include <vector>

#include "knitord/order.hpp"
#include "knitord/report.hpp"
#include "knitord/zappa_szep.hpp"

namespace knitord {

// Reusable exhaustive property suites over group handles and matched pairs.
// Universal quantification is ball-based: radii are explicit and reports name
// them. Suites collect violations (up to opts.max_violations) instead of
// aborting, and their serialized output is deterministic for any worker count.

using PairTag = std::function<std::string(const Element&, const Element&)>;

// P . P subset of P over all pairs of positive ball elements. When tag is
// given, each checked pair is counted under tag(p, q) in report.stats.
VerificationReport verify_semigroup(const GroupHandle& g, int radius,
                                    const CheckOptions& opts = {},
                                    const PairTag& tag = nullptr);
VerificationReport verify_semigroup_on(const GroupHandle& g,
                                       const std::vector<BallEntry>& ball,
                                       std::vector<int> radii,
                                       const CheckOptions& opts = {},
                                       const PairTag& tag = nullptr);

// Every ball element is exactly one of identity, positive, inverse-positive.
VerificationReport verify_partition(const GroupHandle& g, int radius,
                                    const CheckOptions& opts = {});
VerificationReport verify_partition_on(const GroupHandle& g,
                                       const std::vector<BallEntry>& ball,
                                       std::vector<int> radii,
                                       const CheckOptions& opts = {});

// g < h implies fg < fh for all ball triples. Regression tripwire: automatic
// from the cone definition of the order.
VerificationReport verify_left_invariance(const GroupHandle& g, int radius,
                                          const CheckOptions& opts = {});

// Convexity of the K factor under the lifted left order: no 1 < g < k' with
// g having a nontrivial H-part, plus P intersect K = P_K elementwise.
VerificationReport verify_convexity_K(const MatchedPair& mp, int radius,
                                      const CheckOptions& opts = {});

// g p g^{-1} positive for every ball g and positive ball p.
VerificationReport verify_conjugation(const GroupHandle& g, int radius,
                                      const CheckOptions& opts = {});
VerificationReport verify_conjugation_on(const GroupHandle& g,
                                         const std::vector<BallEntry>& ball,
                                         std::vector<int> radii,
                                         const CheckOptions& opts = {});

}  // namespace knitord
