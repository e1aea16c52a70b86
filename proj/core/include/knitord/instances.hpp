#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knitord/braid_b3.hpp"
#include "knitord/order.hpp"
#include "knitord/zappa_szep.hpp"

namespace knitord {

// Registered instances wiring the concrete groups together. Ids double as the
// CLI --group values.

// Free abelian group of rank n with the lexicographic cone. Generators are
// the first n letters of "uvwx" unless overridden.
GroupHandle make_z_lex_handle(int n, std::string alphabet, OrderKind kind,
                              std::string name);
GroupHandle build_z_lex(int n);

// G = H |x| B3 with trivial alpha and beta_h = flip^{exp(h) mod 2}. The
// parity extends beta_y = beta_z = (a b) anti-homomorphically and is
// well-defined because exp respects y^3 = z^3.
MatchedPair build_paper_example(std::size_t step_limit = kDefaultStepLimit);

// Negative control: beta acting by flip per y-syllable only, which cannot be
// well-defined on y^3 = z^3. check_matched_pair must reject it.
MatchedPair build_paper_example_bad_beta(
    std::size_t step_limit = kDefaultStepLimit);

// Z x Z with trivial actions; every bi-lift condition holds.
MatchedPair build_thm2_direct();

// H = Z^2 (lex), K = Z, alpha_k(m, n) = (m, n + k m), beta trivial. A genuine
// semidirect product: alpha preserves the cone but h k h^{-1} leaves the K
// factor, so the conjugation condition fails (negative control).
MatchedPair build_thm2_shear();

struct Instance {
  std::string id;
  GroupHandle group;
  std::optional<MatchedPair> pair;
  // Parses an element in this instance's input syntax: the plain word
  // grammar, the "Δ^n" suffix for H, or "(<h-word>;<k-word>)" for products.
  std::function<Element(std::string_view)> parse;
};

// Ids: h-amalgam, b3, g-paper, z-lex(n), thm2-direct, thm2-shear, plus the
// negative controls b3-corrupt and g-paper-badbeta.
std::optional<Instance> find_instance(std::string_view id,
                                      std::size_t step_limit = kDefaultStepLimit);
std::vector<std::string> instance_ids();

}  // namespace knitord
