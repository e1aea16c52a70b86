#pragma once

#include <cstddef>
#include <stdexcept>

#include "knitord/laurent.hpp"
#include "knitord/order.hpp"
#include "knitord/words.hpp"

namespace knitord {

// The braid group on 3 strands, K = <a, b | aba = bab>, with the sigma_1-first
// Dehornoy positive cone decided by handle reduction and an independent word
// problem oracle through the reduced Burau representation (faithful on 3
// strands).

inline constexpr std::size_t kDefaultStepLimit = 1'000'000;

// Raised when handle reduction exceeds its step budget. Termination is
// guaranteed, so hitting the budget signals an implementation bug.
struct StepLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduced Burau image of a single generator letter. Conventions:
//   a -> [[-t, 1], [0, 1]],   b -> [[1, 0], [t, -t]]
// (standard reduced form; validated by certificate("aba") = certificate("bab")).
LaurentMatrix burau_letter(SignedLetter l);

LaurentMatrix burau(const Word& w);

// Eliminates a-handles: subwords a^e u a^{-e} with u a nonempty word in
// b-letters. Each b^d inside u becomes b^{-e} a^d b^{e}, the flanking pair is
// dropped, the word is freely reduced, and the leftmost remaining handle is
// attacked next. The result is freely reduced, has no a-handle, and is
// certificate-equal to the input.
Word handle_reduce(Word w, std::size_t step_limit = kDefaultStepLimit);

// Dehornoy sign: empty -> Identity; a^+ present -> Positive; a^- present ->
// Negative; a-free b^m -> sign of m.
ConeSign b3_sign(const Word& w, std::size_t step_limit = kDefaultStepLimit);

struct B3Element {
  Word reduced;  // freely reduced, no a-handle
  LaurentMatrix certificate;
};

B3Element b3_element(const Word& w, std::size_t step_limit = kDefaultStepLimit);
B3Element b3_mul(const B3Element& u, const B3Element& v,
                 std::size_t step_limit = kDefaultStepLimit);
B3Element b3_inv(const B3Element& u, std::size_t step_limit = kDefaultStepLimit);

// Certificate equality; by faithfulness this is braid equality, and it agrees
// with b3_sign(u v^{-1}) = Identity.
bool b3_equal(const Word& u, const Word& v,
              std::size_t step_limit = kDefaultStepLimit);

// Swaps a <-> b preserving signs. An automorphism of K since the defining
// relation is symmetric under the swap; an involution.
Word flip(const Word& w);

GroupHandle make_b3_handle(std::size_t step_limit = kDefaultStepLimit);

// Negative control: a cone that also calls a-free b^{-m} words positive, so it
// breaks both the semigroup and the partition property.
GroupHandle make_b3_corrupted_handle(std::size_t step_limit = kDefaultStepLimit);

}  // namespace knitord
