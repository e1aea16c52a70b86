#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knitord/order.hpp"
#include "knitord/words.hpp"

namespace knitord {

// The group H = <y, z | y^3 = z^3>. Delta = y^3 = z^3 is central; every
// element is uniquely an alternating word of +-1 syllables over {y, z} times a
// power of Delta (y^2 is stored as y^{-1} Delta).

struct HSyllable {
  char gen;  // 'y' or 'z'
  int exp;   // +1 or -1

  friend bool operator==(const HSyllable&, const HSyllable&) = default;
};

struct HNormalForm {
  std::vector<HSyllable> syllables;  // adjacent syllables have distinct gens
  std::int64_t delta_exp = 0;

  bool is_identity() const { return syllables.empty() && delta_exp == 0; }

  friend bool operator==(const HNormalForm&, const HNormalForm&) = default;
};

enum class HConeClass { A, B, C, Identity, NotPositive };

const char* to_string(HConeClass c);

// Right-multiplies by a single letter over {y, z}, keeping the normal form.
HNormalForm h_push(HNormalForm nf, SignedLetter letter);

HNormalForm h_normalize(const Word& w);

HNormalForm h_mul(const HNormalForm& p, const HNormalForm& q);
HNormalForm h_inv(const HNormalForm& p);

// Sum of syllable exponents plus 3 * delta_exp; a homomorphism H -> Z.
std::int64_t h_exp(const HNormalForm& p);

// Positivity classes: A iff exp > 0; B iff exp = 0 and delta_exp > 0; C iff
// exp = delta_exp = 0 and the form begins with a y-syllable.
HConeClass h_cone_class(const HNormalForm& p);

ConeSign h_sign(const HNormalForm& p);

// Display form "<syllables> Δ^n", e.g. "yZ Δ^0"; identity prints "Δ^0".
std::string h_show(const HNormalForm& p);

// A plain word over {y, z} normalizing back to p.
Word h_serialize_word(const HNormalForm& p);

// Accepts the plain {y, z, Y, Z} grammar with an optional trailing
// "Δ^<int>" (or "D^<int>") factor, as printed by h_show.
HNormalForm h_parse(std::string_view text);

GroupHandle make_h_handle();

}  // namespace knitord
