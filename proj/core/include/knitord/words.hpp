#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knitord {

// A generator or its inverse. Lowercase text form is the positive letter,
// uppercase its inverse ("Y" = y^{-1}).
struct SignedLetter {
  char gen;
  int sign;  // +1 or -1

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

using Word = std::vector<SignedLetter>;

struct ParseError : std::runtime_error {
  std::size_t position;

  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
};

// Parses the text grammar: lowercase letter = positive generator, uppercase =
// its inverse, juxtaposition, optional whitespace, empty string = identity.
// Letters must come from `alphabet` (given as positive letters).
Word parse_word(std::string_view text, std::string_view alphabet);

std::string show_word(const Word& w);

// Iterated cancellation of adjacent inverse pairs. Idempotent.
Word free_reduce(const Word& w);

// Reversed sequence with all signs negated.
Word invert_word(const Word& w);

Word concat(const Word& u, const Word& v);

// All freely reduced words of length <= radius over alphabet and inverses,
// in length-lexicographic order (alphabet order, positive letter before its
// inverse).
std::vector<Word> enumerate_ball(std::string_view alphabet, int radius);

}  // namespace knitord
