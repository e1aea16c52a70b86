#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "knitord/words.hpp"

using namespace knitord;

namespace {

Word W(std::string_view text, std::string_view alphabet = "yz") {
  return parse_word(text, alphabet);
}

// Independent oracle for free reduction: repeated single-pass scans until a
// fixpoint, unlike the stack algorithm in the library.
Word free_reduce_oracle(Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].gen == w[i + 1].gen && w[i].sign == -w[i + 1].sign) {
        w.erase(w.begin() + i, w.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// Independent oracle for ball sizes: recursive count of freely reduced words.
std::uint64_t ball_count_oracle(int n_gens, int length) {
  if (length == 0) return 1;
  std::uint64_t words = 2 * n_gens;  // length 1
  std::uint64_t total = 1 + words;
  for (int len = 2; len <= length; ++len) {
    words *= 2 * n_gens - 1;  // anything but the cancelling letter
    total += words;
  }
  return total;
}

void all_words_up_to(std::string_view alphabet, int len, Word& cur,
                     std::vector<Word>& out) {
  out.push_back(cur);
  if (len == 0) return;
  for (char g : alphabet) {
    for (int s : {1, -1}) {
      cur.push_back({g, s});
      all_words_up_to(alphabet, len - 1, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

TEST_CASE("parse_word and show_word") {
  Word w = W("yzY");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == SignedLetter{'y', 1});
  CHECK(w[1] == SignedLetter{'z', 1});
  CHECK(w[2] == SignedLetter{'y', -1});
  CHECK(show_word(w) == "yzY");
  CHECK(W("").empty());
  CHECK(show_word(W("y z\tZ")) == "yzZ");

  CHECK_THROWS_AS(W("yqz"), ParseError);
  try {
    W("yqz");
  } catch (const ParseError& e) {
    CHECK(e.position == 1);
  }
}

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce(W("yY")).empty());
  CHECK(free_reduce(W("")).empty());
  CHECK(free_reduce(W("yzZYy")) == W("y"));
  // not reduced further across generators
  CHECK(free_reduce(W("yZ")) == W("yZ"));
}

TEST_CASE("free_reduce agrees with the scan oracle and is idempotent") {
  std::vector<Word> words;
  Word cur;
  all_words_up_to("yz", 5, cur, words);
  for (const auto& w : words) {
    Word r = free_reduce(w);
    CHECK(r == free_reduce_oracle(w));
    CHECK(free_reduce(r) == r);  // idempotent
    // reduction preserves exponent sums per generator
    for (char g : {'y', 'z'}) {
      int before = 0, after = 0;
      for (auto l : w)
        if (l.gen == g) before += l.sign;
      for (auto l : r)
        if (l.gen == g) after += l.sign;
      CHECK(before == after);
    }
  }
}

TEST_CASE("invert_word") {
  CHECK(invert_word(W("yzY")) == W("yZY"));
  CHECK(invert_word(W("")).empty());
  std::vector<Word> words;
  Word cur;
  all_words_up_to("yz", 4, cur, words);
  for (const auto& w : words) {
    CHECK(invert_word(invert_word(w)) == w);
    CHECK(free_reduce(concat(w, invert_word(w))).empty());
  }
}

TEST_CASE("enumerate_ball examples") {
  auto b0 = enumerate_ball("y", 0);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].empty());

  auto b2 = enumerate_ball("y", 2);
  std::set<std::string> got;
  for (const auto& w : b2) got.insert(show_word(w));
  CHECK(got == std::set<std::string>{"", "y", "Y", "yy", "YY"});

  auto b1 = enumerate_ball("yz", 1);
  REQUIRE(b1.size() == 5);
  CHECK(show_word(b1[0]) == "");
  CHECK(show_word(b1[1]) == "y");
  CHECK(show_word(b1[2]) == "Y");
  CHECK(show_word(b1[3]) == "z");
  CHECK(show_word(b1[4]) == "Z");
}

TEST_CASE("enumerate_ball counts, reducedness, order") {
  for (int n : {1, 2}) {
    std::string alphabet = std::string("yz").substr(0, n);
    for (int r = 0; r <= 6; ++r) {
      auto ball = enumerate_ball(alphabet, r);
      CHECK(ball.size() == ball_count_oracle(n, r));
      for (std::size_t i = 0; i < ball.size(); ++i) {
        CHECK(free_reduce(ball[i]) == ball[i]);
        if (i > 0) {
          // length-lexicographic: lengths never decrease
          CHECK(ball[i - 1].size() <= ball[i].size());
        }
      }
      // no duplicates
      std::set<std::string> seen;
      for (const auto& w : ball) CHECK(seen.insert(show_word(w)).second);
    }
  }
}
