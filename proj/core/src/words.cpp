#include "knitord/words.hpp"

#include <algorithm>
#include <cctype>

namespace knitord {

Word parse_word(std::string_view text, std::string_view alphabet) {
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (alphabet.find(lower) == std::string_view::npos) {
      throw ParseError("unexpected letter '" + std::string(1, c) +
                           "' at position " + std::to_string(i),
                       i);
    }
    int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : +1;
    w.push_back({lower, sign});
  }
  return w;
}

std::string show_word(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const auto& l : w) {
    s.push_back(l.sign > 0
                    ? l.gen
                    : static_cast<char>(std::toupper(static_cast<unsigned char>(l.gen))));
  }
  return s;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->gen, -it->sign});
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Word> enumerate_ball(std::string_view alphabet, int radius) {
  std::vector<SignedLetter> letters;
  for (char g : alphabet) {
    letters.push_back({g, +1});
    letters.push_back({g, -1});
  }
  std::vector<Word> all;
  all.push_back({});
  std::size_t level_begin = 0;
  for (int len = 1; len <= radius; ++len) {
    std::size_t level_end = all.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& l : letters) {
        const Word& w = all[i];
        if (!w.empty() && w.back().gen == l.gen && w.back().sign == -l.sign) {
          continue;  // not freely reduced
        }
        Word next = w;
        next.push_back(l);
        all.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  return all;
}

}  // namespace knitord
