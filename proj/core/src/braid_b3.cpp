#include "knitord/braid_b3.hpp"

namespace knitord {

LaurentMatrix burau_letter(SignedLetter l) {
  const Laurent t = Laurent::term(1, 1);
  const Laurent ti = Laurent::term(-1, 1);
  const Laurent one = Laurent::one();
  if (l.gen == 'a') {
    if (l.sign > 0) {
      return {Laurent::term(1, -1), one, Laurent{}, one};
    }
    // [[-t^-1, t^-1], [0, 1]]
    return {Laurent::term(-1, -1), ti, Laurent{}, one};
  }
  if (l.gen == 'b') {
    if (l.sign > 0) {
      return {one, Laurent{}, t, Laurent::term(1, -1)};
    }
    // [[1, 0], [1, -t^-1]]
    return {one, Laurent{}, one, Laurent::term(-1, -1)};
  }
  throw std::invalid_argument("burau_letter: generator must be a or b");
}

LaurentMatrix burau(const Word& w) {
  LaurentMatrix m = LaurentMatrix::identity();
  for (const auto& l : w) m = m * burau_letter(l);
  return m;
}

namespace {

// Leftmost a-handle: the first pair of consecutive a-letters with opposite
// signs. Their interior is b-only and nonempty (the word is freely reduced).
struct Handle {
  std::size_t begin, end;  // positions of the flanking a-letters
};

std::optional<Handle> find_handle(const Word& w) {
  std::size_t prev_a = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].gen != 'a') continue;
    if (prev_a != w.size() && w[prev_a].sign == -w[i].sign) {
      return Handle{prev_a, i};
    }
    prev_a = i;
  }
  return std::nullopt;
}

}  // namespace

Word handle_reduce(Word w, std::size_t step_limit) {
  w = free_reduce(w);
  std::size_t steps = 0;
  for (;;) {
    auto h = find_handle(w);
    if (!h) return w;
    if (++steps > step_limit) {
      throw StepLimitExceeded("handle_reduce: exceeded " +
                              std::to_string(step_limit) + " rewrite steps");
    }
    const int e = w[h->begin].sign;
    Word next(w.begin(), w.begin() + h->begin);
    for (std::size_t i = h->begin + 1; i < h->end; ++i) {
      // b^d -> b^{-e} a^d b^{e}
      next.push_back({'b', -e});
      next.push_back({'a', w[i].sign});
      next.push_back({'b', e});
    }
    next.insert(next.end(), w.begin() + h->end + 1, w.end());
    w = free_reduce(next);
  }
}

ConeSign b3_sign(const Word& w, std::size_t step_limit) {
  Word r = handle_reduce(w, step_limit);
  if (r.empty()) return ConeSign::Identity;
  long long b_exp = 0;
  for (const auto& l : r) {
    if (l.gen == 'a') {
      return l.sign > 0 ? ConeSign::Positive : ConeSign::Negative;
    }
    b_exp += l.sign;
  }
  return b_exp > 0 ? ConeSign::Positive : ConeSign::Negative;
}

B3Element b3_element(const Word& w, std::size_t step_limit) {
  Word r = handle_reduce(w, step_limit);
  return {r, burau(r)};
}

B3Element b3_mul(const B3Element& u, const B3Element& v, std::size_t step_limit) {
  return {handle_reduce(concat(u.reduced, v.reduced), step_limit),
          u.certificate * v.certificate};
}

B3Element b3_inv(const B3Element& u, std::size_t step_limit) {
  return b3_element(invert_word(u.reduced), step_limit);
}

bool b3_equal(const Word& u, const Word& v, std::size_t step_limit) {
  (void)step_limit;
  return burau(u) == burau(v);
}

Word flip(const Word& w) {
  Word out = w;
  for (auto& l : out) l.gen = l.gen == 'a' ? 'b' : 'a';
  return out;
}

namespace {

ConeSign reduced_word_sign(const Word& r) {
  if (r.empty()) return ConeSign::Identity;
  long long b_exp = 0;
  for (const auto& l : r) {
    if (l.gen == 'a') {
      return l.sign > 0 ? ConeSign::Positive : ConeSign::Negative;
    }
    b_exp += l.sign;
  }
  return b_exp > 0 ? ConeSign::Positive : ConeSign::Negative;
}

GroupHandle make_handle(std::string name, std::size_t step_limit,
                        bool corrupted) {
  GroupHandle g;
  g.name = std::move(name);
  g.alphabet = "ab";
  g.order_kind = OrderKind::TotalLeft;
  g.identity = B3Element{{}, LaurentMatrix::identity()};
  g.multiply = [step_limit](const Element& x, const Element& y) -> Element {
    return b3_mul(std::any_cast<const B3Element&>(x),
                  std::any_cast<const B3Element&>(y), step_limit);
  };
  g.invert = [step_limit](const Element& x) -> Element {
    return b3_inv(std::any_cast<const B3Element&>(x), step_limit);
  };
  g.normalize = [step_limit](const Word& w) -> Element {
    return b3_element(w, step_limit);
  };
  g.is_identity = [](const Element& x) {
    return std::any_cast<const B3Element&>(x).certificate.is_identity();
  };
  g.cone_sign = [corrupted](const Element& x) {
    const auto& e = std::any_cast<const B3Element&>(x);
    ConeSign s = reduced_word_sign(e.reduced);
    if (corrupted && s == ConeSign::Negative) {
      // also call a-free b^{-m} words positive
      bool a_free = true;
      for (const auto& l : e.reduced) {
        if (l.gen == 'a') a_free = false;
      }
      if (a_free) return ConeSign::Positive;
    }
    return s;
  };
  g.show = [](const Element& x) {
    return show_word(std::any_cast<const B3Element&>(x).reduced);
  };
  g.key = [](const Element& x) {
    return std::any_cast<const B3Element&>(x).certificate.str();
  };
  return g;
}

}  // namespace

GroupHandle make_b3_handle(std::size_t step_limit) {
  return make_handle("b3", step_limit, false);
}

GroupHandle make_b3_corrupted_handle(std::size_t step_limit) {
  return make_handle("b3-corrupt", step_limit, true);
}

}  // namespace knitord
