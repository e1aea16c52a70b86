#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace knitord {

// Integer-coefficient Laurent polynomial in one variable t, finite support.
class Laurent {
 public:
  Laurent() = default;

  static Laurent term(int power, std::int64_t coeff) {
    Laurent p;
    if (coeff != 0) p.coeffs_[power] = coeff;
    return p;
  }
  static Laurent one() { return term(0, 1); }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  std::string str() const;

  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  std::map<int, std::int64_t> coeffs_;  // zero coefficients never stored
};

// 2x2 matrix over Laurent polynomials, row-major [[a, b], [c, d]].
struct LaurentMatrix {
  Laurent a, b, c, d;

  static LaurentMatrix identity() {
    return {Laurent::one(), Laurent{}, Laurent{}, Laurent::one()};
  }

  LaurentMatrix operator*(const LaurentMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }

  bool is_identity() const {
    return a.is_one() && b.is_zero() && c.is_zero() && d.is_one();
  }

  std::string str() const {
    return "[" + a.str() + "|" + b.str() + "|" + c.str() + "|" + d.str() + "]";
  }

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;
};

}  // namespace knitord
