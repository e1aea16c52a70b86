#include "knitord/laurent.hpp"

#include <sstream>

namespace knitord {

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent out = *this;
  for (const auto& [p, c] : o.coeffs_) {
    auto it = out.coeffs_.find(p);
    if (it == out.coeffs_.end()) {
      out.coeffs_[p] = c;
    } else {
      it->second += c;
      if (it->second == 0) out.coeffs_.erase(it);
    }
  }
  return out;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent neg;
  for (const auto& [p, c] : o.coeffs_) neg.coeffs_[p] = -c;
  return *this + neg;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent out;
  for (const auto& [p1, c1] : coeffs_) {
    for (const auto& [p2, c2] : o.coeffs_) {
      out.coeffs_[p1 + p2] += c1 * c2;
    }
  }
  for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();) {
    it = it->second == 0 ? out.coeffs_.erase(it) : std::next(it);
  }
  return out;
}

bool Laurent::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
         coeffs_.begin()->second == 1;
}

std::string Laurent::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    if (!first) os << (c > 0 ? "+" : "");
    os << c;
    if (p != 0) os << "t^" << p;
    first = false;
  }
  return os.str();
}

}  // namespace knitord
