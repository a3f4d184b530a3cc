#include "qlr/qpoly.hpp"

#include <stdexcept>

namespace qlr {

QPoly::QPoly(Coeff constant) {
  if (constant != 0) terms_[0] = constant;
}

QPoly QPoly::monomial(int exponent, Coeff c) {
  QPoly p;
  p.add_term(exponent, c);
  return p;
}

QPoly::Coeff QPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int QPoly::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

int QPoly::low_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.begin()->first;
}

QPoly::Coeff QPoly::at_one() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool QPoly::nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool QPoly::leq(const QPoly& other) const { return (other - *this).nonnegative(); }

void QPoly::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  Coeff& slot = terms_[exponent];
  slot += c;
  if (slot == 0) terms_.erase(exponent);
}

QPoly QPoly::shifted(int k) const {
  QPoly p;
  for (const auto& [e, c] : terms_) p.terms_[e + k] = c;
  return p;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPoly& QPoly::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    QPoly::Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += "q";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace qlr
