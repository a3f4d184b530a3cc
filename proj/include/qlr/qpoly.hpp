#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace qlr {

// Integer Laurent polynomial in q; zero coefficients are never stored.
class QPoly {
 public:
  using Coeff = std::int64_t;

  QPoly() = default;
  QPoly(Coeff constant);  // NOLINT(google-explicit-constructor)
  static QPoly monomial(int exponent, Coeff c = 1);

  const std::map<int, Coeff>& terms() const { return terms_; }
  Coeff coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  int low_degree() const;
  Coeff at_one() const;
  bool nonnegative() const;
  // Coefficientwise comparison.
  bool leq(const QPoly& other) const;

  void add_term(int exponent, Coeff c);
  QPoly shifted(int k) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(Coeff c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, Coeff c) { return a *= c; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const { return *this * -1; }

  bool operator==(const QPoly&) const = default;

 private:
  std::map<int, Coeff> terms_;
};

// Ascending order, e.g. "-1 + q", "q^3 + 3q^4"; zero prints as "0".
std::string to_string(const QPoly& p);

}  // namespace qlr
