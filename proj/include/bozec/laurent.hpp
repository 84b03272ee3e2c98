#pragma once
// Sparse Laurent polynomials in one variable q over arbitrary-precision rationals.

#include "bozec/rational.hpp"

#include <map>
#include <string>

namespace bozec {

class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long v);
  LaurentPoly(const Rat& v);
  static LaurentPoly monomial(const Rat& coeff, long exp);
  static LaurentPoly q(long exp = 1);

  bool zero() const { return c_.empty(); }
  bool is_one() const;
  long min_exp() const; // requires nonzero
  long max_exp() const; // requires nonzero
  Rat coeff(long exp) const;
  const std::map<long, Rat>& terms() const { return c_; }
  size_t term_count() const { return c_.size(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }
  bool operator<(const LaurentPoly& o) const { return c_ < o.c_; }

  LaurentPoly shifted(long k) const; // multiply by q^k
  LaurentPoly scaled(const Rat& r) const;
  LaurentPoly pow(unsigned long n) const;

  // Involution q -> -q^{-1}.
  LaurentPoly bar() const;

  Rat eval_at_one() const;

  // Exact division; returns false (and leaves quot untouched) when the remainder is nonzero.
  static bool divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot);

  // Canonical gcd: primitive integer coefficients, positive leading coefficient,
  // minimal exponent zero. gcd(0,0) = 0.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  // Rational content c such that (*this)/c has coprime integer coefficients and a
  // positive leading coefficient. Requires nonzero.
  Rat signed_content() const;
  LaurentPoly primitive_part() const; // shifted to min_exp 0 as well

  std::string str() const;

private:
  std::map<long, Rat> c_;
  void put(long e, const Rat& v);
};

} // namespace bozec
