#pragma once
// Rational functions in q kept in a canonical reduced form: numerator/denominator
// coprime, denominator with integer coprime coefficients, positive leading
// coefficient and minimal q-exponent zero.

#include "bozec/laurent.hpp"

namespace bozec {

class QScalar {
public:
  QScalar() : n_(), d_(1) {}
  QScalar(long v) : n_(v), d_(1) {}
  QScalar(const Rat& v) : n_(v), d_(1) {}
  QScalar(const LaurentPoly& p) : n_(p), d_(1) {}
  QScalar(const LaurentPoly& num, const LaurentPoly& den);
  static QScalar q_power(long k) { return QScalar(LaurentPoly::q(k)); }

  bool zero() const { return n_.zero(); }
  bool is_one() const { return n_.is_one() && d_.is_one(); }
  const LaurentPoly& num() const { return n_; }
  const LaurentPoly& den() const { return d_; }

  QScalar operator+(const QScalar& o) const;
  QScalar operator-(const QScalar& o) const;
  QScalar operator*(const QScalar& o) const;
  QScalar operator/(const QScalar& o) const;
  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

  QScalar inverse() const;
  QScalar pow(long n) const;
  QScalar bar() const; // q -> -q^{-1}

  bool operator==(const QScalar& o) const { return n_ == o.n_ && d_ == o.d_; }
  bool operator!=(const QScalar& o) const { return !(*this == o); }
  bool operator<(const QScalar& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return d_ < o.d_;
  }

  std::string str() const;

private:
  LaurentPoly n_, d_;
  void reduce();
};

} // namespace bozec
