#include "bozec/qscalar.hpp"

#include <stdexcept>

namespace bozec {

QScalar::QScalar(const LaurentPoly& num, const LaurentPoly& den) : n_(num), d_(den) {
  if (d_.zero()) throw std::logic_error("zero denominator");
  reduce();
}

void QScalar::reduce() {
  if (n_.zero()) {
    d_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = LaurentPoly::gcd(n_, d_);
  if (!g.is_one()) {
    LaurentPoly qn, qd;
    bool okn = LaurentPoly::divide(n_, g, qn);
    bool okd = LaurentPoly::divide(d_, g, qd);
    if (!okn || !okd) throw std::logic_error("gcd division failed");
    n_ = qn;
    d_ = qd;
  }
  long s = d_.min_exp();
  if (s != 0) {
    d_ = d_.shifted(-s);
    n_ = n_.shifted(-s);
  }
  Rat c = d_.signed_content();
  if (c != 1) {
    d_ = d_.scaled(Rat(1) / c);
    n_ = n_.scaled(Rat(1) / c);
  }
}

QScalar QScalar::operator+(const QScalar& o) const {
  return QScalar(n_ * o.d_ + o.n_ * d_, d_ * o.d_);
}

QScalar QScalar::operator-(const QScalar& o) const {
  return QScalar(n_ * o.d_ - o.n_ * d_, d_ * o.d_);
}

QScalar QScalar::operator*(const QScalar& o) const {
  return QScalar(n_ * o.n_, d_ * o.d_);
}

QScalar QScalar::operator/(const QScalar& o) const {
  if (o.zero()) throw std::logic_error("division by zero scalar");
  return QScalar(n_ * o.d_, d_ * o.n_);
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.n_ = -r.n_;
  return r;
}

QScalar QScalar::inverse() const {
  if (zero()) throw std::logic_error("inverse of zero scalar");
  return QScalar(d_, n_);
}

QScalar QScalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  QScalar r(1), base = *this;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

QScalar QScalar::bar() const { return QScalar(n_.bar(), d_.bar()); }

std::string QScalar::str() const {
  if (d_.is_one()) return n_.str();
  return "(" + n_.str() + ")/(" + d_.str() + ")";
}

} // namespace bozec
