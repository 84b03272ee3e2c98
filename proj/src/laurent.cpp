#include "bozec/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace bozec {

LaurentPoly::LaurentPoly(long v) {
  if (v != 0) c_[0] = Rat(v);
}

LaurentPoly::LaurentPoly(const Rat& v) {
  if (v != 0) c_[0] = v;
}

LaurentPoly LaurentPoly::monomial(const Rat& coeff, long exp) {
  LaurentPoly p;
  if (coeff != 0) p.c_[exp] = coeff;
  return p;
}

LaurentPoly LaurentPoly::q(long exp) { return monomial(Rat(1), exp); }

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

long LaurentPoly::min_exp() const {
  if (zero()) throw std::logic_error("min_exp of zero polynomial");
  return c_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (zero()) throw std::logic_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

Rat LaurentPoly::coeff(long exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rat(0) : it->second;
}

void LaurentPoly::put(long e, const Rat& v) {
  if (v == 0) c_.erase(e);
  else c_[e] = v;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) put(e, coeff(e) + v);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) put(e, coeff(e) - v);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) {
      Rat& slot = r.c_[e1 + e2];
      slot += v1 * v2;
    }
  for (auto it = r.c_.begin(); it != r.c_.end();) {
    if (it->second == 0) it = r.c_.erase(it);
    else ++it;
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& s) const {
  LaurentPoly r;
  if (s == 0) return r;
  for (const auto& [e, v] : c_) r.c_[e] = v * s;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
  LaurentPoly r(1);
  LaurentPoly base = *this;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) {
    Rat w = (e % 2 == 0) ? v : -v;
    r.c_[-e] = w;
  }
  return r;
}

Rat LaurentPoly::eval_at_one() const {
  Rat s(0);
  for (const auto& [e, v] : c_) s += v;
  return s;
}

bool LaurentPoly::divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot) {
  if (b.zero()) throw std::logic_error("division by zero polynomial");
  if (a.zero()) {
    quot = LaurentPoly();
    return true;
  }
  long sa = a.min_exp(), sb = b.min_exp();
  LaurentPoly rem = a.shifted(-sa);
  LaurentPoly den = b.shifted(-sb);
  LaurentPoly q;
  long dden = den.max_exp();
  Rat lead = den.coeff(dden);
  while (!rem.zero()) {
    long dr = rem.max_exp();
    if (dr < dden || rem.min_exp() < 0) return false;
    Rat c = rem.coeff(dr) / lead;
    LaurentPoly t = monomial(c, dr - dden);
    q += t;
    rem -= t * den;
  }
  quot = q.shifted(sa - sb);
  return true;
}

Rat LaurentPoly::signed_content() const {
  if (zero()) throw std::logic_error("content of zero polynomial");
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, v] : c_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  if (c_.rbegin()->second < 0) c = -c;
  return c;
}

LaurentPoly LaurentPoly::primitive_part() const {
  if (zero()) return LaurentPoly();
  Rat c = signed_content();
  LaurentPoly r = shifted(-min_exp());
  for (auto& [e, v] : r.c_) v /= c;
  return r;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.zero() && b.zero()) return LaurentPoly();
  if (a.zero()) return b.primitive_part();
  if (b.zero()) return a.primitive_part();
  LaurentPoly x = a.shifted(-a.min_exp());
  LaurentPoly y = b.shifted(-b.min_exp());
  // Euclidean remainders over Q on plain polynomials.
  while (!y.zero()) {
    LaurentPoly rem = x;
    long dy = y.max_exp();
    Rat lead = y.coeff(dy);
    while (!rem.zero() && rem.max_exp() >= dy) {
      Rat c = rem.coeff(rem.max_exp()) / lead;
      rem -= monomial(c, rem.max_exp() - dy) * y;
    }
    x = y;
    y = rem.zero() ? rem : rem.shifted(-rem.min_exp());
  }
  return x.primitive_part();
}

std::string LaurentPoly::str() const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    Rat a = v;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      if (a < 0) { os << " - "; a = -a; }
      else os << " + ";
    }
    first = false;
    bool unit = (a == 1);
    if (e == 0) {
      os << rat_str(a);
    } else {
      if (!unit) os << rat_str(a) << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

} // namespace bozec
