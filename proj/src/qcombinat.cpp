#include "bozec/qcombinat.hpp"

#include <stdexcept>

namespace bozec {

LaurentPoly signed_qi_power(long n, long d, int p) {
  Rat sign = (p != 0 && (n % 2 != 0)) ? Rat(-1) : Rat(1);
  return LaurentPoly::monomial(sign, n * d);
}

LaurentPoly super_qint(long n, long d, int p) {
  LaurentPoly num = signed_qi_power(n, d, p) - LaurentPoly::q(-n * d);
  LaurentPoly den = signed_qi_power(1, d, p) - LaurentPoly::q(-d);
  LaurentPoly quot;
  if (!LaurentPoly::divide(num, den, quot))
    throw std::logic_error("super_qint: inexact division");
  return quot;
}

LaurentPoly super_qfact(long n, long d, int p) {
  if (n < 0) throw std::logic_error("super_qfact: negative argument");
  LaurentPoly r(1);
  for (long s = 1; s <= n; ++s) r *= super_qint(s, d, p);
  return r;
}

LaurentPoly super_qbinom(long a, long t, long d, int p) {
  if (t < 0) return LaurentPoly();
  if (t == 0) return LaurentPoly(1);
  LaurentPoly num(1), den(1);
  for (long s = 0; s < t; ++s)
    num *= signed_qi_power(a - s, d, p) - LaurentPoly::q((s - a) * d);
  for (long s = 1; s <= t; ++s)
    den *= signed_qi_power(s, d, p) - LaurentPoly::q(-s * d);
  LaurentPoly quot;
  if (!LaurentPoly::divide(num, den, quot))
    throw std::logic_error("super_qbinom: inexact division");
  return quot;
}

std::vector<long> euler_phi_coeffs(long n) {
  if (n < 0) throw std::logic_error("euler_phi_coeffs: negative bound");
  std::vector<long> c(static_cast<size_t>(n) + 1, 0);
  c[0] = 1;
  for (long k = 1; k <= n; ++k)
    for (long j = n; j >= k; --j) c[j] -= c[j - k];
  return c;
}

} // namespace bozec
