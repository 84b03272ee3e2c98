#pragma once
// Super q-integers, factorials and binomial coefficients for an index with
// symmetrizer d and parity p, built on the signed base (-1)^p q^d.

#include "bozec/laurent.hpp"

#include <vector>

namespace bozec {

// ((-1)^p q^d)^n as a Laurent monomial.
LaurentPoly signed_qi_power(long n, long d, int p);

// [n] = (((-1)^p q_i)^n - q_i^{-n}) / ((-1)^p q_i - q_i^{-1}); exact in Z[q,q^-1].
LaurentPoly super_qint(long n, long d, int p);

// [n]! = [1][2]...[n], n >= 0.
LaurentPoly super_qfact(long n, long d, int p);

// Super Gaussian binomial via the product/division formula; any integer a, t >= 0
// (zero for t < 0). Lies in Z[q,q^-1]; vanishes for 0 <= a < t.
LaurentPoly super_qbinom(long a, long t, long d, int p);

// Coefficients of prod_{k=1}^{N} (1 - q^k) up to degree N.
std::vector<long> euler_phi_coeffs(long n);

} // namespace bozec
