#pragma once
// Arbitrary-precision rationals backing every coefficient in the library.

#include <gmpxx.h>
#include <string>

namespace bozec {

using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace bozec
