#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace bslab {

namespace mp = boost::multiprecision;

// Working reals: MPFR-backed, precision settable at runtime (thread-local).
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Int = mp::cpp_int;

inline constexpr unsigned kDefaultPrecisionDigits = 30;
inline constexpr unsigned kMinPrecisionDigits = 15;

// Sets the working precision (significant decimal digits) for Reals created
// afterwards. Thread pools call adopt_global_precision() on worker entry.
void set_precision(unsigned digits);
unsigned precision();
void adopt_global_precision();

Real pi();
Real zeta(const Real& s); // mpfr_zeta, s != 1

Int factorial(int n);
Int binomial(int n, int k);

// floor(sqrt(n)) for n >= 0, exact
long long isqrt64(long long n);

// Decimal string with the current working precision (used by every emitter,
// so two runs at the same precision serialize identically).
std::string to_decimal(const Real& x);
std::string to_decimal(const Real& x, unsigned digits);

// Converts a big integer to Real at current precision + guard bits, so the
// relative conversion error stays below the working precision.
Real to_real(const Int& n);

} // namespace bslab
