#include "bslab/numeric.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace bslab {

namespace {
std::atomic<unsigned> g_digits{kDefaultPrecisionDigits};
// Runs at load on the main thread; worker threads adopt explicitly.
const bool g_precision_init = [] {
  Real::default_precision(kDefaultPrecisionDigits);
  return true;
}();
} // namespace

void set_precision(unsigned digits) {
  if (digits < kMinPrecisionDigits)
    throw std::domain_error("working precision must be >= 15 digits");
  g_digits.store(digits, std::memory_order_relaxed);
  Real::default_precision(digits);
}

unsigned precision() { return Real::default_precision(); }

void adopt_global_precision() {
  Real::default_precision(g_digits.load(std::memory_order_relaxed));
}

Real pi() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

Real zeta(const Real& s) {
  if (s == 1)
    throw std::domain_error("zeta pole at s = 1");
  Real z;
  z.precision(s.precision());
  mpfr_zeta(z.backend().data(), s.backend().data(), MPFR_RNDN);
  return z;
}

Int factorial(int n) {
  if (n < 0)
    throw std::domain_error("factorial of negative integer");
  Int f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  Int b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

long long isqrt64(long long n) {
  if (n < 0)
    throw std::domain_error("isqrt of negative integer");
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

std::string to_decimal(const Real& x) { return to_decimal(x, precision()); }

std::string to_decimal(const Real& x, unsigned digits) {
  return x.str(digits);
}

Real to_real(const Int& n) {
  // 20 guard digits so converting huge integers (fundamental units) keeps
  // full working accuracy in the subsequent log.
  Real r;
  r.precision(precision() + 20);
  r.assign(n.str());
  return r;
}

} // namespace bslab
