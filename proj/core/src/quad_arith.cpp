#include "bslab/quad_arith.hpp"

#include "bslab/lfunc.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bslab {

long long squarefree_kernel(long long d) {
  if (d == 0)
    throw std::domain_error("squarefree kernel of 0");
  long long kernel = d < 0 ? -1 : 1;
  long long m = std::llabs(d);
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p)
      continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2)
      kernel *= p;
  }
  return kernel * m;
}

long long fundamental_discriminant(long long d) {
  const long long k = squarefree_kernel(d);
  if (k == 1)
    throw std::domain_error(
        "no quadratic field: squarefree kernel is 1 (d is a square)");
  const long long k_mod4 = ((k % 4) + 4) % 4;
  return k_mod4 == 1 ? k : 4 * k;
}

bool is_fundamental(long long D) {
  if (D == 0 || D == 1)
    return false;
  const long long m4 = ((D % 4) + 4) % 4;
  if (m4 == 2 || m4 == 3)
    return false;
  if (m4 == 1)
    return squarefree_kernel(D) == D;
  const long long q = D / 4;
  const long long q4 = ((q % 4) + 4) % 4;
  return (q4 == 2 || q4 == 3) && squarefree_kernel(q) == q;
}

int kronecker(long long a, unsigned long long n) {
  if (n == 0)
    return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if ((n & 1) == 0) {
    if ((a & 1) == 0)
      return 0;
    const long long am8 = ((a % 8) + 8) % 8;
    const int two_sym = (am8 == 1 || am8 == 7) ? 1 : -1;
    while ((n & 1) == 0) {
      n >>= 1;
      result *= two_sym;
    }
  }
  if (n == 1)
    return result;
  // n odd: the symbol is periodic in a with period n
  unsigned long long num =
      static_cast<unsigned long long>(((a % static_cast<long long>(n)) +
                                       static_cast<long long>(n)) %
                                      static_cast<long long>(n));
  unsigned long long den = n;
  while (num != 0) {
    while ((num & 1) == 0) {
      num >>= 1;
      const auto d8 = den % 8;
      if (d8 == 3 || d8 == 5)
        result = -result;
    }
    std::swap(num, den);
    if (num % 4 == 3 && den % 4 == 3)
      result = -result;
    num %= den;
  }
  return den == 1 ? result : 0;
}

namespace {

void require_fundamental(long long D) {
  if (!is_fundamental(D))
    throw std::domain_error("not a fundamental discriminant: " +
                            std::to_string(D));
  if (std::llabs(D) > kDiscriminantCap)
    throw std::domain_error("|D| exceeds the sweep guard 10^7");
}

long long class_number_imaginary(long long D) {
  const long long absD = -D;
  long long h = 0;
  const long long a_max = isqrt64(absD / 3);
  for (long long a = 1; a <= a_max; ++a) {
    for (long long b = -a + 1; b <= a; ++b) {
      if (((b - D) & 1) != 0)
        continue; // b and D must share parity
      const long long t = b * b + absD;
      if (t % (4 * a))
        continue;
      const long long c = t / (4 * a);
      if (c < a)
        continue;
      if (b < 0 && (-b == a || a == c))
        continue; // convention: b >= 0 on the boundary
      ++h;
    }
  }
  return h;
}

struct IndefiniteForm {
  long long a, b, c;
  bool operator<(const IndefiniteForm& o) const {
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
  }
};

// Reduction operator on reduced indefinite forms: (a,b,c) -> (c, r, ...),
// with r = -b mod 2|c| normalized into the window (sqrt(D)-2|c|, sqrt(D)).
IndefiniteForm rho_step(const IndefiniteForm& f, long long D, long long s) {
  const long long ac = f.c;
  const long long absc = std::llabs(ac);
  const long long t = 2 * absc;
  long long r = (((-f.b) % t) + t) % t;
  if (absc > s) {
    if (r > absc)
      r -= t;
  } else {
    const long long q = s - r;
    r += (q >= 0 ? q / t : -((-q + t - 1) / t)) * t;
  }
  return {ac, r, (r * r - D) / (4 * ac)};
}

long long class_number_real(long long D) {
  const long long s = isqrt64(D);
  std::vector<IndefiniteForm> forms;
  const long long b0 = (D % 2 == 0) ? 2 : 1;
  for (long long b = b0; b <= s; b += 2) {
    const long long m = (D - b * b) / 4;
    // reduced window for |a|: (sqrt(D)-b)/2 < |a| < (sqrt(D)+b)/2
    const long long lo = std::max<long long>(1, (s - b) / 2);
    const long long hi = (s + b) / 2 + 1;
    for (long long u = lo; u <= hi; ++u) {
      if (m % u)
        continue;
      if ((2 * u + b) * (2 * u + b) <= D)
        continue;
      if (2 * u > b && (2 * u - b) * (2 * u - b) >= D)
        continue;
      forms.push_back({u, b, -(m / u)});
      forms.push_back({-u, b, m / u});
    }
  }
  std::map<IndefiniteForm, bool> visited;
  for (const auto& f : forms)
    visited[f] = false;
  long long cycles = 0;
  for (const auto& f : forms) {
    if (visited[f])
      continue;
    ++cycles;
    IndefiniteForm g = f;
    do {
      auto it = visited.find(g);
      if (it == visited.end())
        throw std::logic_error("reduction stepped outside the reduced set");
      it->second = true;
      g = rho_step(g, D, s);
    } while (!(g.a == f.a && g.b == f.b && g.c == f.c));
  }
  return cycles;
}

} // namespace

long long class_number(long long D) {
  require_fundamental(D);
  return D < 0 ? class_number_imaginary(D) : class_number_real(D);
}

PellUnit fundamental_unit(long long D) {
  require_fundamental(D);
  if (D < 0)
    throw std::domain_error("fundamental unit requires a real field (D > 0)");
  const long long s = isqrt64(D);
  // continued fraction of (P + sqrt(D))/Q starting at ((D mod 2), 2)
  std::vector<std::tuple<long long, long long, long long>> steps; // P, Q, a
  std::map<std::pair<long long, long long>, std::size_t> seen;
  long long P = D & 1, Q = 2;
  std::size_t first = 0;
  for (;;) {
    auto key = std::make_pair(P, Q);
    if (auto it = seen.find(key); it != seen.end()) {
      first = it->second;
      break;
    }
    seen.emplace(key, steps.size());
    if (Q <= 0)
      throw std::logic_error("continued fraction left the positive branch");
    const long long a = (P + s) / Q;
    steps.emplace_back(P, Q, a);
    const long long Pn = a * Q - P;
    const long long Qn = (D - Pn * Pn) / Q;
    P = Pn;
    Q = Qn;
    if (steps.size() > 4'000'000)
      throw std::runtime_error("continued fraction period too long");
  }
  // multiply the period block [first, end): M = prod [[a,1],[1,0]]
  Int A = 1, B = 0, C = 0, Dm = 1;
  for (std::size_t i = first; i < steps.size(); ++i) {
    const Int a = std::get<2>(steps[i]);
    const Int A2 = A * a + B, C2 = C * a + Dm;
    B = A;
    Dm = C;
    A = A2;
    C = C2;
  }
  const long long Pk = std::get<0>(steps[first]);
  const long long Qk = std::get<1>(steps[first]);
  // unit = C*omega_k + Dm with omega_k = (Pk + sqrt(D))/Qk
  const Int x_num = 2 * (C * Pk + Dm * Qk);
  const Int y_num = 2 * C;
  if (x_num % Qk != 0 || y_num % Qk != 0)
    throw std::logic_error("unit is not integral over the maximal order");
  PellUnit u{x_num / Qk, y_num / Qk, 0};
  const Int pell = u.x * u.x - D * u.y * u.y;
  if (pell == 4)
    u.norm_sign = 1;
  else if (pell == -4)
    u.norm_sign = -1;
  else
    throw std::logic_error("continued fraction did not produce a unit");
  return u;
}

Real regulator(long long D) {
  require_fundamental(D);
  if (D < 0)
    return Real(1);
  const PellUnit u = fundamental_unit(D);
  const Real xr = to_real(u.x);
  const Real yr = to_real(u.y);
  return log((xr + yr * sqrt(Real(D))) / 2);
}

FieldInvariants field_invariants(long long D) {
  require_fundamental(D);
  FieldInvariants inv;
  inv.D = D;
  if (D < 0) {
    inv.r1 = 0;
    inv.r2 = 1;
    inv.mu = D == -3 ? 6 : (D == -4 ? 4 : 2);
    inv.R = 1;
  } else {
    inv.r1 = 2;
    inv.r2 = 0;
    inv.mu = 2;
    inv.R = regulator(D);
  }
  inv.h = class_number(D);
  const Real absD = Real(std::llabs(D));
  inv.g = log(absD) / 2;
  const Real two_pi_pow = inv.r2 ? 2 * pi() : Real(1);
  inv.rho = Real(1 << inv.r1) * two_pi_pow * Real(inv.h) * inv.R /
            (Real(inv.mu) * sqrt(absD));
  return inv;
}

Real bs_ratio(const FieldInvariants& inv) {
  return log(Real(inv.h) * inv.R) / inv.g;
}

long long third_discriminant(long long D1, long long D2) {
  if (D1 == D2)
    throw std::domain_error("biquadratic field needs distinct discriminants");
  require_fundamental(D1);
  require_fundamental(D2);
  const long long k1 = squarefree_kernel(D1);
  const long long k2 = squarefree_kernel(D2);
  const long long g = std::gcd(std::llabs(k1), std::llabs(k2));
  return fundamental_discriminant((k1 / g) * (k2 / g));
}

BiquadraticInvariants biquadratic_invariants(long long D1, long long D2) {
  BiquadraticInvariants inv;
  inv.D1 = D1;
  inv.D2 = D2;
  inv.D3 = third_discriminant(D1, D2);
  inv.disc = abs(Int(D1) * Int(D2) * Int(inv.D3));
  const bool totally_real = D1 > 0 && D2 > 0 && inv.D3 > 0;
  inv.r1 = totally_real ? 4 : 0;
  inv.r2 = totally_real ? 0 : 2;
  inv.g = log(to_real(inv.disc)) / 2;
  inv.rho = L1_exact(D1) * L1_exact(D2) * L1_exact(inv.D3);
  return inv;
}

} // namespace bslab
