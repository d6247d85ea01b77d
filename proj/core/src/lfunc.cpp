#include "bslab/lfunc.hpp"

#include "bslab/quad_arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bslab {

FieldRef FieldRef::quadratic(long long D) {
  if (!is_fundamental(D))
    throw std::domain_error("not a fundamental discriminant: " +
                            std::to_string(D));
  FieldRef f;
  f.kind = Kind::Quadratic;
  f.D1 = D;
  return f;
}

FieldRef FieldRef::biquadratic(long long D1, long long D2) {
  third_discriminant(D1, D2); // validates the pair
  FieldRef f;
  f.kind = Kind::Biquadratic;
  f.D1 = D1;
  f.D2 = D2;
  return f;
}

int FieldRef::degree() const {
  switch (kind) {
  case Kind::Rationals:
    return 1;
  case Kind::Quadratic:
    return 2;
  case Kind::Biquadratic:
    return 4;
  }
  return 1;
}

std::string FieldRef::str() const {
  switch (kind) {
  case Kind::Rationals:
    return "Q";
  case Kind::Quadratic:
    return "quadratic(" + std::to_string(D1) + ")";
  case Kind::Biquadratic:
    return "biquadratic(" + std::to_string(D1) + "," + std::to_string(D2) +
           ")";
  }
  return "Q";
}

std::vector<long long> primes_up_to(std::uint64_t limit) {
  std::vector<long long> primes;
  if (limit < 2)
    return primes;
  std::vector<char> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i])
      continue;
    primes.push_back(static_cast<long long>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i)
      composite[j] = 1;
  }
  return primes;
}

LocalSplitting prime_splitting(const FieldRef& field, long long p) {
  switch (field.kind) {
  case FieldRef::Kind::Rationals:
    return {1, 0};
  case FieldRef::Kind::Quadratic: {
    const int chi = kronecker(field.D1, static_cast<unsigned long long>(p));
    if (chi == 1)
      return {2, 0};
    if (chi == -1)
      return {0, 1};
    return {1, 0};
  }
  case FieldRef::Kind::Biquadratic: {
    const long long D3 = third_discriminant(field.D1, field.D2);
    const auto up = static_cast<unsigned long long>(p);
    const int v[3] = {kronecker(field.D1, up), kronecker(field.D2, up),
                      kronecker(D3, up)};
    int plus = 0, minus = 0;
    for (int x : v) {
      if (x == 1)
        ++plus;
      else if (x == -1)
        ++minus;
    }
    // local factor (1-X)^{-(1+plus)} (1+X)^{-minus}; each (1-X)(1+X) pair
    // is one prime of norm p^2
    return {1 + plus - minus, minus};
  }
  }
  return {1, 0};
}

namespace {

void check_cutoff(std::uint32_t X) {
  if (X < 1 || X > kCoefficientCap)
    throw std::domain_error("coefficient cutoff out of range [1, 10^6]");
}

// local zeta coefficients a_{p^k} from the inverse-root multiset
std::vector<std::int64_t> local_coefficients(const LocalSplitting& sp,
                                             int k_max) {
  // denominator (1-X)^{deg1} (1-X^2)^{deg2} expanded
  std::vector<std::int64_t> den{1};
  auto mul_factor = [&den](int step, int times) {
    for (int t = 0; t < times; ++t) {
      std::vector<std::int64_t> next(den.size() + step, 0);
      for (std::size_t i = 0; i < den.size(); ++i) {
        next[i] += den[i];
        next[i + step] -= den[i];
      }
      den = std::move(next);
    }
  };
  mul_factor(1, sp.deg1);
  mul_factor(2, sp.deg2);
  std::vector<std::int64_t> a(k_max + 1, 0);
  a[0] = 1;
  for (int k = 1; k <= k_max; ++k) {
    std::int64_t acc = 0;
    for (std::size_t j = 1; j < den.size() && j <= static_cast<std::size_t>(k);
         ++j)
      acc += den[j] * a[k - j];
    a[k] = -acc;
  }
  return a;
}

} // namespace

DirichletData dedekind_coefficients(const FieldRef& field, std::uint32_t X) {
  check_cutoff(X);
  DirichletData data;
  data.field = field;
  data.a.assign(static_cast<std::size_t>(X) + 1, 0);

  switch (field.kind) {
  case FieldRef::Kind::Rationals:
    std::fill(data.a.begin() + 1, data.a.end(), 1);
    break;
  case FieldRef::Kind::Quadratic: {
    for (std::uint32_t d = 1; d <= X; ++d) {
      const int chi = kronecker(field.D1, d);
      if (!chi)
        continue;
      for (std::uint32_t m = d; m <= X; m += d)
        data.a[m] += chi;
    }
    break;
  }
  case FieldRef::Kind::Biquadratic: {
    // smallest-prime-factor sieve, then multiplicative fill from the local
    // Euler factors
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(X) + 1, 0);
    const auto primes = primes_up_to(X);
    for (long long p : primes)
      for (std::uint64_t m = static_cast<std::uint64_t>(p); m <= X;
           m += static_cast<std::uint64_t>(p))
        if (!spf[m])
          spf[m] = static_cast<std::uint32_t>(p);
    data.a[1] = 1;
    std::vector<std::vector<std::int64_t>> local(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const long long p = primes[i];
      int k_max = 0;
      std::uint64_t pk = 1;
      while (pk <= X / static_cast<std::uint64_t>(p)) {
        pk *= static_cast<std::uint64_t>(p);
        ++k_max;
      }
      local[i] = local_coefficients(prime_splitting(field, p), k_max);
    }
    // index of each prime for local lookup
    std::vector<std::uint32_t> prime_idx(static_cast<std::size_t>(X) + 1, 0);
    for (std::size_t i = 0; i < primes.size(); ++i)
      prime_idx[primes[i]] = static_cast<std::uint32_t>(i);
    for (std::uint64_t n = 2; n <= X; ++n) {
      const std::uint32_t p = spf[n];
      std::uint64_t m = n;
      int k = 0;
      while (m % p == 0) {
        m /= p;
        ++k;
      }
      data.a[n] = local[prime_idx[p]][k] * data.a[m];
    }
    break;
  }
  }
  return data;
}

std::vector<NormCount> norm_counts(const FieldRef& field, std::uint64_t q_max) {
  std::vector<NormCount> out;
  for (long long p : primes_up_to(q_max)) {
    const auto sp = prime_splitting(field, p);
    if (sp.deg1)
      out.push_back({static_cast<std::uint64_t>(p), p, 1, sp.deg1});
    const auto p2 = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p);
    if (sp.deg2 && p2 <= q_max)
      out.push_back({p2, p, 2, sp.deg2});
  }
  std::sort(out.begin(), out.end(),
            [](const NormCount& a, const NormCount& b) { return a.q < b.q; });
  return out;
}

Real L1_exact(long long D) {
  if (!is_fundamental(D))
    throw std::domain_error("not a fundamental discriminant: " +
                            std::to_string(D));
  if (std::llabs(D) > kCoefficientCap)
    throw std::domain_error("|D| exceeds the L(1,chi) guard 10^6");
  const long long q = std::llabs(D);
  if (D < 0) {
    // L(1,chi) = -(pi / |D|^{3/2}) sum a chi(a)
    long long s = 0;
    for (long long a = 1; a < q; ++a)
      s += a * kronecker(D, static_cast<unsigned long long>(a));
    const Real absD = Real(q);
    return -pi() * Real(s) / (absD * sqrt(absD));
  }
  // L(1,chi) = -(1/sqrt(D)) sum chi(a) log sin(pi a / D); chi is even, so
  // fold the sum at D/2
  const Real pi_over_D = pi() / Real(q);
  Real sum = 0;
  for (long long a = 1; 2 * a < q; ++a) {
    const int chi = kronecker(D, static_cast<unsigned long long>(a));
    if (!chi)
      continue;
    const Real term = log(sin(pi_over_D * Real(a)));
    sum += chi > 0 ? term : -term;
  }
  return -2 * sum / sqrt(Real(q));
}

Real rho_of(const FieldRef& field) {
  switch (field.kind) {
  case FieldRef::Kind::Rationals:
    return Real(1);
  case FieldRef::Kind::Quadratic:
    return L1_exact(field.D1);
  case FieldRef::Kind::Biquadratic:
    return L1_exact(field.D1) * L1_exact(field.D2) *
           L1_exact(third_discriminant(field.D1, field.D2));
  }
  return Real(1);
}

namespace {

Real polya_vinogradov(long long D) {
  const Real q = Real(std::llabs(D));
  return sqrt(q) * log(q);
}

} // namespace

BoundedValue L_truncated(long long D, const Real& s, std::uint32_t X) {
  if (!is_fundamental(D))
    throw std::domain_error("not a fundamental discriminant: " +
                            std::to_string(D));
  if (s <= 0)
    throw std::domain_error("L_truncated needs s > 0");
  if (X < static_cast<std::uint64_t>(std::llabs(D)))
    throw std::domain_error("cutoff X must be at least |D|");
  Real value = 0;
  for (std::uint32_t n = 1; n <= X; ++n) {
    const int chi = kronecker(D, n);
    if (!chi)
      continue;
    const Real term = pow(Real(n), -s);
    value += chi > 0 ? term : -term;
  }
  const Real bound = 2 * polya_vinogradov(D) * pow(Real(X), -s);
  return {value, bound};
}

std::vector<BoundedValue> L_truncated_grid(long long D,
                                           const std::vector<double>& s_grid,
                                           std::uint32_t X) {
  if (!is_fundamental(D))
    throw std::domain_error("not a fundamental discriminant: " +
                            std::to_string(D));
  if (X < static_cast<std::uint64_t>(std::llabs(D)))
    throw std::domain_error("cutoff X must be at least |D|");
  const std::size_t k = s_grid.size();
  std::vector<double> acc(k, 0.0);
  bool uniform = k >= 2;
  const double step = k >= 2 ? s_grid[1] - s_grid[0] : 0.0;
  for (std::size_t j = 2; j < k && uniform; ++j)
    if (std::abs((s_grid[j] - s_grid[j - 1]) - step) > 1e-12)
      uniform = false;
  for (std::uint32_t n = 1; n <= X; ++n) {
    const int chi = kronecker(D, n);
    if (!chi)
      continue;
    const double ln = std::log(static_cast<double>(n));
    if (uniform) {
      // n^{-s_j} = n^{-s_0} (n^{-step})^j
      double term = std::exp(-s_grid[0] * ln);
      const double ratio = std::exp(-step * ln);
      for (std::size_t j = 0; j < k; ++j) {
        acc[j] += chi > 0 ? term : -term;
        term *= ratio;
      }
    } else {
      for (std::size_t j = 0; j < k; ++j) {
        const double term = std::exp(-s_grid[j] * ln);
        acc[j] += chi > 0 ? term : -term;
      }
    }
  }
  const Real pv2 = 2 * polya_vinogradov(D);
  std::vector<BoundedValue> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    Real bound = pv2 * pow(Real(X), Real(-s_grid[j])) + Real("1e-9");
    out.push_back({Real(acc[j]), std::move(bound)});
  }
  return out;
}

std::vector<ChebyshevJump> chebyshev_jumps(const FieldRef& field, double x) {
  if (x < 1 || x > 1e7)
    throw std::domain_error("Chebyshev cutoff out of range [1, 10^7]");
  const auto limit = static_cast<std::uint64_t>(x);
  std::vector<ChebyshevJump> jumps;
  for (long long p : primes_up_to(limit)) {
    const auto sp = prime_splitting(field, p);
    std::uint64_t pk = 1;
    for (int k = 1;; ++k) {
      if (pk > limit / static_cast<std::uint64_t>(p))
        break;
      pk *= static_cast<std::uint64_t>(p);
      if (static_cast<double>(pk) > x)
        break;
      const int w = sp.deg1 + (k % 2 == 0 ? 2 * sp.deg2 : 0);
      if (w)
        jumps.push_back({pk, p, w});
    }
  }
  std::sort(jumps.begin(), jumps.end(),
            [](const ChebyshevJump& a, const ChebyshevJump& b) {
              return a.n < b.n;
            });
  return jumps;
}

Real chebyshev_G(const FieldRef& field, double x) {
  if (x < 1 || x > 1e7)
    throw std::domain_error("Chebyshev cutoff out of range [1, 10^7]");
  const auto limit = static_cast<std::uint64_t>(x);
  Real g = 0;
  for (long long p : primes_up_to(limit)) {
    const auto sp = prime_splitting(field, p);
    long long total = 0;
    std::uint64_t pk = 1;
    for (int k = 1;; ++k) {
      if (pk > limit / static_cast<std::uint64_t>(p))
        break;
      pk *= static_cast<std::uint64_t>(p);
      if (static_cast<double>(pk) > x)
        break;
      total += sp.deg1 + (k % 2 == 0 ? 2 * sp.deg2 : 0);
    }
    if (total)
      g += Real(total) * log(Real(p));
  }
  return g;
}

namespace {

std::vector<long long> character_list(const FieldRef& field) {
  switch (field.kind) {
  case FieldRef::Kind::Rationals:
    return {};
  case FieldRef::Kind::Quadratic:
    return {field.D1};
  case FieldRef::Kind::Biquadratic:
    return {field.D1, field.D2, third_discriminant(field.D1, field.D2)};
  }
  return {};
}

// zeta(s) via partial sum plus integral completion; rigorous bound X^{-s}.
BoundedValue zeta_truncated(const Real& s, std::uint32_t X) {
  Real value = 0;
  for (std::uint32_t n = 1; n <= X; ++n)
    value += pow(Real(n), -s);
  value += pow(Real(X), 1 - s) / (s - 1);
  return {value, pow(Real(X), -s)};
}

} // namespace

ZFPair F_and_Z(const FieldRef& field, const Real& s, std::uint32_t X) {
  check_cutoff(X);
  if (s - 1 < Real("0.01"))
    throw std::domain_error("F_and_Z needs s >= 1.01");
  const Real rho = rho_of(field);

  std::vector<BoundedValue> factors;
  factors.push_back(zeta_truncated(s, X));
  for (long long D : character_list(field))
    factors.push_back(L_truncated(D, s, X));

  Real prod = 1, prod_bound = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Real err_term = factors[i].bound;
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (j != i)
        err_term *= abs(factors[j].value) + factors[j].bound;
    prod_bound += err_term;
    prod *= factors[i].value;
  }

  ZFPair out;
  out.s = s;
  out.F = (s - 1) * prod / rho;
  out.F_bound = (s - 1) * prod_bound / rho;
  if (out.F_bound >= abs(out.F))
    throw std::runtime_error("truncation bound dominates F; raise X");

  // Z from the von Mangoldt sum over prime-ideal powers
  Real sum = 0;
  for (long long p : primes_up_to(X)) {
    const auto sp = prime_splitting(field, p);
    const Real logp = log(Real(p));
    std::uint64_t pk = 1;
    for (int k = 1;; ++k) {
      if (pk > X / static_cast<std::uint64_t>(p))
        break;
      pk *= static_cast<std::uint64_t>(p);
      const int w = sp.deg1 + (k % 2 == 0 ? 2 * sp.deg2 : 0);
      if (w)
        sum += Real(w) * logp * pow(Real(pk), -s);
    }
  }
  out.Z = 1 / (s - 1) - sum;
  // psi(t) <= 1.04 t and the field has at most degree() ideal primes per
  // rational prime power
  out.Z_bound = Real(field.degree()) * Real("1.04") * s *
                pow(Real(X), 1 - s) / (s - 1);
  return out;
}

MellinReport mellin_residual(const FieldRef& field, const Real& s,
                             std::uint32_t X) {
  if (X < 1000)
    throw std::domain_error("mellin_residual needs X >= 10^3");
  check_cutoff(X);
  if (!(s > 1 && s <= Real("2.5")))
    throw std::domain_error("mellin_residual needs s in (1, 2.5]");

  const auto coeff = dedekind_coefficients(field, X);

  Real z_sum = 0;     // sum Lambda_K(n) n^{-s}, weights from coefficients
  Real g_sum = 0;     // sum over jumps of weight * log p * n^{-s}
  Real g_at_X = 0;    // G(X)
  for (long long p : primes_up_to(X)) {
    const auto sp = prime_splitting(field, p);
    const Real logp = log(Real(p));
    // Newton recursion: k a_{p^k} = sum_{j=1..k} c_j a_{p^{k-j}}
    std::vector<std::int64_t> c;
    std::uint64_t pk = 1;
    for (int k = 1;; ++k) {
      if (pk > X / static_cast<std::uint64_t>(p))
        break;
      pk *= static_cast<std::uint64_t>(p);
      std::int64_t acc = static_cast<std::int64_t>(k) * coeff.a[pk];
      std::uint64_t pj = 1;
      for (int j = 1; j < k; ++j) {
        pj *= static_cast<std::uint64_t>(p);
        acc -= c[j - 1] * coeff.a[pk / pj];
      }
      c.push_back(acc);
      const int w_split = sp.deg1 + (k % 2 == 0 ? 2 * sp.deg2 : 0);
      if (acc || w_split) {
        const Real nks = pow(Real(pk), -s);
        if (acc)
          z_sum += Real(acc) * logp * nks;
        if (w_split) {
          g_sum += Real(w_split) * logp * nks;
          g_at_X += Real(w_split) * logp;
        }
      }
    }
  }

  const Real Z = 1 / (s - 1) - z_sum;
  const Real Xr = Real(static_cast<std::uint64_t>(X));
  // closed form of int_1^X (x - G(x)) x^{-s-1} dx between the jumps of G
  const Real integral =
      (1 - pow(Xr, 1 - s)) / (s - 1) - (g_sum - g_at_X * pow(Xr, -s)) / s;

  MellinReport rep;
  rep.field = field;
  rep.s = s;
  rep.X = X;
  rep.residual = abs(Z / s - (integral - 1 / s));
  rep.tail_estimate = pow(Xr, 1 - s) / (s - 1) + g_at_X * pow(Xr, -s) / s;
  return rep;
}

} // namespace bslab
