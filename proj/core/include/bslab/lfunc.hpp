#pragma once

#include "bslab/numeric.hpp"

#include <cstdint>
#include <vector>

namespace bslab {

// Field descriptor for Dedekind zeta numerics: Q, a quadratic field, or the
// biquadratic compositum of two quadratic fields.
struct FieldRef {
  enum class Kind { Rationals, Quadratic, Biquadratic };
  Kind kind = Kind::Rationals;
  long long D1 = 0, D2 = 0;

  static FieldRef rationals() { return {}; }
  static FieldRef quadratic(long long D);
  static FieldRef biquadratic(long long D1, long long D2);

  int degree() const;
  std::string str() const;
};

inline constexpr std::uint32_t kCoefficientCap = 1'000'000;

// Ideal counts a_n = #{ideals of norm n}, n = 1..X.
struct DirichletData {
  FieldRef field;
  std::vector<std::int64_t> a; // a[0] unused, a[n] for n >= 1
  std::uint32_t cutoff() const { return static_cast<std::uint32_t>(a.size() - 1); }
};

// Q: all ones. Quadratic D: divisor sums sum_{d|n} chi_D(d). Biquadratic:
// multiplicative expansion of the local Euler factors read off the splitting
// of each prime (so the 4-fold character convolution stays an independent
// cross-check).
DirichletData dedekind_coefficients(const FieldRef& field, std::uint32_t X);

// Prime ideals of norm p and p^2 above p.
struct LocalSplitting {
  int deg1 = 0; // N_p
  int deg2 = 0; // N_{p^2}
};
LocalSplitting prime_splitting(const FieldRef& field, long long p);

// Prime powers q = p^f <= q_max with N_q > 0.
struct NormCount {
  std::uint64_t q;
  long long p;
  int f;
  int count;
};
std::vector<NormCount> norm_counts(const FieldRef& field, std::uint64_t q_max);

// Exact L(1, chi_D) by the finite character sums (odd: weighted sum of
// residues; even: log-sin sum). Positive for every fundamental D.
Real L1_exact(long long D);

// Residue of the Dedekind zeta function at s = 1 for the supported fields.
Real rho_of(const FieldRef& field);

struct BoundedValue {
  Real value;
  Real bound; // rigorous truncation bound (Polya-Vinogradov based)
};

// Partial sum sum_{n<=X} chi_D(n) n^{-s} with tail bound 2 sqrt|D| log|D| X^{-s}.
// Valid for s > 0; the scan uses s in (1/2, 1).
BoundedValue L_truncated(long long D, const Real& s, std::uint32_t X);

// Same partial sums evaluated on a whole grid of s values at once; values
// accumulate in hardware doubles with a 1e-9 slack folded into each bound
// (the certification bounds are >= 1e-3, so the slack is immaterial).
std::vector<BoundedValue> L_truncated_grid(long long D,
                                           const std::vector<double>& s_grid,
                                           std::uint32_t X);

// Chebyshev step G(x) = sum_{q^m <= x} N_q log q (m >= 1).
Real chebyshev_G(const FieldRef& field, double x);

// Jumps of G: at n = p^k the step increases by weight(n) * log p, where
// weight(n) = sum_{f*m = k} f * N_{p^f} (an integer).
struct ChebyshevJump {
  std::uint64_t n;
  long long p;
  int weight;
};
std::vector<ChebyshevJump> chebyshev_jumps(const FieldRef& field, double x);

struct ZFPair {
  Real s;
  Real F;       // (s-1) zeta_K(s) / rho
  Real Z;       // d/ds log F = zeta'/zeta (s) + 1/(s-1)
  Real F_bound; // truncation bound on F
  Real Z_bound; // truncation bound on Z
};

// F via the product of truncated Dirichlet L-series (each factor carries a
// rigorous tail bound); Z via the von Mangoldt sum over prime-ideal powers.
ZFPair F_and_Z(const FieldRef& field, const Real& s, std::uint32_t X);

struct MellinReport {
  FieldRef field;
  Real s;
  std::uint32_t X;
  Real residual;
  Real tail_estimate;
};

// Residual of the Mellin identity for the Chebyshev step,
//   Z(s)/s = int_1^inf (x - G(x)) x^{-s-1} dx - 1/s,
// with both sides truncated at X. The integral is evaluated in closed form
// between the jumps of G; the von Mangoldt weights on the Z side are rebuilt
// from the coefficient array (Newton power sums), so the residual checks the
// splitting data against the coefficient data.
MellinReport mellin_residual(const FieldRef& field, const Real& s,
                             std::uint32_t X);

// Primes <= limit (shared sieve helper).
std::vector<long long> primes_up_to(std::uint64_t limit);

} // namespace bslab
