#pragma once

#include "bslab/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bslab {

enum class RegionKind { Stark, Murty, AlmostSn, Ahc, BothZeros };
std::string region_kind_name(RegionKind k);

// Interval [lower, 1) that the relevant zeta or Artin L-function keeps free
// of real zeros; width = 1 - lower.
struct ZeroFreeRegion {
  RegionKind kind;
  Real lower;
  Real width;
  // parameters actually used (0 when not applicable)
  int n = 0, m = 0, t = 0;
  Real c;
  Real log_d;
};

// width = 1/(4 log d); at most one zero of zeta_K lives above it.
ZeroFreeRegion stark_region(const Real& log_d);

struct MurtyParams {
  int n = 0;
  int e = 0;     // max p-adic valuation of n
  Real delta;    // (e+1)^2 3^{1/3} 12^{e-1}
  Real c;
};

// width = c / (n^e delta(n) log d) for solvable closures.
std::pair<MurtyParams, ZeroFreeRegion> murty_region(int n, const Real& log_d,
                                                    const Real& c = Real(1));

// width = 1/(4^{m+2} m log d_N) for quadratic extensions of almost-S_n
// fields with Gal = S_m.
ZeroFreeRegion almost_sn_region(int m, const Real& log_d_N);

// width = 1/(4 n^4 log d_K) under holomorphy of the two non-hook factors.
ZeroFreeRegion ahc_region(int n, const Real& log_d_K);

// Discriminant-exponent bookkeeping behind the AHC region:
// exact = n + n(n-1)(n-2)(n-3)/4, dominated by n^4/4.
struct AhcExponentBound {
  Int exact;
  Int n4; // n^4 (compare 4*exact <= n4)
};
AhcExponentBound ahc_exponent_bound(int n);

// The two twisted quadratic Artin L-functions cannot both vanish in
// [1 - 1/(8 t m log d_N), 1]; also returns the compositum discriminant
// exponent 2tm from d_{MM'} <= d_N^{2tm}.
struct BothZerosBound {
  ZeroFreeRegion region;
  long long discriminant_exponent; // 2 t m
};
BothZerosBound both_zeros_bound(int t, int m, const Real& log_d_N);

struct L1Bound {
  int r1 = 0, r2 = 0, n_L = 0;
  Real d_L;
  Real beta_chi;
  Real sigma1;
  Real c;
  Real value;
};

// Lower bound on L(1,chi) for the quadratic character of N/L:
// c ((1-beta_chi)/(sigma1-1)) d_L^{-(sigma1-1)/2} (sqrt(pi)/Gamma(sigma1/2))^{r1}
//   (2^{sigma1-1}/Gamma(sigma1))^{r2} (pi^{(sigma1-1)/2}/zeta(sigma1))^{n_L}.
L1Bound stark_L1_lower(int r1, int r2, int n_L, const Real& d_L,
                       const Real& beta_chi, const Real& sigma1,
                       const Real& c = Real(1));

struct GbsTheta {
  Real I;     // max(4^{m+2} log d, n^{e} delta(n) g), log d = 2g
  Real theta; // 1/(I g)
  Real log_theta_over_g;
};
GbsTheta gbs_theta(int m, int n, const Real& g, const Real& c = Real(1));

// Real-axis scan of L(s, chi_D) on [lo, hi] subset of (1/2, 1).
enum class SignStatus { Positive, Negative, Indeterminate };
std::string sign_status_name(SignStatus s);

struct ScanPoint {
  Real s;
  Real value;
  Real bound;
  SignStatus status;
};

struct ScanResult {
  long long D = 0;
  std::uint32_t terms = 0;
  std::vector<ScanPoint> points;
  // [s_i, s_j] where consecutive certified signs differ (indeterminate runs
  // between them are included, never dropped)
  std::vector<std::pair<Real, Real>> sign_changes;
  std::size_t certified = 0;
  std::size_t indeterminate = 0;
};

// grid_points evaluations of the truncated L(s,chi_D); X = 0 picks the cutoff
// from the Polya-Vinogradov bound (capped at 2*10^5).
ScanResult zero_scan(long long D, const Real& lo, const Real& hi,
                     std::size_t grid_points, std::uint32_t X = 0);

} // namespace bslab
