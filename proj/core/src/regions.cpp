#include "bslab/regions.hpp"

#include "bslab/lfunc.hpp"
#include "bslab/quad_arith.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bslab {

std::string region_kind_name(RegionKind k) {
  switch (k) {
  case RegionKind::Stark:
    return "stark";
  case RegionKind::Murty:
    return "murty";
  case RegionKind::AlmostSn:
    return "almost_sn";
  case RegionKind::Ahc:
    return "ahc";
  case RegionKind::BothZeros:
    return "both_zeros";
  }
  return "stark";
}

namespace {

ZeroFreeRegion make_region(RegionKind kind, const Real& width) {
  if (!(width > 0))
    throw std::domain_error("zero-free width must be positive");
  if (!(width < 1))
    throw std::domain_error("zero-free width must be < 1 (lower bound left "
                            "the critical strip)");
  ZeroFreeRegion r;
  r.kind = kind;
  r.width = width;
  r.lower = 1 - width;
  return r;
}

void check_log_d(const Real& log_d) {
  if (!(log_d > 0))
    throw std::domain_error("log d must be positive");
}

int max_padic_valuation(int n) {
  int e = 0;
  for (int p = 2; p <= n; ++p) {
    if (n % p)
      continue;
    int v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    e = std::max(e, v);
  }
  return e;
}

} // namespace

ZeroFreeRegion stark_region(const Real& log_d) {
  check_log_d(log_d);
  auto r = make_region(RegionKind::Stark, 1 / (4 * log_d));
  r.log_d = log_d;
  return r;
}

std::pair<MurtyParams, ZeroFreeRegion> murty_region(int n, const Real& log_d,
                                                    const Real& c) {
  if (n < 2)
    throw std::domain_error("murty region needs degree n >= 2");
  check_log_d(log_d);
  if (!(c > 0))
    throw std::domain_error("constant c must be positive");
  MurtyParams params;
  params.n = n;
  params.e = max_padic_valuation(n);
  params.delta = Real(params.e + 1) * Real(params.e + 1) *
                 pow(Real(3), Real(1) / 3) * pow(Real(12), params.e - 1);
  params.c = c;
  const Real width =
      c / (pow(Real(n), params.e) * params.delta * log_d);
  auto r = make_region(RegionKind::Murty, width);
  r.n = n;
  r.c = c;
  r.log_d = log_d;
  return {params, r};
}

ZeroFreeRegion almost_sn_region(int m, const Real& log_d_N) {
  if (m < 1)
    throw std::domain_error("almost-S_n region needs m >= 1");
  check_log_d(log_d_N);
  const Real width = 1 / (pow(Real(4), m + 2) * m * log_d_N);
  auto r = make_region(RegionKind::AlmostSn, width);
  r.m = m;
  r.log_d = log_d_N;
  return r;
}

ZeroFreeRegion ahc_region(int n, const Real& log_d_K) {
  if (n < 2)
    throw std::domain_error("AHC region needs degree n >= 2");
  check_log_d(log_d_K);
  const Real n4 = pow(Real(n), 4);
  auto r = make_region(RegionKind::Ahc, 1 / (4 * n4 * log_d_K));
  r.n = n;
  r.log_d = log_d_K;
  return r;
}

AhcExponentBound ahc_exponent_bound(int n) {
  if (n < 2)
    throw std::domain_error("AHC exponent bound needs n >= 2");
  AhcExponentBound b;
  b.exact = Int(n) + Int(n) * (n - 1) * (n - 2) * (n - 3) / 4;
  b.n4 = Int(n) * n * n * n;
  return b;
}

BothZerosBound both_zeros_bound(int t, int m, const Real& log_d_N) {
  if (t < 1 || m < 1)
    throw std::domain_error("both-zeros bound needs t, m >= 1");
  check_log_d(log_d_N);
  auto r = make_region(RegionKind::BothZeros, 1 / (8 * Real(t) * m * log_d_N));
  r.t = t;
  r.m = m;
  r.log_d = log_d_N;
  return {r, 2LL * t * m};
}

L1Bound stark_L1_lower(int r1, int r2, int n_L, const Real& d_L,
                       const Real& beta_chi, const Real& sigma1,
                       const Real& c) {
  if (!(sigma1 > 1 && sigma1 <= 2))
    throw std::domain_error("sigma1 must lie in (1, 2]");
  if (!(beta_chi < 1))
    throw std::domain_error("beta_chi must be < 1");
  if (r1 < 0 || r2 < 0 || n_L < 0 || !(d_L >= 1))
    throw std::domain_error("invalid field parameters");
  L1Bound b;
  b.r1 = r1;
  b.r2 = r2;
  b.n_L = n_L;
  b.d_L = d_L;
  b.beta_chi = beta_chi;
  b.sigma1 = sigma1;
  b.c = c;
  const Real sp = sqrt(pi());
  b.value = c * ((1 - beta_chi) / (sigma1 - 1)) *
            pow(d_L, -(sigma1 - 1) / 2) *
            pow(sp / tgamma(sigma1 / 2), r1) *
            pow(pow(Real(2), sigma1 - 1) / tgamma(sigma1), r2) *
            pow(pow(pi(), (sigma1 - 1) / 2) / zeta(sigma1), n_L);
  return b;
}

GbsTheta gbs_theta(int m, int n, const Real& g, const Real& c) {
  if (m < 1 || n < 2)
    throw std::domain_error("gbs_theta needs m >= 1 and n >= 2");
  if (!(g > 0))
    throw std::domain_error("g must be positive");
  const auto [params, region] = murty_region(n, g, c);
  (void)region;
  GbsTheta out;
  const Real log_d = 2 * g;
  const Real i1 = pow(Real(4), m + 2) * log_d;
  const Real i2 = pow(Real(n), params.e) * params.delta * g;
  out.I = i1 > i2 ? i1 : i2;
  out.theta = 1 / (out.I * g);
  out.log_theta_over_g = log(out.theta) / g;
  return out;
}

std::string sign_status_name(SignStatus s) {
  switch (s) {
  case SignStatus::Positive:
    return "positive";
  case SignStatus::Negative:
    return "negative";
  case SignStatus::Indeterminate:
    return "indeterminate";
  }
  return "indeterminate";
}

ScanResult zero_scan(long long D, const Real& lo, const Real& hi,
                     std::size_t grid_points, std::uint32_t X) {
  if (!is_fundamental(D))
    throw std::domain_error("not a fundamental discriminant: " +
                            std::to_string(D));
  if (!(lo > Real("0.5") && hi < 1 && lo < hi))
    throw std::domain_error("scan interval must lie inside (1/2, 1)");
  if (grid_points < 2)
    throw std::domain_error("scan needs at least 2 grid points");

  if (X == 0) {
    // pick X so that the tail bound sits well under a typical |L| ~ 0.1
    const double B = 2 * std::sqrt(static_cast<double>(std::llabs(D))) *
                     std::log(static_cast<double>(std::llabs(D)));
    const double lo_d = static_cast<double>(lo);
    double x = std::pow(std::max(B, 1.0) / 4e-3, 1.0 / lo_d);
    x = std::max(x, 2.0 * static_cast<double>(std::llabs(D)));
    X = static_cast<std::uint32_t>(std::min(x, 2e5));
  }

  std::vector<double> grid(grid_points);
  const Real step = (hi - lo) / static_cast<int>(grid_points - 1);
  for (std::size_t i = 0; i < grid_points; ++i)
    grid[i] = static_cast<double>(lo + step * static_cast<int>(i));

  const auto values = L_truncated_grid(D, grid, X);

  ScanResult res;
  res.D = D;
  res.terms = X;
  res.points.reserve(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    ScanPoint p;
    p.s = Real(grid[i]);
    p.value = values[i].value;
    p.bound = values[i].bound;
    if (abs(p.value) > p.bound)
      p.status = p.value > 0 ? SignStatus::Positive : SignStatus::Negative;
    else
      p.status = SignStatus::Indeterminate;
    res.points.push_back(std::move(p));
  }

  int last_sign = 0;
  std::size_t last_idx = 0;
  for (std::size_t i = 0; i < res.points.size(); ++i) {
    const auto& p = res.points[i];
    if (p.status == SignStatus::Indeterminate) {
      ++res.indeterminate;
      continue;
    }
    ++res.certified;
    const int sign = p.status == SignStatus::Positive ? 1 : -1;
    if (last_sign != 0 && sign != last_sign)
      res.sign_changes.emplace_back(res.points[last_idx].s, p.s);
    last_sign = sign;
    last_idx = i;
  }
  return res;
}

} // namespace bslab
