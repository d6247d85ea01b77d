#include "bslab/verify.hpp"

#include "bslab/family_sweep.hpp"
#include "bslab/lfunc.hpp"
#include "bslab/numeric.hpp"
#include "bslab/partition.hpp"
#include "bslab/quad_arith.hpp"
#include "bslab/regions.hpp"
#include "bslab/sym_chars.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bslab::verify {

namespace {

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, std::min<unsigned>(
                             threads, std::thread::hardware_concurrency()));
  if (threads <= 1 || count < 16) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      adopt_global_precision();
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count)
          return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error)
            error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool)
    th.join();
  if (error)
    std::rethrow_exception(error);
}

ReportLine pass(std::string name, std::string detail) {
  return {Level::Pass, std::move(name), std::move(detail)};
}
ReportLine warn(std::string name, std::string detail) {
  return {Level::Warn, std::move(name), std::move(detail)};
}
ReportLine fail(std::string name, std::string detail) {
  return {Level::Fail, std::move(name), std::move(detail)};
}

Partition hook(int m, int i) { // chi_i of S_m: [m-i+1, 1^{i-1}]
  std::vector<int> parts{m - i + 1};
  parts.insert(parts.end(), i - 1, 1);
  return Partition(std::move(parts));
}

// --- check 1: hook decomposition ------------------------------------------

std::vector<ReportLine> check_hook_decomposition(const Options&) {
  int checked = 0;
  for (int m = 5; m <= 8; ++m) {
    for (int i = 1; i <= m - 1; ++i) {
      const auto psi =
          induce_from_young(Composition({m - i, i}, {false, true}));
      const auto dec = decompose(psi);
      std::vector<std::pair<Partition, Int>> expected{{hook(m, i), 1},
                                                      {hook(m, i + 1), 1}};
      std::sort(expected.begin(), expected.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (dec != expected)
        return {fail("hook-decomposition",
                     "psi_" + std::to_string(i) + "* on S_" +
                         std::to_string(m) +
                         " is not chi_i + chi_{i+1}")};
      ++checked;
    }
  }
  return {pass("hook-decomposition",
               "psi_i* = chi_i + chi_{i+1} exactly for m=5..8 (" +
                   std::to_string(checked) + " identities)")};
}

// --- check 2: twisted hook decomposition ----------------------------------

std::vector<ReportLine> check_twisted_hook(const Options&) {
  int checked = 0;
  for (int m = 2; m <= 7; ++m) {
    for (int i = 1; i <= m - 1; ++i) {
      const auto psi =
          induce_from_young(Composition({m - i, i}, {false, true}));
      const auto twisted = tensor_theta(psi, true);
      auto dec = decompose_product(twisted);
      std::vector<std::tuple<Partition, int, Int>> expected{
          {hook(m, i), 1, 1}, {hook(m, i + 1), 1, 1}};
      std::sort(expected.begin(), expected.end(),
                [](const auto& a, const auto& b) {
                  return std::tie(std::get<1>(a), std::get<0>(a)) <
                         std::tie(std::get<1>(b), std::get<0>(b));
                });
      std::sort(dec.begin(), dec.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<1>(a), std::get<0>(a)) <
               std::tie(std::get<1>(b), std::get<0>(b));
      });
      if (dec != expected)
        return {fail("twisted-hook-decomposition",
                     "(psi'_" + std::to_string(i) + ")* on S_" +
                         std::to_string(m) +
                         " x Z/2 is not chi'_i + chi'_{i+1}")};
      ++checked;
    }
  }
  return {pass("twisted-hook-decomposition",
               "(psi'_i)* = chi'_i + chi'_{i+1} exactly for m=2..7 (" +
                   std::to_string(checked) + " identities)")};
}

// --- check 3: orthogonality ------------------------------------------------

std::vector<ReportLine> check_orthogonality(const Options&) {
  for (int n = 1; n <= 8; ++n) {
    const auto& t = character_table(n);
    const std::size_t k = t.labels().size();
    const Int order = factorial(n);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a; b < k; ++b) {
        Int dot = 0;
        for (std::size_t c = 0; c < k; ++c)
          dot += t.class_size(c) * t.value(a, c) * t.value(b, c);
        if (dot != (a == b ? order : Int(0)))
          return {fail("character-orthogonality",
                       "row orthogonality fails at n=" + std::to_string(n))};
      }
    }
  }
  return {pass("character-orthogonality",
               "exact row orthogonality for n=1..8, zero tolerance")};
}

// --- check 4: Young permutation module audit ------------------------------

std::vector<ReportLine> check_young_audit(const Options&) {
  std::vector<ReportLine> lines;
  std::string dims;
  for (int n : {8, 9}) {
    const Partition content = Partition::parse(
        std::to_string(n - 4) + ",2,2");
    const auto perm = induce_from_young(
        Composition({n - 4, 2, 2}, {false, false, false}));
    const auto dec = decompose(perm);
    Int total_dim = 0;
    for (const auto& [mu, mult] : dec) {
      if (mult != kostka(mu, content))
        return {fail("young-permutation-audit",
                     "multiplicity of [" + mu.str() +
                         "] differs from the Kostka count at n=" +
                         std::to_string(n))};
      total_dim += mult * hook_dimension(mu);
    }
    // every positive Kostka number must appear
    for (const auto& mu : enumerate_partitions(n)) {
      const Int k = kostka(mu, content);
      const auto it =
          std::find_if(dec.begin(), dec.end(),
                       [&](const auto& e) { return e.first == mu; });
      const Int found = it == dec.end() ? Int(0) : it->second;
      if (k != found)
        return {fail("young-permutation-audit",
                     "Kostka count of [" + mu.str() + "] missing at n=" +
                         std::to_string(n))};
    }
    const Int expected_dim =
        Int(n) * (n - 1) * (n - 2) * (n - 3) / 4;
    if (total_dim != expected_dim)
      return {fail("young-permutation-audit",
                   "total dimension " + total_dim.str() + " != " +
                       expected_dim.str() + " at n=" + std::to_string(n))};
    dims += (dims.empty() ? "" : ", ") + std::string("n=") +
            std::to_string(n) + ": " + total_dim.str();
  }
  lines.push_back(pass("young-permutation-audit",
                       "decomposition matches the Kostka oracle exactly (" +
                           dims + ")"));

  // the hook-only shorthand 1 + 2(n-1,1) + (n-2,1,1) + (n-3,1,1,1) fails a
  // dimension count; report the documented discrepancy at n=8
  const int n = 8;
  Int shorthand_dim = 1 + 2 * hook_dimension(hook(n, 2)) +
                      hook_dimension(hook(n, 3)) + hook_dimension(hook(n, 4));
  const Int true_dim = Int(n) * (n - 1) * (n - 2) * (n - 3) / 4;
  if (shorthand_dim == true_dim) {
    lines.push_back(fail("young-permutation-shorthand",
                         "expected the hook-only shorthand to fail the "
                         "dimension count, but it matched"));
  } else {
    lines.push_back(
        warn("young-permutation-shorthand",
             "hook-only shorthand 1 + 2(7,1) + (6,1,1) + (5,1,1,1) has "
             "dimension " +
                 shorthand_dim.str() + ", the permutation module has " +
                 true_dim.str() +
                 " at n=8; the Kostka decomposition above is the one in "
                 "force"));
  }
  return lines;
}

// --- check 5: class number cross-check ------------------------------------

std::vector<ReportLine> check_class_number(const Options& opt) {
  const auto discs =
      enumerate_fundamental(SweepSign::Imaginary, 3, opt.class_number_limit);
  std::vector<char> ok(discs.size(), 0);
  parallel_for(discs.size(), opt.threads, [&](std::size_t i) {
    const long long D = discs[i];
    const long long h_forms = class_number(D);
    const int mu = D == -3 ? 6 : (D == -4 ? 4 : 2);
    const Real analytic =
        Real(mu) * sqrt(Real(-D)) * L1_exact(D) / (2 * pi());
    const Real rounded = floor(analytic + Real("0.5"));
    ok[i] = (abs(analytic - Real(h_forms)) < Real("0.5")) &&
            (Real(h_forms) == rounded);
  });
  const auto mismatches =
      std::count(ok.begin(), ok.end(), static_cast<char>(0));
  if (mismatches)
    return {fail("class-number-cross-check",
                 std::to_string(mismatches) + " mismatches among " +
                     std::to_string(discs.size()) + " discriminants")};
  return {pass("class-number-cross-check",
               "form count equals the analytic class number for all " +
                   std::to_string(discs.size()) +
                   " fundamental D in [-" +
                   std::to_string(opt.class_number_limit) + ", -3]")};
}

// --- check 6: residue cross-check ------------------------------------------

std::vector<ReportLine> check_residue(const Options& opt) {
  std::vector<long long> discs =
      enumerate_fundamental(SweepSign::Imaginary, 3, opt.residue_limit);
  const auto real_discs =
      enumerate_fundamental(SweepSign::RealQuadratic, 3, opt.residue_limit);
  discs.insert(discs.end(), real_discs.begin(), real_discs.end());
  std::vector<char> ok(discs.size(), 0);
  const Real tol("1e-10");
  parallel_for(discs.size(), opt.threads, [&](std::size_t i) {
    const auto inv = field_invariants(discs[i]);
    ok[i] = abs(inv.rho - L1_exact(discs[i])) < tol;
  });
  const auto bad = std::count(ok.begin(), ok.end(), static_cast<char>(0));
  if (bad)
    return {fail("residue-cross-check",
                 std::to_string(bad) + " residues off by more than 1e-10")};
  return {pass("residue-cross-check",
               "|rho - L(1,chi_D)| < 1e-10 for all " +
                   std::to_string(discs.size()) + " fundamental |D| <= " +
                   std::to_string(opt.residue_limit))};
}

// --- check 7: biquadratic factorization ------------------------------------

std::vector<ReportLine> check_biquadratic(const Options& opt) {
  static const std::vector<std::pair<long long, long long>> pairs{
      {-4, 8},  {5, 8},    {-3, -4}, {-3, 5},  {-4, -8},
      {-7, 5},  {8, 12},   {-8, -11}, {-4, 13}, {12, 5}};
  const std::uint32_t X = opt.convolution_cutoff;
  for (const auto& [D1, D2] : pairs) {
    const auto field = FieldRef::biquadratic(D1, D2);
    const auto data = dedekind_coefficients(field, X);
    // independent oracle: 4-fold Dirichlet convolution of the character
    // series 1 * chi_D1 * chi_D2 * chi_D3
    const long long D3 = third_discriminant(D1, D2);
    std::vector<std::int64_t> conv(X + 1, 0);
    std::fill(conv.begin() + 1, conv.end(), 1);
    for (long long D : {D1, D2, D3}) {
      std::vector<std::int64_t> next(X + 1, 0);
      for (std::uint32_t d = 1; d <= X; ++d) {
        const int chi = kronecker(D, d);
        if (!chi)
          continue;
        for (std::uint32_t m = d; m <= X; m += d)
          next[m] += chi * conv[m / d];
      }
      conv.swap(next);
    }
    for (std::uint32_t n = 1; n <= X; ++n)
      if (conv[n] != data.a[n])
        return {fail("biquadratic-factorization",
                     "coefficient a_" + std::to_string(n) +
                         " differs from the 4-fold convolution for (" +
                         std::to_string(D1) + "," + std::to_string(D2) +
                         ")")};
  }
  return {pass("biquadratic-factorization",
               "splitting coefficients equal the 4-fold character "
               "convolution exactly for 10 pairs, n <= " +
                   std::to_string(X))};
}

// --- check 8: Siegel trend --------------------------------------------------

std::vector<ReportLine> check_siegel_trend(const Options& opt) {
  SweepOptions so;
  so.threads = opt.threads;
  const auto small =
      sweep(SweepSign::Imaginary, opt.siegel_small_lo, opt.siegel_small_hi, so);
  const auto big =
      sweep(SweepSign::Imaginary, opt.siegel_big_lo, opt.siegel_big_hi, so);
  const Real m_small = small.summary.median_ratio;
  const Real m_big = big.summary.median_ratio;
  const bool in_range = m_small > Real("0.5") && m_small < Real("1.05") &&
                        m_big > Real("0.5") && m_big < Real("1.05");
  const std::string detail =
      "median |D| in [" + std::to_string(opt.siegel_small_lo) + "," +
      std::to_string(opt.siegel_small_hi) + "] = " + to_decimal(m_small, 6) +
      ", in [" + std::to_string(opt.siegel_big_lo) + "," +
      std::to_string(opt.siegel_big_hi) + "] = " + to_decimal(m_big, 6);
  if (!(m_big > m_small) || !in_range)
    return {fail("siegel-trend", detail)};
  return {pass("siegel-trend", detail)};
}

// --- check 9: GBS degeneration ----------------------------------------------

std::vector<ReportLine> check_gbs(const Options&) {
  TVInvariants zero;
  zero.phi_R = 0;
  zero.phi_C = 0;
  const auto base = gbs_rhs(zero);
  if (!(base.full == 1 && base.residue_form == 0))
    return {fail("gbs-degeneration", "all-zero phi did not give (1, 0)")};

  static const std::uint64_t q_list[] = {2,  3,  4,  5,  7,  8,  9,
                                         11, 13, 16, 17, 19, 23, 25,
                                         27, 29, 31, 32, 37, 41};
  std::mt19937 rng(20240811u);
  auto uniform = [&rng](double scale) {
    return Real(rng() * (scale / 4294967296.0));
  };
  const Real tol = pow(Real(10), -static_cast<int>(precision()) + 5);
  const Real log2 = log(Real(2));
  const Real log2pi = log(2 * pi());
  for (int trial = 0; trial < 100; ++trial) {
    TVInvariants phi;
    phi.phi_R = uniform(2.0);
    phi.phi_C = uniform(2.0);
    for (auto q : q_list)
      phi.phi_q.emplace_back(q, uniform(1.0));
    const auto v = gbs_rhs(phi);
    const Real lhs = v.full - v.residue_form;
    const Real rhs = 1 - phi.phi_R * log2 - phi.phi_C * log2pi;
    if (!(abs(lhs - rhs) < tol))
      return {fail("gbs-degeneration",
                   "full - residue identity off at trial " +
                       std::to_string(trial))};
  }
  return {pass("gbs-degeneration",
               "all-zero phi gives (1, 0) exactly; full - residue identity "
               "holds to working precision for 100 seeded random phi")};
}

// --- check 10: Mellin identity ----------------------------------------------

std::vector<ReportLine> check_mellin(const Options& opt) {
  const std::vector<FieldRef> fields{
      FieldRef::rationals(), FieldRef::quadratic(-3), FieldRef::quadratic(-4),
      FieldRef::quadratic(5)};
  std::string detail;
  for (const auto& f : fields) {
    const auto small = mellin_residual(f, Real(2), opt.mellin_small_X);
    const auto big = mellin_residual(f, Real(2), opt.mellin_big_X);
    if (!(big.residual < Real("0.01")))
      return {fail("mellin-identity",
                   f.str() + ": residual at X=" +
                       std::to_string(opt.mellin_big_X) + " is " +
                       to_decimal(big.residual, 6))};
    if (!(big.residual < small.residual))
      return {fail("mellin-identity",
                   f.str() + ": residual did not shrink from X=" +
                       std::to_string(opt.mellin_small_X))};
    detail += (detail.empty() ? "" : "; ") + f.str() + ": " +
              to_decimal(small.residual, 3) + " -> " +
              to_decimal(big.residual, 3);
  }
  return {pass("mellin-identity", "residuals at s=2 (X=" +
                                      std::to_string(opt.mellin_small_X) +
                                      " -> " +
                                      std::to_string(opt.mellin_big_X) +
                                      "): " + detail)};
}

// --- check 11: region nesting -----------------------------------------------

std::vector<ReportLine> check_region_nesting(const Options& opt) {
  const std::size_t m_values = 10;
  const std::size_t d_values = (opt.nesting_grid + m_values - 1) / m_values;
  std::size_t points = 0;
  for (std::size_t mi = 1; mi <= m_values; ++mi) {
    const int m = static_cast<int>(mi);
    const int n = m + 1;
    // exact comparisons: the 1/log d factor cancels
    const Int almost = pow(Int(4), m + 2) * m;
    if (almost < 4)
      return {fail("region-nesting", "4^{m+2} m < 4 at m=" +
                                         std::to_string(m))};
    const int e = [n] {
      int nn = n, best = 0;
      for (int p = 2; p <= nn; ++p) {
        if (nn % p)
          continue;
        int v = 0;
        while (nn % p == 0) {
          nn /= p;
          ++v;
        }
        best = std::max(best, v);
      }
      return best;
    }();
    // (n^e delta)^3 >= 64 with delta = (e+1)^2 3^{1/3} 12^{e-1}
    const Int cubed = pow(Int(n), 3 * e) * pow(Int(e + 1), 6) * 3 *
                      pow(Int(12), 3 * (e - 1));
    if (cubed < 64)
      return {fail("region-nesting",
                   "(n^e delta)^3 < 64 at n=" + std::to_string(n))};
    for (int t : {1, 2, 3})
      if (8LL * t * m < 4)
        return {fail("region-nesting", "8tm < 4")};
    // numeric widths agree with the exact ordering on the log d grid
    for (std::size_t dj = 0; dj < d_values; ++dj) {
      const Real log_d = Real(1) / 2 + Real(static_cast<int>(dj)) / 2;
      const auto stark = stark_region(log_d);
      const auto alm = almost_sn_region(m, log_d);
      const auto [mp, mur] = murty_region(n, log_d);
      const auto bz = both_zeros_bound(1, m, log_d);
      if (!(alm.width <= stark.width) || !(mur.width <= stark.width) ||
          !(bz.region.width <= stark.width))
        return {fail("region-nesting",
                     "numeric width ordering broken at m=" +
                         std::to_string(m) + ", log d=" +
                         to_decimal(log_d, 4))};
      ++points;
    }
  }
  return {pass("region-nesting",
               "exact rational comparisons and numeric widths agree on " +
                   std::to_string(points) + " (m, log d) grid points")};
}

// --- check 12: zero scan ----------------------------------------------------

std::vector<ReportLine> check_zero_scan(const Options& opt) {
  const auto discs =
      enumerate_fundamental(SweepSign::Imaginary, 3, opt.scan_limit);
  struct Outcome {
    bool ok = false;
    double certified_fraction = 0;
    std::size_t changes = 0;
  };
  std::vector<Outcome> outcomes(discs.size());
  parallel_for(discs.size(), opt.threads, [&](std::size_t i) {
    const long long D = discs[i];
    const Real lower = 1 - 1 / (4 * log(Real(-D)));
    const auto scan = zero_scan(D, lower, Real("0.999"), opt.scan_grid);
    Outcome& o = outcomes[i];
    o.changes = scan.sign_changes.size();
    o.certified_fraction =
        static_cast<double>(scan.certified) /
        static_cast<double>(scan.points.size());
    bool positive = true;
    for (const auto& p : scan.points)
      if (p.status == SignStatus::Negative)
        positive = false;
    o.ok = o.changes == 0 && o.certified_fraction >= 0.9 && positive;
  });
  double min_fraction = 1.0;
  std::size_t bad = 0, total_changes = 0;
  for (const auto& o : outcomes) {
    min_fraction = std::min(min_fraction, o.certified_fraction);
    total_changes += o.changes;
    if (!o.ok)
      ++bad;
  }
  std::ostringstream frac;
  frac.precision(4);
  frac << min_fraction;
  const std::string detail =
      std::to_string(discs.size()) + " discriminants, " +
      std::to_string(total_changes) + " sign changes, min certified " +
      "fraction " + frac.str();
  if (bad)
    return {fail("zero-scan", detail + ", " + std::to_string(bad) +
                                  " fields failed")};
  return {pass("zero-scan", detail)};
}

} // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "hook-decomposition",      "twisted-hook-decomposition",
      "character-orthogonality", "young-permutation-audit",
      "class-number-cross-check", "residue-cross-check",
      "biquadratic-factorization", "siegel-trend",
      "gbs-degeneration",        "mellin-identity",
      "region-nesting",          "zero-scan"};
  return names;
}

std::vector<ReportLine> run_check(const std::string& name,
                                  const Options& opt) {
  if (name == "hook-decomposition")
    return check_hook_decomposition(opt);
  if (name == "twisted-hook-decomposition")
    return check_twisted_hook(opt);
  if (name == "character-orthogonality")
    return check_orthogonality(opt);
  if (name == "young-permutation-audit")
    return check_young_audit(opt);
  if (name == "class-number-cross-check")
    return check_class_number(opt);
  if (name == "residue-cross-check")
    return check_residue(opt);
  if (name == "biquadratic-factorization")
    return check_biquadratic(opt);
  if (name == "siegel-trend")
    return check_siegel_trend(opt);
  if (name == "gbs-degeneration")
    return check_gbs(opt);
  if (name == "mellin-identity")
    return check_mellin(opt);
  if (name == "region-nesting")
    return check_region_nesting(opt);
  if (name == "zero-scan")
    return check_zero_scan(opt);
  throw std::domain_error("unknown check: " + name);
}

Report run_suite(const std::vector<std::string>& names, const Options& opt) {
  Report report;
  for (const auto& name : names) {
    std::vector<ReportLine> lines;
    try {
      lines = run_check(name, opt);
    } catch (const std::exception& e) {
      lines = {fail(name, std::string("exception: ") + e.what())};
    }
    report.lines.insert(report.lines.end(), lines.begin(), lines.end());
  }
  return report;
}

std::string render(const Report& report) {
  std::string out;
  for (const auto& line : report.lines) {
    switch (line.level) {
    case Level::Pass:
      out += "PASS ";
      break;
    case Level::Warn:
      out += "WARN ";
      break;
    case Level::Fail:
      out += "FAIL ";
      break;
    }
    out += line.name + ": " + line.detail + "\n";
  }
  return out;
}

bool all_passed(const Report& report) {
  for (const auto& line : report.lines)
    if (line.level == Level::Fail)
      return false;
  return true;
}

FullRun run_full(const Options& opt) {
  const Report first = run_suite(check_names(), opt);
  const Report second = run_suite(check_names(), opt);
  const std::string r1 = render(first);
  const std::string r2 = render(second);
  const bool deterministic = r1 == r2;
  Report final = first;
  final.lines.push_back(
      deterministic
          ? pass("report-determinism",
                 "two full runs rendered byte-identical reports")
          : fail("report-determinism", "two full runs differ"));
  return {render(final), all_passed(final) && deterministic};
}

} // namespace bslab::verify
