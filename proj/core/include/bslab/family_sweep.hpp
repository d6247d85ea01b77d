#pragma once

#include "bslab/numeric.hpp"
#include "bslab/quad_arith.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace bslab {

enum class SweepSign { Imaginary, RealQuadratic };

struct FamilyRecord {
  long long D = 0;
  long long h = 0;
  Real R;
  Real g;
  Real rho;
  Real ratio; // log(h R) / g
};

FamilyRecord to_record(const FieldInvariants& inv);

struct SweepSummary {
  SweepSign sign = SweepSign::Imaginary;
  long long lo = 0, hi = 0;
  std::size_t count = 0;
  Real median_ratio;
  Real mean_ratio;
  Real min_ratio;
  Real max_ratio;
  Real min_stark_ratio; // min rho / (1 - beta-hat), beta-hat = 1 - 1/(4 log d)
};

// Fundamental discriminants with lo <= |D| <= hi of the given sign, by
// congruence sieve (1 mod 4 squarefree, or 4k with k squarefree, k = 2,3 mod
// 4 as the sign requires), ascending |D|.
std::vector<long long> enumerate_fundamental(SweepSign sign, long long lo,
                                             long long hi);

struct SweepOptions {
  unsigned threads = 1;
  std::ostream* csv = nullptr; // optional CSV sink (header + one row per D)
};

struct SweepResult {
  std::vector<FamilyRecord> records; // ordered by |D|
  SweepSummary summary;
};

SweepResult sweep(SweepSign sign, long long lo, long long hi,
                  const SweepOptions& options = {});

void write_sweep_csv(std::ostream& out, const std::vector<FamilyRecord>& recs);

// min over records of rho / (1 - beta-hat) with beta-hat = 1 - 1/(4 log d);
// an empirical lower witness for the constant in the residue lower bound.
Real stark_ratio_monitor(const std::vector<FamilyRecord>& records);

struct TowerLevel {
  int n = 0;
  int r1 = 0, r2 = 0;
  Real g;
  std::map<std::uint64_t, Real> Nq; // prime power -> ideal count
};

struct TowerData {
  std::vector<TowerLevel> levels;
};

// CSV columns: level,n,r1,r2,g,Nq_2,Nq_3,...
TowerData parse_tower_csv(std::istream& in);

struct TVInvariants {
  Real phi_R;
  Real phi_C;
  std::vector<std::pair<std::uint64_t, Real>> phi_q; // ascending q
  // per-q finite ratio sequences N_q/g (diagnostics), plus r1/g and r2/g
  std::vector<Real> phi_R_sequence;
  std::vector<Real> phi_C_sequence;
  std::map<std::uint64_t, std::vector<Real>> phi_q_sequences;
};

// Limits estimated by the final-level ratios; the full sequences are the
// returned diagnostics.
TVInvariants phi_invariants(const TowerData& tower, std::uint64_t q_max);

struct GbsValue {
  Real full;         // 1 + sum phi_q log(q/(q-1)) - phi_R log 2 - phi_C log 2pi
  Real residue_form; // sum phi_q log(q/(q-1))
  Real tail_bound;   // sum over data q > q_max of phi_q / (q-1)
};

GbsValue gbs_rhs(const TVInvariants& phi, std::uint64_t q_max = 0);

struct ConditionRatios {
  std::vector<Real> ratios; // log d_N / log d_L per pair
  bool increasing_trend = false;
};

ConditionRatios condition_ratios(const std::vector<std::pair<Real, Real>>& dLdN);

// Append-only JSON-lines store of FieldInvariants keyed by D. One writer at
// a time; loads fully on open.
class InvariantCache {
public:
  explicit InvariantCache(std::string path);

  std::optional<FieldInvariants> get(long long D) const;
  void put(const FieldInvariants& inv); // idempotent
  std::size_t size() const;
  const std::string& path() const { return path_; }

private:
  std::string path_;
  mutable std::mutex mutex_;
  std::map<long long, FieldInvariants> entries_;
};

std::string invariants_to_json(const FieldInvariants& inv);
FieldInvariants invariants_from_json(const std::string& line);

} // namespace bslab
