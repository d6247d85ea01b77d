#include "bslab/family_sweep.hpp"

#include "bslab/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bslab {

using nlohmann::json;

FamilyRecord to_record(const FieldInvariants& inv) {
  FamilyRecord r;
  r.D = inv.D;
  r.h = inv.h;
  r.R = inv.R;
  r.g = inv.g;
  r.rho = inv.rho;
  r.ratio = bs_ratio(inv);
  return r;
}

std::vector<long long> enumerate_fundamental(SweepSign sign, long long lo,
                                             long long hi) {
  if (lo < 3 || lo > hi || hi > kDiscriminantCap)
    throw std::domain_error("sweep range must satisfy 3 <= lo <= hi <= 10^7");
  std::vector<char> squarefree(hi + 1, 1);
  for (long long p = 2; p * p <= hi; ++p)
    for (long long m = p * p; m <= hi; m += p * p)
      squarefree[m] = 0;
  std::vector<long long> out;
  for (long long m = lo; m <= hi; ++m) {
    bool fundamental = false;
    if (sign == SweepSign::Imaginary) {
      fundamental = (m % 4 == 3 && squarefree[m]) ||
                    (m % 4 == 0 && squarefree[m / 4] &&
                     (m / 4 % 4 == 1 || m / 4 % 4 == 2));
    } else {
      fundamental = (m % 4 == 1 && squarefree[m]) ||
                    (m % 4 == 0 && squarefree[m / 4] &&
                     (m / 4 % 4 == 2 || m / 4 % 4 == 3));
    }
    if (fundamental)
      out.push_back(sign == SweepSign::Imaginary ? -m : m);
  }
  return out;
}

namespace {

Real median_of_sorted(const std::vector<Real>& sorted) {
  // lower middle for even counts; deterministic and robust to heavy tails
  return sorted[(sorted.size() - 1) / 2];
}

} // namespace

SweepResult sweep(SweepSign sign, long long lo, long long hi,
                  const SweepOptions& options) {
  const auto discs = enumerate_fundamental(sign, lo, hi);
  SweepResult res;
  res.records.resize(discs.size());
  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.threads,
                                      std::thread::hardware_concurrency()));
  if (threads <= 1 || discs.size() < 32) {
    for (std::size_t i = 0; i < discs.size(); ++i)
      res.records[i] = to_record(field_invariants(discs[i]));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        adopt_global_precision();
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= discs.size())
            return;
          try {
            res.records[i] = to_record(field_invariants(discs[i]));
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

  auto& s = res.summary;
  s.sign = sign;
  s.lo = lo;
  s.hi = hi;
  s.count = res.records.size();
  if (s.count == 0) {
    s.median_ratio = s.mean_ratio = s.min_ratio = s.max_ratio = 0;
    s.min_stark_ratio = 0;
  } else {
    std::vector<Real> ratios;
    ratios.reserve(s.count);
    Real sum = 0;
    for (const auto& r : res.records) {
      ratios.push_back(r.ratio);
      sum += r.ratio;
    }
    std::sort(ratios.begin(), ratios.end());
    s.median_ratio = median_of_sorted(ratios);
    s.mean_ratio = sum / static_cast<long long>(s.count);
    s.min_ratio = ratios.front();
    s.max_ratio = ratios.back();
    s.min_stark_ratio = stark_ratio_monitor(res.records);
  }
  if (options.csv)
    write_sweep_csv(*options.csv, res.records);
  return res;
}

void write_sweep_csv(std::ostream& out,
                     const std::vector<FamilyRecord>& recs) {
  out << "# " << kProjectName << ' ' << kVersion << '\n';
  out << "# precision " << precision() << '\n';
  out << "D,h,R,g,rho,ratio\n";
  for (const auto& r : recs)
    out << r.D << ',' << r.h << ',' << to_decimal(r.R) << ','
        << to_decimal(r.g) << ',' << to_decimal(r.rho) << ','
        << to_decimal(r.ratio) << '\n';
}

Real stark_ratio_monitor(const std::vector<FamilyRecord>& records) {
  if (records.empty())
    throw std::domain_error("stark ratio monitor needs at least one record");
  // beta-hat = 1 - 1/(4 log d) and log d = 2g, so 1 - beta-hat = 1/(8g)
  Real best;
  bool first = true;
  for (const auto& r : records) {
    const Real ratio = r.rho * 8 * r.g;
    if (first || ratio < best) {
      best = ratio;
      first = false;
    }
  }
  return best;
}

TowerData parse_tower_csv(std::istream& in) {
  TowerData tower;
  std::string line;
  std::vector<std::uint64_t> q_columns;
  bool header = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#')
      continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
      cells.push_back(cell);
    if (header) {
      if (cells.size() < 5 || cells[0] != "level" || cells[1] != "n" ||
          cells[2] != "r1" || cells[3] != "r2" || cells[4] != "g")
        throw std::runtime_error(
            "tower CSV header must start with level,n,r1,r2,g");
      for (std::size_t i = 5; i < cells.size(); ++i) {
        if (cells[i].rfind("Nq_", 0) != 0)
          throw std::runtime_error("tower CSV column '" + cells[i] +
                                   "' is not of the form Nq_<q>");
        q_columns.push_back(std::stoull(cells[i].substr(3)));
      }
      header = false;
      continue;
    }
    if (cells.size() != 5 + q_columns.size())
      throw std::runtime_error("tower CSV line " + std::to_string(line_no) +
                               ": expected " +
                               std::to_string(5 + q_columns.size()) +
                               " cells");
    TowerLevel lv;
    lv.n = std::stoi(cells[1]);
    lv.r1 = std::stoi(cells[2]);
    lv.r2 = std::stoi(cells[3]);
    lv.g = Real(cells[4]);
    if (lv.r1 + 2 * lv.r2 != lv.n)
      throw std::runtime_error("tower CSV line " + std::to_string(line_no) +
                               ": r1 + 2 r2 != n");
    if (!(lv.g > 0))
      throw std::runtime_error("tower CSV line " + std::to_string(line_no) +
                               ": g must be positive");
    for (std::size_t i = 0; i < q_columns.size(); ++i)
      lv.Nq[q_columns[i]] = Real(cells[5 + i]);
    if (!tower.levels.empty() && !(lv.g > tower.levels.back().g))
      throw std::runtime_error("tower CSV line " + std::to_string(line_no) +
                               ": g must increase strictly along the tower");
    tower.levels.push_back(std::move(lv));
  }
  if (header)
    throw std::runtime_error("tower CSV is empty");
  return tower;
}

namespace {

bool is_prime_power(std::uint64_t q) {
  if (q < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p)
      continue;
    while (q % p == 0)
      q /= p;
    return q == 1;
  }
  return true; // q itself prime
}

} // namespace

TVInvariants phi_invariants(const TowerData& tower, std::uint64_t q_max) {
  if (tower.levels.size() < 2)
    throw std::domain_error("phi estimates need a tower with >= 2 levels");
  const auto& last = tower.levels.back();
  TVInvariants tv;
  tv.phi_R = Real(last.r1) / last.g;
  tv.phi_C = Real(last.r2) / last.g;
  for (const auto& lv : tower.levels) {
    tv.phi_R_sequence.push_back(Real(lv.r1) / lv.g);
    tv.phi_C_sequence.push_back(Real(lv.r2) / lv.g);
  }
  for (std::uint64_t q = 2; q <= q_max; ++q) {
    if (!is_prime_power(q))
      continue;
    if (!last.Nq.count(q))
      throw std::domain_error("tower data has no N_q column for q = " +
                              std::to_string(q));
    tv.phi_q.emplace_back(q, last.Nq.at(q) / last.g);
    auto& seq = tv.phi_q_sequences[q];
    for (const auto& lv : tower.levels)
      seq.push_back(lv.Nq.at(q) / lv.g);
  }
  return tv;
}

GbsValue gbs_rhs(const TVInvariants& phi, std::uint64_t q_max) {
  GbsValue v;
  v.residue_form = 0;
  v.tail_bound = 0;
  for (const auto& [q, pq] : phi.phi_q) {
    if (q_max != 0 && q > q_max) {
      v.tail_bound += pq / static_cast<long long>(q - 1);
      continue;
    }
    const Real qr = static_cast<long long>(q);
    v.residue_form += pq * log(qr / (qr - 1));
  }
  v.full = 1 + v.residue_form - phi.phi_R * log(Real(2)) -
           phi.phi_C * log(2 * pi());
  return v;
}

ConditionRatios
condition_ratios(const std::vector<std::pair<Real, Real>>& dLdN) {
  ConditionRatios out;
  out.ratios.reserve(dLdN.size());
  for (const auto& [dL, dN] : dLdN) {
    if (!(dL > 1) || !(dN > 1))
      throw std::domain_error("discriminants must exceed 1");
    out.ratios.push_back(log(dN) / log(dL));
  }
  out.increasing_trend = !out.ratios.empty();
  for (std::size_t i = 1; i < out.ratios.size(); ++i)
    if (out.ratios[i] < out.ratios[i - 1])
      out.increasing_trend = false;
  return out;
}

std::string invariants_to_json(const FieldInvariants& inv) {
  json j;
  j["D"] = inv.D;
  j["h"] = inv.h;
  j["R"] = to_decimal(inv.R);
  j["mu"] = inv.mu;
  j["r1"] = inv.r1;
  j["r2"] = inv.r2;
  j["g"] = to_decimal(inv.g);
  j["rho"] = to_decimal(inv.rho);
  j["ratio"] = to_decimal(bs_ratio(inv));
  j["precision"] = precision();
  return j.dump();
}

FieldInvariants invariants_from_json(const std::string& line) {
  const json j = json::parse(line);
  FieldInvariants inv;
  inv.D = j.at("D").get<long long>();
  inv.h = j.at("h").get<long long>();
  inv.R = Real(j.at("R").get<std::string>());
  inv.mu = j.at("mu").get<int>();
  inv.r1 = j.at("r1").get<int>();
  inv.r2 = j.at("r2").get<int>();
  inv.g = Real(j.at("g").get<std::string>());
  inv.rho = Real(j.at("rho").get<std::string>());
  inv.n_K = 2;
  return inv;
}

InvariantCache::InvariantCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in.is_open())
    return; // fresh cache
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    try {
      auto inv = invariants_from_json(line);
      entries_.emplace(inv.D, std::move(inv));
    } catch (const std::exception& e) {
      throw std::runtime_error("corrupt cache line " +
                               std::to_string(line_no) + " in " + path_ +
                               ": " + e.what());
    }
  }
}

std::optional<FieldInvariants> InvariantCache::get(long long D) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(D);
  if (it == entries_.end())
    return std::nullopt;
  return it->second;
}

void InvariantCache::put(const FieldInvariants& inv) {
  std::lock_guard lock(mutex_);
  if (entries_.count(inv.D))
    return;
  std::ofstream out(path_, std::ios::app);
  if (!out.is_open())
    throw std::runtime_error("cannot open cache file " + path_);
  out << invariants_to_json(inv) << '\n';
  if (!out)
    throw std::runtime_error("cache write failed for " + path_);
  entries_.emplace(inv.D, inv);
}

std::size_t InvariantCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

} // namespace bslab
