#include "bslab/partition.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bslab {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw std::domain_error("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::domain_error("partition parts must be weakly decreasing");
  }
}

int Partition::n() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> p;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty())
      continue;
    p.push_back(std::stoi(tok));
  }
  return Partition(std::move(p));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts.empty())
    return Partition{};
  c.resize(parts[0], 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j)
      ++c[j];
  return Partition(std::move(c));
}

namespace {
std::atomic<int> g_degree_cap{kDefaultDegreeCap};

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    cur.push_back(p);
    enumerate_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}
} // namespace

void set_degree_cap(int cap) {
  if (cap < 1)
    throw std::domain_error("degree cap must be positive");
  g_degree_cap.store(cap, std::memory_order_relaxed);
}

int degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1 || n > degree_cap())
    throw std::domain_error("degree out of range [1, " +
                            std::to_string(degree_cap()) + "]");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(n, n, cur, out);
  return out;
}

std::size_t partition_count(int n) { return enumerate_partitions(n).size(); }

} // namespace bslab
