#include "bslab/sym_chars.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace bslab {

namespace {

std::size_t partition_index(const std::vector<Partition>& list,
                            const Partition& p) {
  auto it = std::lower_bound(list.begin(), list.end(), p);
  if (it == list.end() || !(*it == p))
    throw std::domain_error("partition not found in table for this degree");
  return static_cast<std::size_t>(it - list.begin());
}

// z_mu = prod over distinct part sizes l of l^m * m!
Int cycle_type_order(const Partition& mu) {
  Int z = 1;
  int run = 0;
  for (std::size_t i = 0; i < mu.parts.size(); ++i) {
    ++run;
    z *= mu.parts[i];
    if (i + 1 == mu.parts.size() || mu.parts[i + 1] != mu.parts[i]) {
      z *= factorial(run);
      run = 0;
    }
  }
  return z;
}

using MnMemo = std::map<std::pair<std::vector<int>, std::vector<int>>, Int>;

// Murnaghan-Nakayama on first-column hook lengths (beta-sets): removing a
// border strip of length r is moving a beta-number down by r.
Int mn_value(const std::vector<int>& lambda, const std::vector<int>& mu,
             MnMemo& memo) {
  if (mu.empty())
    return 1;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end())
    return it->second;

  const int r = mu.front();
  const std::vector<int> mu_rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i)
    beta[i] = lambda[i] + (len - 1 - i); // strictly decreasing

  Int total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0)
      continue;
    bool occupied = false;
    int between = 0;
    for (int j = 0; j < len; ++j) {
      if (j == i)
        continue;
      if (beta[j] == target)
        occupied = true;
      if (beta[j] > target && beta[j] < beta[i])
        ++between;
    }
    if (occupied)
      continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> next;
    next.reserve(len);
    for (int j = 0; j < len; ++j) {
      const int part = nb[j] - (len - 1 - j);
      if (part > 0)
        next.push_back(part);
    }
    const Int sub = mn_value(next, mu_rest, memo);
    total += (between % 2) ? -sub : sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::mutex g_table_mutex;
std::map<int, std::unique_ptr<const CharacterTable>> g_tables;

} // namespace

const Int& ClassFunction::at(const Partition& cycle_type) const {
  return values[partition_index(enumerate_partitions(n), cycle_type)];
}

Int& ClassFunction::at(const Partition& cycle_type) {
  return values[partition_index(enumerate_partitions(n), cycle_type)];
}

const Int& ProductClassFunction::at(const Partition& cycle_type,
                                    int parity) const {
  const auto idx = partition_index(enumerate_partitions(n), cycle_type);
  return parity ? odd_values[idx] : even_values[idx];
}

Composition::Composition(std::vector<int> p, std::vector<bool> s)
    : parts(std::move(p)), signs(std::move(s)) {
  if (parts.size() != signs.size())
    throw std::domain_error("composition parts/signs length mismatch");
  if (parts.empty())
    throw std::domain_error("composition must be nonempty");
  for (int x : parts)
    if (x <= 0)
      throw std::domain_error("composition parts must be positive");
}

int Composition::n() const {
  int s = 0;
  for (int x : parts)
    s += x;
  return s;
}

CharacterTable::CharacterTable(int n) : n_(n) {
  labels_ = enumerate_partitions(n); // degree guard lives here
  const std::size_t k = labels_.size();
  values_.assign(k * k, Int(0));
  class_sizes_.resize(k);
  const Int nfact = factorial(n);
  for (std::size_t c = 0; c < k; ++c)
    class_sizes_[c] = nfact / cycle_type_order(labels_[c]);
  MnMemo memo;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      values_[r * k + c] = mn_value(labels_[r].parts, labels_[c].parts, memo);
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  return partition_index(labels_, p);
}

const Int& CharacterTable::value(const Partition& label,
                                 const Partition& cls) const {
  return value(index_of(label), index_of(cls));
}

ClassFunction CharacterTable::row(std::size_t r) const {
  ClassFunction f;
  f.n = n_;
  f.values.assign(values_.begin() + r * labels_.size(),
                  values_.begin() + (r + 1) * labels_.size());
  return f;
}

const CharacterTable& character_table(int n) {
  std::lock_guard lock(g_table_mutex);
  auto it = g_tables.find(n);
  if (it == g_tables.end())
    it = g_tables.emplace(n, std::make_unique<CharacterTable>(n)).first;
  return *it->second;
}

Int class_size(const Partition& mu) {
  return factorial(mu.n()) / cycle_type_order(mu);
}

Int character_value(const Partition& label, const Partition& cls) {
  if (label.n() != cls.n())
    throw std::domain_error("label and class must partition the same n");
  return character_table(label.n()).value(label, cls);
}

Int hook_dimension(const Partition& label) {
  const int n = label.n();
  if (n == 0)
    return 1;
  const Partition conj = label.conjugate();
  Int hooks = 1;
  for (int i = 0; i < label.length(); ++i)
    for (int j = 0; j < label.parts[i]; ++j)
      hooks *= (label.parts[i] - j) + (conj.parts[j] - i) - 1;
  return factorial(n) / hooks;
}

namespace {

// Distributes the cycles of mu over the factors of the Young subgroup.
// weight = prod_l multinomial(m_l; m_{l,1..k}); sign factors pick up
// (-1)^{(l-1) * count} per sign-twisted factor.
struct Distributor {
  const std::vector<std::pair<int, int>>& runs; // (length, multiplicity)
  const Composition& comp;
  Int total = 0;

  void run(std::size_t run_idx, std::vector<int>& capacity, const Int& weight,
           int sign) {
    if (run_idx == runs.size()) {
      total += sign > 0 ? weight : -weight;
      return;
    }
    std::vector<int> take(comp.parts.size(), 0);
    distribute(run_idx, 0, runs[run_idx].second, capacity, take, weight, sign);
  }

  void distribute(std::size_t run_idx, std::size_t factor, int remaining,
                  std::vector<int>& capacity, std::vector<int>& take,
                  const Int& weight, int sign) {
    const int len = runs[run_idx].first;
    if (factor + 1 == take.size()) {
      if (remaining * len > capacity[factor])
        return;
      take[factor] = remaining;
      apply(run_idx, capacity, take, weight, sign);
      take[factor] = 0;
      return;
    }
    const int max_take = std::min(remaining, capacity[factor] / len);
    for (int t = 0; t <= max_take; ++t) {
      take[factor] = t;
      distribute(run_idx, factor + 1, remaining - t, capacity, take, weight,
                 sign);
    }
    take[factor] = 0;
  }

  void apply(std::size_t run_idx, std::vector<int>& capacity,
             std::vector<int>& take, const Int& weight, int sign) {
    const auto& [len, mult] = runs[run_idx];
    Int w = weight * factorial(mult);
    int s = sign;
    for (std::size_t i = 0; i < take.size(); ++i) {
      w /= factorial(take[i]);
      capacity[i] -= take[i] * len;
      if (comp.signs[i] && ((len - 1) * take[i]) % 2)
        s = -s;
    }
    run(run_idx + 1, capacity, w, s);
    for (std::size_t i = 0; i < take.size(); ++i)
      capacity[i] += take[i] * len;
  }
};

} // namespace

ClassFunction induce_from_young(const Composition& c) {
  const int n = c.n();
  const auto classes = enumerate_partitions(n); // degree guard
  ClassFunction out;
  out.n = n;
  out.values.reserve(classes.size());
  for (const auto& mu : classes) {
    std::vector<std::pair<int, int>> runs; // distinct length, multiplicity
    for (int p : mu.parts) {
      if (!runs.empty() && runs.back().first == p)
        ++runs.back().second;
      else
        runs.emplace_back(p, 1);
    }
    Distributor d{runs, c};
    std::vector<int> capacity = c.parts;
    d.run(0, capacity, Int(1), +1);
    out.values.push_back(d.total);
  }
  return out;
}

std::vector<std::pair<Partition, Int>> decompose(const ClassFunction& f) {
  const auto& table = character_table(f.n);
  const std::size_t k = table.labels().size();
  if (f.values.size() != k)
    throw std::domain_error("class function has wrong number of classes");
  const Int order = factorial(f.n);
  std::vector<std::pair<Partition, Int>> out;
  for (std::size_t r = 0; r < k; ++r) {
    Int dot = 0;
    for (std::size_t c = 0; c < k; ++c)
      dot += table.class_size(c) * f.values[c] * table.value(r, c);
    if (dot % order != 0)
      throw std::domain_error(
          "not a virtual character combination: non-integral multiplicity at " +
          table.labels()[r].str());
    const Int mult = dot / order;
    if (mult != 0)
      out.emplace_back(table.labels()[r], mult);
  }
  return out;
}

namespace {

Int kostka_fill(const Partition& shape, std::vector<int>& remaining,
                std::vector<std::vector<int>>& tableau, int row, int col) {
  if (row == shape.length())
    return 1;
  int next_row = row, next_col = col + 1;
  if (next_col == shape.parts[row]) {
    next_row = row + 1;
    next_col = 0;
  }
  const int row_min = col > 0 ? tableau[row][col - 1] : 1;
  const int col_min = (row > 0 && col < shape.parts[row - 1])
                          ? tableau[row - 1][col] + 1
                          : 1;
  Int count = 0;
  for (int v = std::max(row_min, col_min);
       v <= static_cast<int>(remaining.size()); ++v) {
    if (remaining[v - 1] == 0)
      continue;
    --remaining[v - 1];
    tableau[row][col] = v;
    count += kostka_fill(shape, remaining, tableau, next_row, next_col);
    ++remaining[v - 1];
  }
  return count;
}

} // namespace

Int kostka(const Partition& shape, const Partition& content) {
  if (shape.n() != content.n())
    throw std::domain_error("shape and content must have equal size");
  if (shape.n() == 0)
    return 1;
  std::vector<int> remaining = content.parts;
  std::vector<std::vector<int>> tableau(shape.length());
  for (int i = 0; i < shape.length(); ++i)
    tableau[i].assign(shape.parts[i], 0);
  return kostka_fill(shape, remaining, tableau, 0, 0);
}

ProductClassFunction tensor_theta(const ClassFunction& f, bool twist) {
  ProductClassFunction out;
  out.n = f.n;
  out.even_values = f.values;
  out.odd_values = f.values;
  if (twist)
    for (auto& v : out.odd_values)
      v = -v;
  return out;
}

std::vector<std::tuple<Partition, int, Int>>
decompose_product(const ProductClassFunction& f) {
  const auto& table = character_table(f.n);
  const std::size_t k = table.labels().size();
  if (f.even_values.size() != k || f.odd_values.size() != k)
    throw std::domain_error("class function has wrong number of classes");
  const Int order = 2 * factorial(f.n);
  std::vector<std::tuple<Partition, int, Int>> out;
  for (int parity = 0; parity <= 1; ++parity) {
    for (std::size_t r = 0; r < k; ++r) {
      Int dot = 0;
      for (std::size_t c = 0; c < k; ++c) {
        const Int& chi = table.value(r, c);
        dot += table.class_size(c) * f.even_values[c] * chi;
        const Int odd_term = table.class_size(c) * f.odd_values[c] * chi;
        dot += parity ? -odd_term : odd_term;
      }
      if (dot % order != 0)
        throw std::domain_error(
            "not a virtual character combination: non-integral multiplicity "
            "at " +
            table.labels()[r].str() + (parity ? " (x) theta" : ""));
      const Int mult = dot / order;
      if (mult != 0)
        out.emplace_back(table.labels()[r], parity, mult);
    }
  }
  return out;
}

} // namespace bslab
