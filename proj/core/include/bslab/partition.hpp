#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bslab {

// Integer partition with weakly decreasing positive parts. The empty
// partition (n = 0) is allowed as the base of recursions.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int n() const;
  int length() const { return static_cast<int>(parts.size()); }

  // "4,2,2" <-> Partition{{4,2,2}}
  static Partition parse(const std::string& text);
  std::string str() const;

  // Reverse-lexicographic order: [n] sorts first, [1,...,1] last.
  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts > o.parts; }

  Partition conjugate() const;
};

inline constexpr int kDefaultDegreeCap = 14;

// Degree cap for all exact character-table work; settable once at startup.
void set_degree_cap(int cap);
int degree_cap();

// All partitions of n in reverse-lexicographic order, [n] first.
std::vector<Partition> enumerate_partitions(int n);

// Number of partitions of n (independent pentagonal-number recurrence is the
// test oracle; this counts the enumeration).
std::size_t partition_count(int n);

} // namespace bslab
