#pragma once

#include "bslab/numeric.hpp"
#include "bslab/partition.hpp"

#include <utility>
#include <vector>

namespace bslab {

// Integer-valued class function on S_n; values aligned with
// enumerate_partitions(n) (cycle types in reverse-lexicographic order).
struct ClassFunction {
  int n = 0;
  std::vector<Int> values;

  const Int& at(const Partition& cycle_type) const;
  Int& at(const Partition& cycle_type);
  // identity permutation has cycle type [1,...,1]
  const Int& at_identity() const {
    return at(Partition(std::vector<int>(n, 1)));
  }
};

// Class function on S_n x Z/2. Classes are (cycle type, parity).
struct ProductClassFunction {
  int n = 0;
  std::vector<Int> even_values; // parity 0
  std::vector<Int> odd_values;  // parity 1

  const Int& at(const Partition& cycle_type, int parity) const;
};

// Young subgroup S_{c1} x ... x S_{ck} together with a trivial/sign choice
// per factor (true = sign character on that factor).
struct Composition {
  std::vector<int> parts;
  std::vector<bool> signs;

  Composition(std::vector<int> p, std::vector<bool> s);
  int n() const;
};

// Full character table of S_n. Rows = irreducible labels, columns = classes,
// both in reverse-lexicographic partition order, so the first row is the
// trivial character (all ones).
class CharacterTable {
public:
  explicit CharacterTable(int n);

  int degree() const { return n_; }
  const std::vector<Partition>& labels() const { return labels_; }
  std::size_t index_of(const Partition& p) const;
  const Int& value(std::size_t row, std::size_t col) const {
    return values_[row * labels_.size() + col];
  }
  const Int& value(const Partition& label, const Partition& cls) const;
  const Int& class_size(std::size_t col) const { return class_sizes_[col]; }
  ClassFunction row(std::size_t r) const;

private:
  int n_;
  std::vector<Partition> labels_;
  std::vector<Int> values_;
  std::vector<Int> class_sizes_;
};

// Shared immutable table per degree (built once, safe to use concurrently).
const CharacterTable& character_table(int n);

// |conjugacy class of cycle type mu| = n!/z_mu
Int class_size(const Partition& mu);

// Irreducible character value chi^label(class) by Murnaghan-Nakayama.
Int character_value(const Partition& label, const Partition& cls);

// Dimension of the irreducible, via the hook length formula; for the hook
// (n-k,1^k) this is binomial(n-1,k).
Int hook_dimension(const Partition& label);

// Character of S_n induced from the tensor of trivial/sign factors on the
// Young subgroup of c, computed by distributing cycles across factors.
ClassFunction induce_from_young(const Composition& c);

// Multiplicities m_mu with f = sum m_mu chi^mu, exact. Throws
// std::domain_error ("not a virtual character combination") when some inner
// product is non-integral. Zero multiplicities are omitted.
std::vector<std::pair<Partition, Int>> decompose(const ClassFunction& f);

// Kostka number: semistandard Young tableaux of the given shape and content,
// counted by exhaustive column-strict enumeration.
Int kostka(const Partition& shape, const Partition& content);

// f tensor theta^twist on S_n x Z/2: value at (mu, eps) is
// f(mu) * (-1)^(eps * twist).
ProductClassFunction tensor_theta(const ClassFunction& f, bool twist);

// Decomposition over S_n x Z/2; entries are (label, parity, multiplicity)
// where parity 1 means the theta-twisted irreducible chi^label (x) theta.
std::vector<std::tuple<Partition, int, Int>>
decompose_product(const ProductClassFunction& f);

} // namespace bslab
