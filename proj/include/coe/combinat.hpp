#pragma once

// Partitions, permutations of S_m, the pairing graph of a permutation of
// S_2n and its coset-type, the hyperoctahedral group H_n, and the integer
// and polynomial statistics attached to Young diagrams.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "coe/errors.hpp"
#include "coe/qz.hpp"

namespace coe {

/// Weakly decreasing sequence of positive integers, stored without zeros.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts into a partition (zeros are dropped).
  static Partition from_unsorted(std::vector<int> parts);
  /// (1^n)
  static Partition ones(int n);
  /// (2, 1^(n-2)); requires n >= 2.
  static Partition transposition_type(int n);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  int operator[](int k) const { return parts_[static_cast<std::size_t>(k)]; }
  /// m_r: number of parts equal to r.
  int multiplicity(int r) const;
  /// 2λ = (2λ_1, 2λ_2, ...)
  Partition doubled() const;

  /// "3,1,1" (empty partition renders as "").
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n in descending lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

Partition conjugate(const Partition& lambda);
Integer hook_product(const Partition& lambda);
/// Number of standard Young tableaux, |λ|! / h(λ).
Integer f_dim(const Partition& lambda);
/// Centralizer order ∏ r^(m_r) m_r!.
Integer z_mu(const Partition& mu);
Integer factorial(int n);

/// ∏ over cells (i,j) of (z + j - i).
Poly c_content(const Partition& lambda);
/// ∏ over cells (i,j) of (z + 2j - i - 1).
Poly c_prime(const Partition& lambda);

/// Permutation of {1..m}. The public API is 1-based: sigma(k) for k in 1..m
/// returns a value in 1..m. Storage is 0-based and exposed through zero_based().
class Permutation {
 public:
  Permutation() = default;
  /// One-line notation, 1-based. Throws DomainError if not a bijection of 1..m.
  explicit Permutation(const std::vector<int>& one_based);
  Permutation(std::initializer_list<int> one_based)
      : Permutation(std::vector<int>(one_based)) {}

  static Permutation identity(int m);
  /// Trusted 0-based construction for hot loops (no validation).
  static Permutation from_zero_based(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_[static_cast<std::size_t>(k - 1)] + 1; }
  std::vector<int> one_based() const;
  std::span<const int> zero_based() const { return img_; }
  Permutation inverse() const;
  bool is_identity() const;

  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// (a*b)(k) = a(b(k)).
Permutation operator*(const Permutation& a, const Permutation& b);

Partition cycle_type(const Permutation& sigma);
Partition cycle_type(std::span<const int> zero_based);

/// Connected components of the graph on {1..2n} with edges {2k-1,2k} and
/// {σ(2k-1), σ(2k)}. Components are sorted vertex lists, ordered by their
/// smallest vertex.
struct CosetGraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> components;
};

CosetGraph coset_graph(const Permutation& sigma);
/// Half the component sizes of coset_graph(σ), decreasing. Throws on odd degree.
Partition coset_type(const Permutation& sigma);
Partition coset_type(std::span<const int> zero_based);
/// ℓ'(σ): number of components of coset_graph(σ).
int coset_length(std::span<const int> zero_based);

/// Visits each of the 2^n n! elements of H_n ⊂ S_2n once. Throws
/// ResourceError if 2^n n! exceeds the budget.
void for_each_hyperoctahedral(int n, const std::function<void(const Permutation&)>& visit,
                              const Limits& limits = default_limits());
std::vector<Permutation> hyperoctahedral_elements(int n, const Limits& limits = default_limits());

/// |H_μ| = (2^n n!)^2 / (2^ℓ(μ) z_μ).
Integer double_coset_size(const Partition& mu);

/// Deterministic σ_μ with coset_type(σ_μ) = μ: identity on parts of size 1,
/// a cyclic shift of the 2μ_k vertices of each larger block of pairs.
Permutation coset_representative(const Partition& mu);

/// Visits every permutation of S_m in lexicographic order (test/oracle support).
void for_each_permutation(int m, const std::function<void(const Permutation&)>& visit,
                          const Limits& limits = default_limits());

}  // namespace coe
