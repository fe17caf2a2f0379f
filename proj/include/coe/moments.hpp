#pragma once

// COE moment engine.
//
// z-conventions (the two normalizations must never be mixed silently):
//   coe_moment_symbolic  returns 𝓜(i,j;z), to be evaluated at z = N+1;
//   unitary_oracle       returns  M(i,j;z), to be evaluated at z = N;
//   *_symbolic closed forms and moment_expansion are functions of N itself.
// So M(i,j;z) == shift(𝓜(i,j;z)), and both equal the moment as a function of N.

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coe/combinat.hpp"
#include "coe/qz.hpp"

namespace coe {

/// Index sequence (i_1, ..., i_2n), entries >= 1, even length >= 2.
class IndexSeq {
 public:
  IndexSeq() = default;
  explicit IndexSeq(std::vector<int> indices);
  IndexSeq(std::initializer_list<int> indices) : IndexSeq(std::vector<int>(indices)) {}

  /// Parses "1,2,1,2".
  static IndexSeq parse(const std::string& text);

  const std::vector<int>& indices() const { return idx_; }
  int size() const { return static_cast<int>(idx_.size()); }
  int half_degree() const { return size() / 2; }
  int max_index() const;
  /// 1-based access.
  int operator[](int k) const { return idx_[static_cast<std::size_t>(k - 1)]; }
  /// i^σ with (i^σ)_k = i_{σ(k)}.
  IndexSeq act(const Permutation& sigma) const;
  /// Replace every value v by relabel[v-1].
  IndexSeq relabel(const std::vector<int>& relabel) const;
  std::string str() const;

  friend bool operator==(const IndexSeq&, const IndexSeq&) = default;

 private:
  std::vector<int> idx_;
};

/// ∏_v m_v! when i and j have the same multiset, else 0.
Integer matching_count(std::span<const int> i, std::span<const int> j);

/// Visits every σ with j_k = i_{σ(k)} exactly once (backtracking per value
/// block). Throws ResourceError if the count exceeds the budget.
void for_each_matching(std::span<const int> i, std::span<const int> j,
                       const std::function<void(const Permutation&)>& visit,
                       const Limits& limits = default_limits());
std::vector<Permutation> matching_permutations(const IndexSeq& i, const IndexSeq& j,
                                               const Limits& limits = default_limits());

/// s_μ(i,j) = #{σ ∈ H_μ : j = i^σ} for every μ ⊢ n with a nonzero count.
std::map<Partition, Integer> coset_counts(const IndexSeq& i, const IndexSeq& j,
                                          const Limits& limits = default_limits());

struct MomentResult {
  IndexSeq i;
  IndexSeq j;
  int n = 0;
  /// 𝓜(i,j;z); evaluate at z = N+1.
  RatFunc symbolic;
  std::optional<int> N;
  /// eval_at(symbolic, N+1) when N is set.
  std::optional<Rational> value_at;
  Integer match_count;
  std::map<Partition, Integer> per_coset;
};

MomentResult coe_moment_symbolic(const IndexSeq& i, const IndexSeq& j,
                                 const Limits& limits = default_limits());
/// M_N(i,j). Throws DomainError for indices > N; a pole at N+1 is an InternalError.
Rational coe_moment(const IndexSeq& i, const IndexSeq& j, int N, const Limits& limits = default_limits());
MomentResult coe_moment_result(const IndexSeq& i, const IndexSeq& j, int N,
                               const Limits& limits = default_limits());

/// True iff the moment is identically zero: lengths differ or multisets differ.
bool coe_vanishes(const IndexSeq& i, const IndexSeq& j);

// Single-entry closed forms, as functions of N.
RatFunc diagonal_moment_symbolic(int n);
Rational diagonal_moment(int n, int N);
RatFunc offdiagonal_moment_symbolic(int n);
Rational offdiagonal_moment(int n, int N);

/// A_r in its product form (2n-4r+1)/((2r)!!(2n-2r+1)!!) ∏ 1/(N+2j-1) ∏ 1/(N+2j).
RatFunc a_r_term(int n, int r);
/// A_r straight from its definition C'_{(n-r,r)}(2) / (h((2n-2r,2r)) C'_{(n-r,r)}(N+1)).
RatFunc a_r_definition(int n, int r);
/// Closed form of A_0 + ... + A_k.
RatFunc a_partial_sum(int n, int k);

/// ((n!)^2/(2n)!) Σ_{λ ⊢ n, ℓ(λ) <= 2} f^{2λ} C'_λ(2) / C'_λ(N+1).
RatFunc two_row_sum(int n, const Limits& limits = default_limits());
/// Σ_{ℓ(λ) <= 2} f^{2λ} C'_λ(2) / C'_λ(N): E[(o_ii + o_jj)^2n] for Haar O(N).
RatFunc orthogonal_diagonal_pair_sum(int n);
/// ((2n)!/n!) / ((N+2n-2) ∏_{k=0}^{n-2} (N+k-1)).
RatFunc orthogonal_diagonal_pair_closed_form(int n);

/// M(i,j;z) = Σ_{σ: j=i^σ} Σ_{τ ∈ S_2n} z^{ℓ'(τ)} Wg^U_2n(τ^-1 σ; z); evaluate at z = N.
/// Full enumeration of S_2n: throws ResourceError for n > max_n.
RatFunc unitary_oracle(const IndexSeq& i, const IndexSeq& j, int max_n = 3,
                       const Limits& limits = default_limits());

/// E[u_{i1 j1} ... u_{in jn} conj(u_{i'1 j'1} ... u_{i'n j'n})] for Haar U(N) as a
/// function of z = N (Weingarten formula). Zero when the lengths differ.
RatFunc haar_unitary_moment(std::span<const int> i, std::span<const int> j, std::span<const int> ip,
                            std::span<const int> jp, const Limits& limits = default_limits());

/// #{(k,l) ∈ [N]^n x [N]^n : l~ = (k~)^τ} by exhaustive enumeration of pairs.
Integer count_tilde_solutions(const Permutation& tau, int N, const Limits& limits = default_limits());

struct AsymptoticCounts {
  Integer s;
  Integer s_prime;
  std::map<Partition, Integer> per_coset;
};

AsymptoticCounts asymptotic_counts(const IndexSeq& i, const IndexSeq& j,
                                   const Limits& limits = default_limits());

/// Expansion of M_N(i,j) in powers of 1/N, anchored at N^-n: coeffs[k] multiplies N^(-n-k).
LaurentSeries moment_expansion(const IndexSeq& i, const IndexSeq& j, int orders,
                               const Limits& limits = default_limits());

}  // namespace coe
