#pragma once

// Irreducible characters of S_m (Murnaghan-Nakayama), zonal spherical
// functions of the Gelfand pair (S_2n, H_n), and brute-force convolution of
// functions on S_m.
//
// Tables are built on first use and cached for the life of the process.
// Cache access is serialized; returned references stay valid and immutable.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "coe/combinat.hpp"

namespace coe {

/// χ^λ on the class of cycle-type ρ. Throws DomainError if |λ| != |ρ|.
Integer mn_character(const Partition& lambda, const Partition& rho);

class CharacterTable {
 public:
  CharacterTable(int m, std::vector<Partition> partitions, std::vector<std::vector<Integer>> values);

  int degree() const { return m_; }
  /// Row and column labels, in partitions_of(m) order.
  const std::vector<Partition>& partitions() const { return partitions_; }
  int index_of(const Partition& p) const;
  /// χ^λ(ρ)
  const Integer& at(const Partition& lambda, const Partition& rho) const;
  const Integer& at(int lambda_index, int rho_index) const {
    return values_[static_cast<std::size_t>(lambda_index)][static_cast<std::size_t>(rho_index)];
  }

 private:
  int m_;
  std::vector<Partition> partitions_;
  std::map<Partition, int> index_;
  std::vector<std::vector<Integer>> values_;
};

/// Cached full table of S_m; throws ResourceError if m > 2 * limits.n_max.
const CharacterTable& character_table(int m, const Limits& limits = default_limits());

class ZonalTable {
 public:
  ZonalTable(int n, std::vector<Partition> partitions, std::vector<std::vector<Rational>> values);

  int half_degree() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  /// ω^λ on the double coset H_μ.
  const Rational& at(const Partition& lambda, const Partition& mu) const;

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::map<Partition, int> index_;
  std::vector<std::vector<Rational>> values_;
};

/// Cached table of ω^λ(H_μ) for all λ, μ ⊢ n; throws ResourceError if n > n_max.
const ZonalTable& zonal_table(int n, const Limits& limits = default_limits());

/// ω^λ(σ_μ) = (2^n n!)^-1 Σ_{ζ ∈ H_n} χ^{2λ}(σ_μ ζ) with σ_μ = coset_representative(μ).
Rational zonal_spherical(const Partition& lambda, const Partition& mu,
                         const Limits& limits = default_limits());
/// The same average taken at an arbitrary σ ∈ S_2n.
Rational zonal_spherical_at(const Partition& lambda, const Permutation& sigma,
                            const Limits& limits = default_limits());

/// A function on S_m.
using PermFunction = std::function<Rational(const Permutation&)>;

/// (f * g)(σ) = Σ_{τ ∈ S_m} f(σ τ^-1) g(τ), by full enumeration of S_m.
/// Throws ResourceError for m > 8.
Rational convolve_at(const PermFunction& f, const PermFunction& g, const Permutation& sigma);
/// Lazily evaluated convolution; each call costs m! terms.
PermFunction convolve_class(PermFunction f, PermFunction g, int m);

/// χ^λ as a function on S_|λ|.
PermFunction character_function(const Partition& lambda);
/// ω^λ as a function on S_2|λ| (via the coset-type of its argument).
PermFunction zonal_function(const Partition& lambda);

// Optional on-disk cache of character tables (JSON, schema "coe-character-tables/1";
// integers stored as decimal strings).

/// Loads every table in the file into the process cache after validating it
/// against a fresh Murnaghan-Nakayama evaluation of its first column.
/// Returns the number of tables loaded. Throws DomainError on malformed input.
int load_character_cache(const std::string& path);
/// Writes all tables currently in the process cache.
void save_character_cache(const std::string& path);
std::string character_cache_json();

}  // namespace coe
