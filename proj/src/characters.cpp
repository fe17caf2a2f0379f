#include "coe/characters.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace coe {

// ---------------------------------------------------------------- Murnaghan-Nakayama

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::mutex& mn_mutex() {
  static std::mutex m;
  return m;
}

std::map<Key, Integer>& mn_memo() {
  static std::map<Key, Integer> memo;
  return memo;
}

// Rim-hook removal on beta-numbers: moving a bead from b to b - r removes a
// border strip of size r whose height is the number of beads jumped over.
Integer mn_rec(const std::vector<int>& lambda, const std::vector<int>& rho) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  Key key{lambda, rho};
  auto& memo = mn_memo();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = rho.front();
  const std::vector<int> rest(rho.begin() + 1, rho.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  Integer total = 0;
  for (int i = 0; i < len; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > to && b < from) ++jumped;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = to;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> mu;
    for (int k = 0; k < len; ++k) {
      const int part = nb[static_cast<std::size_t>(k)] - (len - 1 - k);
      if (part > 0) mu.push_back(part);
    }
    Integer sub = mn_rec(mu, rest);
    if (jumped % 2 == 0) total += sub;
    else total -= sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight())
    throw DomainError("character χ^(" + lambda.str() + ") evaluated on class (" + rho.str() + ") of another degree");
  std::lock_guard lock(mn_mutex());
  return mn_rec(lambda.parts(), rho.parts());
}

// ---------------------------------------------------------------- tables

CharacterTable::CharacterTable(int m, std::vector<Partition> partitions,
                               std::vector<std::vector<Integer>> values)
    : m_(m), partitions_(std::move(partitions)), values_(std::move(values)) {
  for (std::size_t k = 0; k < partitions_.size(); ++k) index_.emplace(partitions_[k], static_cast<int>(k));
}

int CharacterTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw DomainError("(" + p.str() + ") is not a partition of " + std::to_string(m_));
  return it->second;
}

const Integer& CharacterTable::at(const Partition& lambda, const Partition& rho) const {
  return at(index_of(lambda), index_of(rho));
}

ZonalTable::ZonalTable(int n, std::vector<Partition> partitions, std::vector<std::vector<Rational>> values)
    : n_(n), partitions_(std::move(partitions)), values_(std::move(values)) {
  for (std::size_t k = 0; k < partitions_.size(); ++k) index_.emplace(partitions_[k], static_cast<int>(k));
}

const Rational& ZonalTable::at(const Partition& lambda, const Partition& mu) const {
  auto li = index_.find(lambda);
  auto mi = index_.find(mu);
  if (li == index_.end() || mi == index_.end())
    throw DomainError("zonal spherical function needs λ, μ ⊢ " + std::to_string(n_));
  return values_[static_cast<std::size_t>(li->second)][static_cast<std::size_t>(mi->second)];
}

namespace {

struct TableCache {
  std::mutex mutex;
  std::map<int, std::unique_ptr<CharacterTable>> characters;
  std::map<int, std::unique_ptr<ZonalTable>> zonal;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

CharacterTable build_character_table(int m) {
  auto parts = partitions_of(m);
  std::vector<std::vector<Integer>> values(parts.size(), std::vector<Integer>(parts.size()));
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = 0; b < parts.size(); ++b) values[a][b] = mn_character(parts[a], parts[b]);
  return CharacterTable(m, std::move(parts), std::move(values));
}

// For each μ: multiset of cycle-types of σ_μ ζ over ζ ∈ H_n.
std::map<Partition, Integer> coset_cycle_histogram(const Permutation& sigma, const Limits& limits) {
  const int n = sigma.degree() / 2;
  std::map<Partition, Integer> hist;
  auto s = sigma.zero_based();
  std::vector<int> prod(s.size());
  for_each_hyperoctahedral(
      n,
      [&](const Permutation& zeta) {
        auto z = zeta.zero_based();
        for (std::size_t k = 0; k < z.size(); ++k) prod[k] = s[static_cast<std::size_t>(z[k])];
        ++hist[cycle_type(prod)];
      },
      limits);
  return hist;
}

Rational average_character(const Partition& lambda, const std::map<Partition, Integer>& hist,
                           const Limits& limits) {
  const CharacterTable& table = character_table(2 * lambda.weight(), limits);
  const Partition two_lambda = lambda.doubled();
  Integer sum = 0;
  Integer count = 0;
  for (const auto& [rho, c] : hist) {
    sum += c * table.at(two_lambda, rho);
    count += c;
  }
  return ratio(sum, count);
}

void check_half_degree(int n, const Limits& limits) {
  if (n < 1) throw DomainError("zonal spherical functions need n >= 1");
  if (n > limits.n_max)
    throw ResourceError("n = " + std::to_string(n) + " exceeds n_max = " + std::to_string(limits.n_max));
}

}  // namespace

const CharacterTable& character_table(int m, const Limits& limits) {
  if (m < 0) throw DomainError("negative symmetric group degree");
  if (m > 2 * limits.n_max)
    throw ResourceError("character table of S_" + std::to_string(m) + " exceeds 2*n_max");
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.characters.find(m); it != c.characters.end()) return *it->second;
  }
  auto table = std::make_unique<CharacterTable>(build_character_table(m));
  std::lock_guard lock(c.mutex);
  auto [it, inserted] = c.characters.emplace(m, std::move(table));
  return *it->second;
}

const ZonalTable& zonal_table(int n, const Limits& limits) {
  check_half_degree(n, limits);
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.zonal.find(n); it != c.zonal.end()) return *it->second;
  }
  auto parts = partitions_of(n);
  std::vector<std::vector<Rational>> values(parts.size(), std::vector<Rational>(parts.size()));
  for (std::size_t b = 0; b < parts.size(); ++b) {
    auto hist = coset_cycle_histogram(coset_representative(parts[b]), limits);
    for (std::size_t a = 0; a < parts.size(); ++a) values[a][b] = average_character(parts[a], hist, limits);
  }
  auto table = std::make_unique<ZonalTable>(n, std::move(parts), std::move(values));
  std::lock_guard lock(c.mutex);
  auto [it, inserted] = c.zonal.emplace(n, std::move(table));
  return *it->second;
}

Rational zonal_spherical(const Partition& lambda, const Partition& mu, const Limits& limits) {
  if (lambda.weight() != mu.weight()) throw DomainError("zonal spherical function needs |λ| = |μ|");
  return zonal_table(lambda.weight(), limits).at(lambda, mu);
}

Rational zonal_spherical_at(const Partition& lambda, const Permutation& sigma, const Limits& limits) {
  if (sigma.degree() != 2 * lambda.weight()) throw DomainError("ω^λ lives on S_2|λ|");
  check_half_degree(lambda.weight(), limits);
  return average_character(lambda, coset_cycle_histogram(sigma, limits), limits);
}

// ---------------------------------------------------------------- convolution

Rational convolve_at(const PermFunction& f, const PermFunction& g, const Permutation& sigma) {
  const int m = sigma.degree();
  if (m > 8) throw ResourceError("brute-force convolution is limited to S_m with m <= 8");
  Rational acc = 0;
  for_each_permutation(m, [&](const Permutation& tau) {
    Rational gv = g(tau);
    if (gv != 0) acc += f(sigma * tau.inverse()) * gv;
  });
  return acc;
}

PermFunction convolve_class(PermFunction f, PermFunction g, int m) {
  if (m > 8) throw ResourceError("brute-force convolution is limited to S_m with m <= 8");
  return [f = std::move(f), g = std::move(g)](const Permutation& sigma) { return convolve_at(f, g, sigma); };
}

PermFunction character_function(const Partition& lambda) {
  const CharacterTable* table = &character_table(lambda.weight());
  return [table, lambda](const Permutation& s) { return Rational(table->at(lambda, cycle_type(s))); };
}

PermFunction zonal_function(const Partition& lambda) {
  const ZonalTable* table = &zonal_table(lambda.weight());
  return [table, lambda](const Permutation& s) { return table->at(lambda, coset_type(s)); };
}

// ---------------------------------------------------------------- cache file

namespace {
constexpr const char* kCacheSchema = "coe-character-tables/1";
}

std::string character_cache_json() {
  nlohmann::json tables = nlohmann::json::object();
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  for (const auto& [m, t] : c.characters) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& p : t->partitions()) labels.push_back(p.str());
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t a = 0; a < t->partitions().size(); ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t b = 0; b < t->partitions().size(); ++b)
        row.push_back(t->at(static_cast<int>(a), static_cast<int>(b)).get_str());
      rows.push_back(std::move(row));
    }
    tables[std::to_string(m)] = {{"partitions", labels}, {"values", rows}};
  }
  nlohmann::json doc = {{"schema", kCacheSchema}, {"tables", tables}};
  return doc.dump(1);
}

void save_character_cache(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write character cache " + path);
  out << character_cache_json() << "\n";
}

int load_character_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("character cache " + path + ": " + e.what());
  }
  if (doc.value("schema", "") != kCacheSchema) throw DomainError("character cache " + path + ": unknown schema");

  int loaded = 0;
  for (const auto& [key, t] : doc.at("tables").items()) {
    const int m = std::stoi(key);
    auto parts = partitions_of(m);
    const auto& labels = t.at("partitions");
    const auto& rows = t.at("values");
    if (labels.size() != parts.size() || rows.size() != parts.size())
      throw DomainError("character cache: table " + key + " has the wrong shape");
    std::vector<std::vector<Integer>> values;
    for (std::size_t a = 0; a < parts.size(); ++a) {
      if (labels[a].get<std::string>() != parts[a].str() || rows[a].size() != parts.size())
        throw DomainError("character cache: table " + key + " rows are mislabelled");
      std::vector<Integer> row;
      for (const auto& v : rows[a]) row.emplace_back(v.get<std::string>());
      // Column (1^m) must carry the degrees.
      if (row.back() != f_dim(parts[a])) throw DomainError("character cache: table " + key + " fails the degree check");
      values.push_back(std::move(row));
    }
    auto table = std::make_unique<CharacterTable>(m, std::move(parts), std::move(values));
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    c.characters.try_emplace(m, std::move(table));
    ++loaded;
  }
  return loaded;
}

}  // namespace coe
