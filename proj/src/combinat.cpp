#include "coe/combinat.hpp"

#include <algorithm>
#include <numeric>

namespace coe {

Limits& default_limits() {
  static Limits limits;
  return limits;
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw DomainError("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw DomainError("partition parts must be weakly decreasing");
    weight_ += parts_[k];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::transposition_type(int n) {
  if (n < 2) throw DomainError("(2,1^(n-2)) needs n >= 2");
  std::vector<int> p(static_cast<std::size_t>(n - 1), 1);
  p[0] = 2;
  return Partition(std::move(p));
}

int Partition::multiplicity(int r) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), r));
}

Partition Partition::doubled() const {
  std::vector<int> p = parts_;
  for (auto& x : p) x *= 2;
  return Partition(std::move(p));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Depth-first with parts bounded by the previous part, largest first.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> c(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

Integer hook_product(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  Integer h = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) h *= lambda[i] + conj[j] - i - j - 1;
  return h;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Integer f_dim(const Partition& lambda) { return factorial(lambda.weight()) / hook_product(lambda); }

Integer z_mu(const Partition& mu) {
  Integer z = 1;
  std::size_t k = 0;
  const auto& p = mu.parts();
  while (k < p.size()) {
    std::size_t run = k;
    while (run < p.size() && p[run] == p[k]) ++run;
    const int m = static_cast<int>(run - k);
    Integer rm;
    mpz_ui_pow_ui(rm.get_mpz_t(), static_cast<unsigned long>(p[k]), static_cast<unsigned long>(m));
    z *= rm * factorial(m);
    k = run;
  }
  return z;
}

namespace {

// ∏ over cells of (z + a*j - i + b), 1-based cells.
Poly cell_product(const Partition& lambda, int a, int b) {
  Poly acc = Poly::constant(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j) acc *= Poly::linear(a * j - i + b);
  return acc;
}

}  // namespace

Poly c_content(const Partition& lambda) { return cell_product(lambda, 1, 0); }
Poly c_prime(const Partition& lambda) { return cell_product(lambda, 2, -1); }

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(const std::vector<int>& one_based) {
  const int m = static_cast<int>(one_based.size());
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  img_.reserve(one_based.size());
  for (int v : one_based) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)])
      throw DomainError("not a permutation of 1.." + std::to_string(m));
    seen[static_cast<std::size_t>(v - 1)] = true;
    img_.push_back(v - 1);
  }
}

Permutation Permutation::identity(int m) {
  Permutation p;
  p.img_.resize(static_cast<std::size_t>(m));
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Permutation Permutation::from_zero_based(std::vector<int> images) {
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> v(img_);
  for (auto& x : v) ++x;
  return v;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) inv[static_cast<std::size_t>(img_[k])] = static_cast<int>(k);
  return from_zero_based(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != static_cast<int>(k)) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < img_.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(img_[k] + 1);
  }
  return s + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("composing permutations of different degree");
  auto pa = a.zero_based();
  auto pb = b.zero_based();
  std::vector<int> out(pb.size());
  for (std::size_t k = 0; k < pb.size(); ++k) out[k] = pa[static_cast<std::size_t>(pb[k])];
  return Permutation::from_zero_based(std::move(out));
}

Partition cycle_type(std::span<const int> p) {
  std::vector<int> lens;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(p[k])) {
      seen[k] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return Partition::from_unsorted(std::move(lens));
}

Partition cycle_type(const Permutation& sigma) { return cycle_type(sigma.zero_based()); }

// ---------------------------------------------------------------- coset graph

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> parent;
};

UnionFind pairing_components(std::span<const int> p) {
  if (p.size() % 2 != 0) throw DomainError("coset graph needs a permutation of even degree");
  UnionFind uf(p.size());
  for (std::size_t k = 0; k + 1 < p.size(); k += 2) {
    uf.unite(static_cast<int>(k), static_cast<int>(k + 1));
    uf.unite(p[k], p[k + 1]);
  }
  return uf;
}

}  // namespace

CosetGraph coset_graph(const Permutation& sigma) {
  auto p = sigma.zero_based();
  UnionFind uf = pairing_components(p);
  CosetGraph g;
  g.vertex_count = sigma.degree();
  std::vector<int> slot(p.size(), -1);
  for (int v = 0; v < g.vertex_count; ++v) {
    const int root = uf.find(v);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(g.components.size());
      g.components.emplace_back();
    }
    g.components[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(v + 1);
  }
  return g;
}

Partition coset_type(std::span<const int> p) {
  UnionFind uf = pairing_components(p);
  std::vector<int> size(p.size(), 0);
  for (std::size_t v = 0; v < p.size(); ++v) ++size[static_cast<std::size_t>(uf.find(static_cast<int>(v)))];
  std::vector<int> halves;
  for (int s : size)
    if (s > 0) halves.push_back(s / 2);
  return Partition::from_unsorted(std::move(halves));
}

Partition coset_type(const Permutation& sigma) { return coset_type(sigma.zero_based()); }

int coset_length(std::span<const int> p) {
  UnionFind uf = pairing_components(p);
  int count = 0;
  for (std::size_t v = 0; v < p.size(); ++v)
    if (uf.find(static_cast<int>(v)) == static_cast<int>(v)) ++count;
  return count;
}

// ---------------------------------------------------------------- H_n

void for_each_hyperoctahedral(int n, const std::function<void(const Permutation&)>& visit,
                              const Limits& limits) {
  if (n < 1) throw DomainError("hyperoctahedral group needs n >= 1");
  Integer order = factorial(n);
  order <<= static_cast<mp_bitcnt_t>(n);
  if (order > limits.budget)
    throw ResourceError("|H_" + std::to_string(n) + "| = " + order.get_str() + " exceeds the enumeration budget");

  std::vector<int> pairs(static_cast<std::size_t>(n));
  std::iota(pairs.begin(), pairs.end(), 0);
  std::vector<int> img(2 * static_cast<std::size_t>(n));
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      // Pair k goes to pair pairs[k], swapped iff bit k of mask is set.
      for (int k = 0; k < n; ++k) {
        const int base = 2 * pairs[static_cast<std::size_t>(k)];
        const int swap = (mask >> k) & 1u;
        img[2 * static_cast<std::size_t>(k)] = base + swap;
        img[2 * static_cast<std::size_t>(k) + 1] = base + 1 - swap;
      }
      visit(Permutation::from_zero_based(img));
    }
  } while (std::next_permutation(pairs.begin(), pairs.end()));
}

std::vector<Permutation> hyperoctahedral_elements(int n, const Limits& limits) {
  std::vector<Permutation> out;
  for_each_hyperoctahedral(n, [&](const Permutation& z) { out.push_back(z); }, limits);
  return out;
}

Integer double_coset_size(const Partition& mu) {
  const int n = mu.weight();
  Integer hn = factorial(n);
  hn <<= static_cast<mp_bitcnt_t>(n);
  Integer denom = z_mu(mu);
  denom <<= static_cast<mp_bitcnt_t>(mu.length());
  return hn * hn / denom;
}

Permutation coset_representative(const Partition& mu) {
  std::vector<int> img;
  int start = 0;  // first vertex of the current block, 0-based
  for (int part : mu.parts()) {
    const int len = 2 * part;
    for (int k = 0; k < len; ++k) {
      if (part == 1) img.push_back(start + k);
      else img.push_back(start + (k + 1) % len);
    }
    start += len;
  }
  return Permutation::from_zero_based(std::move(img));
}

void for_each_permutation(int m, const std::function<void(const Permutation&)>& visit,
                          const Limits& limits) {
  if (factorial(m) > limits.budget)
    throw ResourceError("S_" + std::to_string(m) + " exceeds the enumeration budget");
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 0);
  do {
    visit(Permutation::from_zero_based(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace coe
