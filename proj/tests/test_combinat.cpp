#include <map>
#include <random>
#include <numeric>
#include <set>

#include "coe/combinat.hpp"
#include "doctest.h"

using namespace coe;

namespace {

// Independent count of partitions by recursion on the largest part.
int count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  int total = 0;
  for (int k = 1; k <= std::min(n, max_part); ++k) total += count_partitions(n - k, k);
  return total;
}

}  // namespace

TEST_CASE("partitions") {
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition{4});
  CHECK(p4.back() == Partition::ones(4));
  for (int n = 1; n <= 8; ++n) CHECK(static_cast<int>(partitions_of(n).size()) == count_partitions(n, n));
  CHECK(partitions_of(6).size() == 11);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
  CHECK(Partition::from_unsorted({1, 3, 2}) == Partition{3, 2, 1});
  CHECK(Partition{2, 1}.doubled() == Partition{4, 2});
  CHECK(Partition{3, 1, 1}.str() == "3,1,1");
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
}

TEST_CASE("hook lengths, dimensions and class sizes") {
  CHECK(f_dim(Partition{2, 1}) == 2);
  CHECK(f_dim(Partition{3, 2}) == 5);
  CHECK(hook_product(Partition{2, 2}) == 12);
  for (int m = 1; m <= 7; ++m) {
    Integer squares = 0;
    Rational classes = 0;
    for (const auto& l : partitions_of(m)) {
      squares += f_dim(l) * f_dim(l);
      classes += ratio(1, z_mu(l));
    }
    CHECK(squares == factorial(m));
    CHECK(classes == 1);
  }
}

TEST_CASE("content polynomials") {
  CHECK(c_prime(Partition{2}) == Poly::linear(0) * Poly::linear(2));
  CHECK(c_prime(Partition{1, 1}) == Poly::linear(0) * Poly::linear(-1));
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitions_of(n)) CHECK(c_content(l.doubled()) == c_prime(l) * c_prime(l).shifted(1));
}

TEST_CASE("permutations") {
  const Permutation s{2, 3, 1};
  CHECK(s(1) == 2);
  CHECK((s * s.inverse()).is_identity());
  CHECK((s * s)(1) == 3);
  CHECK(cycle_type(s) == Partition{3});
  CHECK(cycle_type(Permutation{2, 1, 3, 4}) == Partition{2, 1, 1});
  CHECK_THROWS_AS(Permutation({1, 1}), DomainError);
  CHECK_THROWS_AS(Permutation({0, 1}), DomainError);
}

TEST_CASE("coset type of the worked example") {
  const Permutation s{4, 1, 6, 5, 2, 8, 7, 3};
  const auto g = coset_graph(s);
  CHECK(g.components.size() == 2);
  CHECK(coset_type(s) == Partition{3, 1});
  CHECK(coset_length(s.zero_based()) == 2);
  CHECK(coset_type(Permutation::identity(6)) == Partition::ones(3));
}

TEST_CASE("hyperoctahedral group") {
  for (int n = 1; n <= 4; ++n) {
    const auto h = hyperoctahedral_elements(n);
    Integer size = factorial(n);
    size <<= static_cast<mp_bitcnt_t>(n);
    CHECK(Integer(static_cast<unsigned long>(h.size())) == size);
    std::set<std::vector<int>> distinct;
    for (const auto& z : h) {
      CHECK(coset_type(z) == Partition::ones(n));
      distinct.insert(z.one_based());
    }
    CHECK(distinct.size() == h.size());
  }
  Limits tight;
  tight.budget = 10;
  CHECK_THROWS_AS(for_each_hyperoctahedral(3, [](const Permutation&) {}, tight), ResourceError);
}

TEST_CASE("double cosets partition S_2n") {
  for (int n = 1; n <= 4; ++n) {
    std::map<Partition, Integer> seen;
    for_each_permutation(2 * n, [&](const Permutation& s) { ++seen[coset_type(s)]; });
    Integer total = 0;
    for (const auto& mu : partitions_of(n)) {
      CHECK(seen[mu] == double_coset_size(mu));
      CHECK(coset_type(coset_representative(mu)) == mu);
      total += double_coset_size(mu);
    }
    CHECK(total == factorial(2 * n));
  }
}

TEST_CASE("coset type is H_n bi-invariant") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 4; ++n) {
    const auto h = hyperoctahedral_elements(n);
    std::uniform_int_distribution<std::size_t> pick(0, h.size() - 1);
    std::vector<int> base(static_cast<std::size_t>(2 * n));
    std::iota(base.begin(), base.end(), 1);
    for (int t = 0; t < 50; ++t) {
      std::shuffle(base.begin(), base.end(), rng);
      const Permutation s(base);
      const Partition mu = coset_type(s);
      CHECK(coset_type(h[pick(rng)] * s * h[pick(rng)]) == mu);
      CHECK(coset_type(s.inverse()) == mu);
    }
  }
}
