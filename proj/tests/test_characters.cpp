#include <cstdio>
#include <fstream>

#include "coe/characters.hpp"
#include "doctest.h"

using namespace coe;

TEST_CASE("Murnaghan-Nakayama values") {
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(mn_character(Partition{1, 1, 1, 1}, Partition{2, 1, 1}) == -1);
  CHECK(mn_character(Partition{3, 1}, Partition{2, 2}) == -1);
  CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), DomainError);
}

TEST_CASE("character tables are orthogonal") {
  for (int m = 1; m <= 7; ++m) {
    const auto& t = character_table(m);
    const auto& ps = t.partitions();
    for (const auto& a : ps)
      for (const auto& b : ps) {
        Rational inner = 0;
        for (const auto& rho : ps) inner += Rational(t.at(a, rho) * t.at(b, rho)) / Rational(z_mu(rho));
        CHECK(inner == Rational(a == b ? 1 : 0));
      }
    for (const auto& l : ps) CHECK(t.at(l, Partition::ones(m)) == f_dim(l));
  }
  Limits small;
  small.n_max = 2;
  CHECK_THROWS_AS(character_table(6, small), ResourceError);
}

TEST_CASE("zonal spherical functions") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitions_of(n)) CHECK(zonal_spherical(l, Partition::ones(n)) == 1);
  // omega^(n) is identically one.
  for (const auto& mu : partitions_of(3)) CHECK(zonal_spherical(Partition{3}, mu) == 1);
  CHECK(zonal_spherical(Partition{1, 1}, Partition{2}) == ratio(-1, 2));
  const Permutation s{4, 1, 6, 5, 2, 8, 7, 3};
  CHECK(zonal_spherical_at(Partition{2, 2}, s) == zonal_spherical(Partition{2, 2}, coset_type(s)));
}

TEST_CASE("convolution identities on S_4") {
  for (const auto& l : partitions_of(2)) {
    auto conv = convolve_class(zonal_function(l), character_function(l.doubled()), 4);
    const Rational factor = ratio(factorial(4), f_dim(l.doubled()));
    for (const auto& mu : partitions_of(2)) CHECK(conv(coset_representative(mu)) == factor * zonal_spherical(l, mu));
  }
  const Permutation s{2, 1, 4, 3};
  for (const auto& a : partitions_of(4))
    for (const auto& b : partitions_of(4)) {
      const Rational got = convolve_at(character_function(a), character_function(b), s);
      const Rational want = a == b ? ratio(factorial(4), f_dim(a)) * Rational(mn_character(a, cycle_type(s))) : Rational(0);
      CHECK(got == want);
    }
}

TEST_CASE("character cache round trip") {
  (void)character_table(5);
  const std::string path = "coe_test_cache.json";
  save_character_cache(path);
  CHECK(load_character_cache(path) >= 1);
  std::remove(path.c_str());

  {
    std::ofstream bad(path);
    bad << R"({"schema":"coe-character-tables/1","tables":{"2":{"partitions":["2","1,1"],"values":[["1","1"],["1","-1"]]}}})";
  }
  CHECK_THROWS(load_character_cache(path));
  std::remove(path.c_str());
}
