#include <algorithm>
#include <random>

#include "coe/moments.hpp"
#include "coe/weingarten.hpp"
#include "doctest.h"

using namespace coe;

TEST_CASE("index sequences") {
  const IndexSeq i = IndexSeq::parse("1,2,3,4");
  CHECK(i.half_degree() == 2);
  CHECK(i.max_index() == 4);
  CHECK(i[2] == 2);
  CHECK(i.act(Permutation{2, 1, 4, 3}) == IndexSeq{2, 1, 4, 3});
  CHECK(i.relabel({4, 3, 2, 1}) == IndexSeq{4, 3, 2, 1});
  CHECK(i.str() == "1,2,3,4");
  CHECK_THROWS_AS(IndexSeq::parse("1,2,3"), DomainError);
  CHECK_THROWS_AS(IndexSeq::parse("0,1"), DomainError);
  CHECK_THROWS_AS(IndexSeq::parse("1,x"), DomainError);
}

TEST_CASE("matching permutations") {
  CHECK(matching_count(std::vector<int>{1, 1, 1, 1}, std::vector<int>{1, 1, 1, 1}) == 24);
  CHECK(matching_count(std::vector<int>{1, 2}, std::vector<int>{1, 1}) == 0);
  const auto l2 = matching_permutations({1, 2, 1, 2}, {1, 1, 2, 2});
  CHECK(l2.size() == 4);
  for (const auto& s : l2) CHECK(IndexSeq({1, 2, 1, 2}).act(s) == IndexSeq{1, 1, 2, 2});
  Limits tight;
  tight.budget = 100;
  CHECK_THROWS_AS(matching_permutations({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, tight), ResourceError);
}

TEST_CASE("worked examples") {
  CHECK(coe_moment_symbolic({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}).symbolic == parse_ratfunc("48/(z(z+2)(z+4))"));
  CHECK(coe_moment({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, 1) == 1);
  CHECK(coe_moment_symbolic({1, 1, 2, 2}, {1, 1, 2, 2}).symbolic == parse_ratfunc("4(z+1)/(z(z+2)(z-1))"));
  CHECK(coe_moment_symbolic({1, 2, 1, 2}, {1, 1, 2, 2}).symbolic == parse_ratfunc("-4/(z(z+2)(z-1))"));
  CHECK(coe_moment({1, 2}, {1, 2}, 4) == ratio(1, 5));
  CHECK(coe_moment({1, 2}, {2, 1}, 4) == ratio(1, 5));
  CHECK(coe_moment({1, 1}, {1, 1}, 4) == ratio(2, 5));
  CHECK(coe_moment({1, 1}, {2, 2}, 4) == 0);
  const auto r = coe_moment_result({1, 1, 2, 2}, {1, 1, 2, 2}, 3);
  CHECK(r.match_count == 4);
  CHECK(r.per_coset.at(Partition{1, 1}) == 4);
  CHECK(*r.value_at == ratio(4 * 5, 4 * 3 * 6));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(coe_moment({1, 4}, {1, 4}, 3), DomainError);
  CHECK_THROWS_AS(coe_moment({1, 1}, {1, 1}, 0), DomainError);
  Limits small;
  small.n_max = 2;
  CHECK_THROWS_AS(coe_moment_symbolic({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, small), ResourceError);
  // Different lengths vanish without enumeration.
  CHECK(coe_moment_symbolic({1, 1}, {1, 1, 2, 2}).symbolic.is_zero());
}

TEST_CASE("vanishing criterion") {
  CHECK(coe_vanishes({1, 1}, {1, 1, 2, 2}));
  CHECK(coe_vanishes({1, 2}, {3, 4}));
  CHECK_FALSE(coe_vanishes({1, 2, 1, 2}, {1, 1, 2, 2}));
}

TEST_CASE("closed forms agree with the engine") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> d(static_cast<std::size_t>(2 * n), 3);
    std::vector<int> o;
    for (int k = 0; k < n; ++k) o.insert(o.end(), {2, 5});
    CHECK(shift(coe_moment_symbolic(IndexSeq(d), IndexSeq(d)).symbolic) == diagonal_moment_symbolic(n));
    CHECK(shift(coe_moment_symbolic(IndexSeq(o), IndexSeq(o)).symbolic) == offdiagonal_moment_symbolic(n));
    CHECK(diagonal_moment(n, 5) == eval_at(diagonal_moment_symbolic(n), 5));
  }
  CHECK(offdiagonal_moment(1, 3) == ratio(1, 4));
  CHECK_THROWS_AS(offdiagonal_moment(1, 1), DomainError);
  for (int n = 1; n <= 5; ++n) {
    CHECK(two_row_sum(n) == offdiagonal_moment_symbolic(n));
    CHECK(orthogonal_diagonal_pair_sum(n) == orthogonal_diagonal_pair_closed_form(n));
    for (int r = 0; r <= n / 2; ++r) CHECK(a_r_term(n, r) == a_r_definition(n, r));
  }
}

TEST_CASE("symmetry and relabelling invariance") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 3;
    std::uniform_int_distribution<int> value(1, 3);
    std::vector<int> iv(static_cast<std::size_t>(2 * n));
    for (auto& v : iv) v = value(rng);
    std::vector<int> jv = iv;
    std::shuffle(jv.begin(), jv.end(), rng);
    const IndexSeq i(iv), j(jv);
    const RatFunc m = coe_moment_symbolic(i, j).symbolic;
    CHECK(coe_moment_symbolic(j, i).symbolic == m);
    std::vector<int> perm{4, 7, 1};
    CHECK(coe_moment_symbolic(i.relabel(perm), j.relabel(perm)).symbolic == m);
    // Simultaneous pairwise swap (i_{2k-1}, i_{2k}) uses the symmetry of V.
    std::vector<int> is = iv;
    std::swap(is[0], is[1]);
    CHECK(coe_moment_symbolic(IndexSeq(is), j).symbolic == m);
  }
}

TEST_CASE("unitary oracle") {
  CHECK(unitary_oracle({1, 1}, {1, 1}) == parse_ratfunc("2/(z+1)"));
  CHECK(unitary_oracle({1, 2, 1, 2}, {1, 1, 2, 2}) == shift(coe_moment_symbolic({1, 2, 1, 2}, {1, 1, 2, 2}).symbolic));
  CHECK_THROWS_AS(unitary_oracle({1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1}), ResourceError);
  const std::vector<int> one{1, 1};
  CHECK(haar_unitary_moment(one, one, one, one) == parse_ratfunc("2/(z(z+1))"));
  const std::vector<int> a{1}, b{2};
  CHECK(haar_unitary_moment(a, a, a, b).is_zero());
}

TEST_CASE("tilde solution counts") {
  CHECK(count_tilde_solutions(Permutation{4, 1, 6, 5, 2, 8, 7, 3}, 2) == 4);
  CHECK(count_tilde_solutions(Permutation::identity(4), 3) == 9);
  CHECK(count_tilde_solutions(Permutation{1, 3, 2, 4}, 3) == 3);
}

TEST_CASE("asymptotics") {
  const auto a = asymptotic_counts({1, 2, 1, 2}, {1, 1, 2, 2});
  CHECK(a.s == 0);
  CHECK(a.s_prime == 4);
  const auto e = moment_expansion({1, 2, 1, 2}, {1, 1, 2, 2}, 2);
  CHECK(e.at(-2) == 0);
  CHECK(e.at(-3) == -4);
  const auto d = moment_expansion({1, 1}, {1, 1}, 3);
  CHECK(d.at(-1) == 2);
  CHECK(d.at(-2) == -2);
  CHECK(d.at(-3) == 2);
}
