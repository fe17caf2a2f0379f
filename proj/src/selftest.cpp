#include "coe/selftest.hpp"

#include <chrono>
#include <functional>

#include "coe/characters.hpp"
#include "coe/moments.hpp"
#include "coe/montecarlo.hpp"
#include "coe/weingarten.hpp"

namespace coe {

namespace {

struct CheckFailure {
  std::string detail;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw CheckFailure{detail};
}

void require_rf(const RatFunc& got, const std::string& expected, const std::string& var = "z") {
  const RatFunc want = parse_ratfunc(expected, var);
  require(got == want, "got " + render(got, {.var = var}) + ", want " + render(want, {.var = var}));
}

void require_q(const Rational& got, const Rational& want) {
  require(got == want, "got " + got.get_str() + ", want " + want.get_str());
}

struct Check {
  std::string group;
  std::string name;
  std::function<void()> body;
};

std::vector<Check> symbolic_checks() {
  std::vector<Check> c;
  auto add = [&](std::string g, std::string n, std::function<void()> f) {
    c.push_back({std::move(g), std::move(n), std::move(f)});
  };

  // combinat
  add("combinat", "c_prime (2) = z(z+2)", [] { require_rf(RatFunc(c_prime({2})), "z(z+2)"); });
  add("combinat", "coset graph of [4,1,6,5,2,8,7,3] has components of sizes 6 and 2", [] {
    const auto g = coset_graph(Permutation{4, 1, 6, 5, 2, 8, 7, 3});
    require(g.components.size() == 2 && g.components[0].size() == 6 && g.components[1].size() == 2,
            "unexpected components");
  });
  add("combinat", "coset type of [4,1,6,5,2,8,7,3] is (3,1)",
      [] { require(coset_type(Permutation{4, 1, 6, 5, 2, 8, 7, 3}) == Partition{3, 1}, "wrong coset type"); });
  add("combinat", "double coset sizes sum to (2n)!, n <= 3", [] {
    for (int n = 1; n <= 3; ++n) {
      Integer s = 0;
      for (const auto& mu : partitions_of(n)) s += double_coset_size(mu);
      require(s == factorial(2 * n), "n = " + std::to_string(n));
    }
  });
  add("combinat", "coset-type class sizes match |H_mu| by enumeration, n <= 3", [] {
    for (int n = 1; n <= 3; ++n) {
      std::map<Partition, Integer> seen;
      for_each_permutation(2 * n, [&](const Permutation& s) { ++seen[coset_type(s)]; });
      for (const auto& mu : partitions_of(n)) require(seen[mu] == double_coset_size(mu), "mu = " + mu.str());
    }
  });
  add("combinat", "C_{2 lambda}(z) = C'_lambda(z) C'_lambda(z+1), n <= 3", [] {
    for (int n = 1; n <= 3; ++n)
      for (const auto& l : partitions_of(n))
        require(c_content(l.doubled()) == c_prime(l) * c_prime(l).shifted(1), "lambda = " + l.str());
  });

  // characters
  add("characters", "omega^lambda(id) = 1, n <= 3", [] {
    for (int n = 1; n <= 3; ++n)
      for (const auto& l : partitions_of(n)) require_q(zonal_spherical(l, Partition::ones(n)), 1);
  });
  add("characters", "omega^lambda * chi^{2 lambda} = ((2n)!/f^{2 lambda}) omega^lambda, n = 2", [] {
    const Partition l{1, 1};
    auto lhs = convolve_class(zonal_function(l), character_function(l.doubled()), 4);
    const Rational factor = ratio(factorial(4), f_dim(l.doubled()));
    for (const auto& mu : partitions_of(2)) {
      const auto s = coset_representative(mu);
      require_q(lhs(s), factor * zonal_spherical(l, mu));
    }
  });
  add("characters", "omega^lambda * chi^mu = 0 for mu != 2 lambda, n = 2", [] {
    for (const auto& l : partitions_of(2))
      for (const auto& mu : partitions_of(4)) {
        if (mu == l.doubled()) continue;
        auto conv = convolve_class(zonal_function(l), character_function(mu), 4);
        for (const auto& nu : partitions_of(2)) require_q(conv(coset_representative(nu)), 0);
      }
  });
  add("characters", "chi^mu * chi^rho = ((2n)!/f^mu) delta chi^mu, 2n = 4", [] {
    for (const auto& mu : partitions_of(4))
      for (const auto& rho : partitions_of(4)) {
        auto conv = convolve_class(character_function(mu), character_function(rho), 4);
        const auto s = Permutation{2, 3, 1, 4};
        const Rational want = mu == rho ? ratio(factorial(4), f_dim(mu)) * Rational(mn_character(mu, cycle_type(s))) : Rational(0);
        require_q(conv(s), want);
      }
  });
  add("characters", "z^{l'(sigma)} expansion in zonal spherical functions, n <= 3", [] {
    for (int n = 1; n <= 3; ++n) {
      Integer hn = factorial(n);
      hn <<= static_cast<mp_bitcnt_t>(n);
      const Rational pre = ratio(hn, factorial(2 * n));
      for (const auto& mu : partitions_of(n))
        for (const Rational& z : {Rational(-3), Rational(-1), Rational(1, 2), Rational(1), Rational(2), Rational(5), Rational(10)}) {
          Rational rhs = 0;
          for (const auto& l : partitions_of(n)) rhs += Rational(f_dim(l.doubled())) * c_prime(l)(z) * zonal_spherical(l, mu);
          Rational lhs = 1;
          for (int k = 0; k < mu.length(); ++k) lhs *= z;
          require_q(pre * rhs, lhs);
        }
    }
  });

  // qz
  add("qz", "2/((z+1)(z-1)) - 2/(z(z+1)(z-1)) = 2/(z(z+1))",
      [] { require_rf(parse_ratfunc("2/((z+1)(z-1))") + parse_ratfunc("-2/(z(z+1)(z-1))"), "2/(z(z+1))"); });
  add("qz", "48/(z(z+2)(z+4)) at z = 2 is 1", [] { require_q(eval_at(parse_ratfunc("48/(z(z+2)(z+4))"), 2), 1); });
  add("qz", "shift of Wg^O_1 is 1/(z+1)", [] { require_rf(shift(wg_o(1, {1})), "1/(z+1)"); });
  add("qz", "expansion of (z+1)/(z(z+2)(z-1)) starts N^-2 + 0 N^-3", [] {
    const auto s = series_at_infinity(parse_ratfunc("(z+1)/(z(z+2)(z-1))"), 2);
    require(s.top_exponent == -2 && s.coeffs[0] == 1 && s.coeffs[1] == 0, "wrong expansion");
  });
  add("qz", "expansion of -1/(z(z+2)(z-1)) starts -N^-3", [] {
    const auto s = series_at_infinity(parse_ratfunc("-1/(z(z+2)(z-1))"), 1);
    require(s.top_exponent == -3 && s.coeffs[0] == -1, "wrong expansion");
  });

  // weingarten
  const std::vector<std::pair<Partition, std::string>> table = {
      {Partition{1}, "1/z"},
      {Partition{2}, "-1/(z(z+2)(z-1))"},
      {Partition{1, 1}, "(z+1)/(z(z+2)(z-1))"},
      {Partition{3}, "2/(z(z+2)(z+4)(z-1)(z-2))"},
      {Partition{2, 1}, "-1/(z(z+4)(z-1)(z-2))"},
      {Partition{1, 1, 1}, "(z^2+3z-2)/(z(z+2)(z+4)(z-1)(z-2))"},
  };
  for (const auto& [mu, text] : table) {
    add("weingarten", "Wg^O_" + std::to_string(mu.weight()) + "([" + mu.str() + "]) = " + text, [mu, text] {
      const std::string got = render(wg_o(mu.weight(), mu));
      require(got == text, "rendered " + got);
    });
  }
  add("weingarten", "Wg^O_3([1^3]) has a pole at N = 2", [] {
    try {
      (void)wg_o_at(3, {1, 1, 1}, 2);
    } catch (const PoleError&) {
      return;
    }
    require(false, "no pole error");
  });
  add("weingarten", "Wg^U_2 values", [] {
    require_rf(wg_u(2, {1, 1}), "1/((z+1)(z-1))");
    require_rf(wg_u(2, {2}), "-1/(z(z+1)(z-1))");
  });
  add("weingarten", "E|u_11|^4 = 2/(z(z+1))", [] {
    const std::vector<int> one{1, 1};
    require_rf(haar_unitary_moment(one, one, one, one), "2/(z(z+1))");
  });
  add("weingarten", "sum over S_2n of Wg^O_n = 2^n n!/(z(z+2)...(z+2n-2)), n <= 3", [] {
    for (int n = 1; n <= 3; ++n) {
      RatFunc s;
      for (const auto& mu : partitions_of(n)) s += wg_o(n, mu) * RatFunc(Rational(double_coset_size(mu)));
      require(shift(s) == diagonal_moment_symbolic(n), "n = " + std::to_string(n));
    }
  });
  add("weingarten", "three asymptotic regimes of Wg^O_n, n <= 3", [] {
    for (int n = 1; n <= 3; ++n)
      for (const auto& mu : partitions_of(n)) {
        const auto a = wg_o_asym(n, mu);
        if (a.regime == WgRegime::identity) require(a.at_n == 1 && a.at_n1 == 0, mu.str());
        else if (a.regime == WgRegime::transposition) require(a.at_n == 0 && a.at_n1 == -1, mu.str());
        else require(a.at_n == 0 && a.at_n1 == 0, mu.str());
      }
  });

  // moments
  add("moments", "matching set L_2", [] {
    const auto got = matching_permutations({1, 2, 1, 2}, {1, 1, 2, 2});
    const std::vector<Permutation> want{{1, 3, 2, 4}, {1, 3, 4, 2}, {3, 1, 2, 4}, {3, 1, 4, 2}};
    require(got.size() == 4 && std::is_permutation(got.begin(), got.end(), want.begin()), "wrong L_2");
  });
  add("moments", "E|v_11|^6 = 48/(z(z+2)(z+4)) at z = N+1", [] {
    require_rf(coe_moment_symbolic({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}).symbolic, "48/(z(z+2)(z+4))");
    require_q(coe_moment({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, 1), 1);
  });
  add("moments", "E|v_ii v_jj|^2 and E[v_ij^2 conj(v_ii v_jj)]", [] {
    require_rf(shift(coe_moment_symbolic({1, 1, 2, 2}, {1, 1, 2, 2}).symbolic), "4(N+2)/((N+1)N(N+3))", "N");
    require_rf(shift(coe_moment_symbolic({1, 2, 1, 2}, {1, 1, 2, 2}).symbolic), "-4/((N+1)N(N+3))", "N");
  });
  add("moments", "degree-1 table", [] {
    for (int N = 2; N <= 4; ++N) {
      require_q(coe_moment({1, 1}, {1, 1}, N), ratio(2, N + 1));
      require_q(coe_moment({1, 2}, {1, 2}, N), ratio(1, N + 1));
      require_q(coe_moment({1, 2}, {2, 1}, N), ratio(1, N + 1));
      require_q(coe_moment({1, 2}, {1, 1}, N), 0);
    }
  });
  add("moments", "degree-3 examples", [] {
    require_rf(shift(coe_moment_symbolic({1, 1, 2, 2, 3, 3}, {1, 1, 2, 2, 3, 3}).symbolic),
               "8(N^2+5N+2)/((N-1)N(N+1)(N+3)(N+5))", "N");
    require_rf(shift(coe_moment_symbolic({1, 2, 3, 4, 5, 6}, {1, 3, 2, 6, 4, 5}).symbolic),
               "2/((N-1)N(N+1)(N+3)(N+5))", "N");
    require_rf(shift(coe_moment_symbolic({1, 1, 1, 1, 2, 2}, {1, 1, 1, 1, 2, 2}).symbolic),
               "16(N+4)/(N(N+1)(N+3)(N+5))", "N");
  });
  add("moments", "vanishing criterion", [] {
    require(coe_vanishes({1, 1}, {1, 1, 2, 2}) && coe_vanishes({1, 2}, {3, 4}) && !coe_vanishes({1, 2, 1, 2}, {1, 1, 2, 2}),
            "wrong vanishing verdicts");
  });
  add("moments", "single-entry closed forms agree with the engine, n <= 3", [] {
    for (int n = 1; n <= 3; ++n) {
      std::vector<int> d(static_cast<std::size_t>(2 * n), 1);
      std::vector<int> o;
      for (int k = 0; k < n; ++k) o.insert(o.end(), {1, 2});
      require(shift(coe_moment_symbolic(IndexSeq(d), IndexSeq(d)).symbolic) == diagonal_moment_symbolic(n), "diagonal");
      require(shift(coe_moment_symbolic(IndexSeq(o), IndexSeq(o)).symbolic) == offdiagonal_moment_symbolic(n), "off-diagonal");
    }
  });
  add("moments", "A_r forms, partial sums and (n!)^2 sum A_r, n <= 5", [] {
    for (int n = 1; n <= 5; ++n) {
      RatFunc partial;
      for (int r = 0; r <= n / 2; ++r) {
        require(a_r_term(n, r) == a_r_definition(n, r), "A_r forms differ");
        partial += a_r_term(n, r);
        require(partial == a_partial_sum(n, r), "partial sum");
      }
      const Integer nf = factorial(n);
      require(partial * RatFunc(Rational(nf * nf)) == offdiagonal_moment_symbolic(n), "sum of A_r");
      require(two_row_sum(n) == offdiagonal_moment_symbolic(n), "two-row sum");
      require(orthogonal_diagonal_pair_sum(n) == orthogonal_diagonal_pair_closed_form(n), "orthogonal identity");
    }
  });
  add("moments", "unitary oracle examples", [] {
    require_rf(unitary_oracle({1, 1}, {1, 1}), "2/(z+1)");
    require_rf(unitary_oracle({1, 1, 2, 2}, {1, 1, 2, 2}), "4(z+2)/((z+1)z(z+3))");
  });
  add("moments", "unitary oracle equals the orthogonal sum, all pairs over {1,2}^4", [] {
    std::vector<IndexSeq> seqs;
    for (int code = 0; code < 16; ++code) seqs.push_back(IndexSeq{1 + (code & 1), 1 + ((code >> 1) & 1), 1 + ((code >> 2) & 1), 1 + ((code >> 3) & 1)});
    for (const auto& i : seqs)
      for (const auto& j : seqs) require(unitary_oracle(i, j) == shift(coe_moment_symbolic(i, j).symbolic), i.str() + " | " + j.str());
  });
  add("moments", "|A(tau,N)| = N^2 for the S_8 example at N = 2",
      [] { require(count_tilde_solutions(Permutation{4, 1, 6, 5, 2, 8, 7, 3}, 2) == 4, "count differs"); });
  add("moments", "|A(tau,N)| = N^{l'(tau)} on S_4, N <= 3", [] {
    for (int N = 2; N <= 3; ++N)
      for_each_permutation(4, [&](const Permutation& t) {
        Integer want;
        mpz_ui_pow_ui(want.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(coset_length(t.zero_based())));
        require(count_tilde_solutions(t, N) == want, t.str());
      });
  });
  add("moments", "asymptotic counts s, s'", [] {
    for (int n = 2; n <= 3; ++n) {
      std::vector<int> d(static_cast<std::size_t>(2 * n), 1);
      const auto a = asymptotic_counts(IndexSeq(d), IndexSeq(d));
      Integer hn = factorial(n);
      hn <<= static_cast<mp_bitcnt_t>(n);
      require(a.s == hn && a.s_prime == hn * n * (n - 1), "diagonal");
      std::vector<int> o;
      for (int k = 0; k < n; ++k) o.insert(o.end(), {1, 2});
      const auto b = asymptotic_counts(IndexSeq(o), IndexSeq(o));
      require(b.s == factorial(n) && b.s_prime == factorial(n) * (n * (n - 1) / 2), "alternating");
    }
    const auto c = asymptotic_counts({1, 2, 1, 2}, {1, 1, 2, 2});
    require(c.s == 0 && c.s_prime == 4, "mixed");
  });
  add("moments", "expansions N^-n - n N^-n-1 and -4 N^-3", [] {
    const auto a = moment_expansion({1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}, 2);
    require(a.at(-3) == 1 && a.at(-4) == -3, "distinct indices");
    const auto b = moment_expansion({1, 2, 1, 2}, {1, 1, 2, 2}, 2);
    require(b.at(-2) == 0 && b.at(-3) == -4, "mixed");
  });
  add("moments", "moment limits (N/2)^n E|v_ii|^2n and N^n E|v_ij|^2n tend to n!, n <= 3", [] {
    for (int n = 1; n <= 3; ++n) {
      Rational two_n = 1;
      for (int k = 0; k < n; ++k) two_n *= 2;
      require(series_from(diagonal_moment_symbolic(n), -n, 1).at(-n) / two_n == Rational(factorial(n)), "diagonal");
      require(series_from(offdiagonal_moment_symbolic(n), -n, 1).at(-n) == Rational(factorial(n)), "off-diagonal");
    }
  });
  return c;
}

std::vector<Check> mc_checks(const SelftestOptions& opts) {
  std::vector<Check> c;
  MCOptions mc;
  mc.samples = opts.samples;
  mc.rng.seed = opts.seed;
  auto add_moment = [&](std::string name, IndexSeq i, IndexSeq j, int N, std::uint64_t stream) {
    c.push_back({"montecarlo", std::move(name), [=] {
                   MCOptions o = mc;
                   o.rng.stream_id = stream;
                   const auto v = verify(i, j, N, o);
                   require(v.verdict.pass, v.json());
                 }});
  };
  add_moment("E|v_11|^2 at N = 2", {1, 1}, {1, 1}, 2, 1);
  add_moment("E|v_12|^2 at N = 3", {1, 2}, {1, 2}, 3, 2);
  add_moment("E[v_12^2 conj(v_11 v_22)] at N = 3", {1, 2, 1, 2}, {1, 1, 2, 2}, 3, 3);
  add_moment("vanishing E[v_11 conj(v_22)] at N = 3", {1, 1}, {2, 2}, 3, 4);
  add_moment("E|v_11 v_22 v_33|^2 at N = 4", {1, 1, 2, 2, 3, 3}, {1, 1, 2, 2, 3, 3}, 4, 5);
  c.push_back({"montecarlo", "E|u_11|^4 = 2/(N(N+1)) at N = 4", [=] {
                 MCOptions o = mc;
                 o.rng.stream_id = 6;
                 const std::vector<int> one{1, 1};
                 const auto v = compare(eval_at(haar_unitary_moment(one, one, one, one), 4),
                                        estimate_unitary_moment(one, one, one, one, 4, o));
                 require(v.pass, "z = " + std::to_string(v.z_re));
               }});
  c.push_back({"montecarlo", "Haar O(5) entries against Wg^O_2", [=] {
                 MCOptions o = mc;
                 o.rng.stream_id = 7;
                 for (const auto& mu : partitions_of(2)) {
                   const Permutation s = coset_representative(mu);
                   const IndexSeq cols = IndexSeq{1, 1, 2, 2}.act(s);
                   const auto v = compare(wg_o_at(2, mu, 5), estimate_orthogonal_moment({1, 1, 2, 2}, cols.indices(), 5, o));
                   require(v.pass, "mu = " + mu.str() + " z = " + std::to_string(v.z_re));
                 }
               }});
  return c;
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& opts) {
  std::vector<Check> checks = symbolic_checks();
  if (opts.mc) {
    auto more = mc_checks(opts);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  std::vector<CheckResult> out;
  for (const auto& check : checks) {
    CheckResult r{check.group, check.name, false, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      check.body();
      r.pass = true;
    } catch (const CheckFailure& f) {
      r.detail = f.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace coe
