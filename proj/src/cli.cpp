#include "coe/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coe/characters.hpp"
#include "coe/moments.hpp"
#include "coe/montecarlo.hpp"
#include "coe/selftest.hpp"
#include "coe/weingarten.hpp"

namespace coe {

namespace {

using nlohmann::json;
using Config = std::vector<std::pair<std::string, std::string>>;

struct Globals {
  bool json = false;
  int n_max = 6;
  std::uint64_t budget = 10'000'000;
  bool no_timestamp = false;
};

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

RenderOptions text_style(const std::string& var, bool factored = true) {
  RenderOptions o;
  o.var = var;
  o.explicit_mul = true;
  o.factored = factored;
  o.root_bound = 2 * default_limits().n_max + 2;
  return o;
}

json ratfunc_json(const RatFunc& f, const std::string& var) {
  auto [num, den] = integer_form(f);
  json n = json::array();
  json d = json::array();
  for (const auto& c : num) n.push_back(c.get_str());
  for (const auto& c : den) d.push_back(c.get_str());
  return {{"num", n}, {"den", d}, {"text", render(f, text_style(var))}, {"var", var}};
}

std::string decimal(const Rational& q) {
  std::ostringstream os;
  os << std::setprecision(15) << q.get_d();
  return os.str();
}

// Collects the output of one command, then prints it as text or JSON.
class Report {
 public:
  Report(const Globals& g, std::string command) : g_(g) {
    config_.emplace_back("command", std::move(command));
    config_.emplace_back("n_max", std::to_string(g.n_max));
    config_.emplace_back("budget", std::to_string(g.budget));
  }

  void config(const std::string& key, const std::string& value) { config_.emplace_back(key, value); }
  void line(const std::string& key, const std::string& text, json value) {
    lines_.emplace_back(key, text);
    result_[key] = std::move(value);
  }
  void line(const std::string& key, const std::string& text) { line(key, text, text); }
  void raw_json(const std::string& key, json value) { result_[key] = std::move(value); }
  void text_only(const std::string& text) { extra_.push_back(text); }

  void print(std::ostream& out) const {
    if (g_.json) {
      json cfg = json::object();
      for (const auto& [k, v] : config_) cfg[k] = v;
      json doc = {{"config", cfg}, {"result", result_}};
      if (!g_.no_timestamp) doc["timestamp"] = utc_timestamp();
      out << doc.dump(2) << "\n";
      return;
    }
    out << "config:";
    for (const auto& [k, v] : config_) out << " " << k << "=" << v;
    out << "\n";
    if (!g_.no_timestamp) out << "timestamp: " << utc_timestamp() << "\n";
    for (const auto& [k, v] : lines_) out << k << ": " << v << "\n";
    for (const auto& e : extra_) out << e << "\n";
  }

 private:
  const Globals& g_;
  Config config_;
  std::vector<std::pair<std::string, std::string>> lines_;
  std::vector<std::string> extra_;
  json result_ = json::object();
};

// ---------------------------------------------------------------- commands

struct MomentArgs {
  std::string i, j;
  bool symbolic = false;
  std::optional<int> numeric;
  bool as_float = false;
  bool expanded = false;
};

int cmd_moment(const Globals& g, const MomentArgs& a, std::ostream& out) {
  const IndexSeq i = IndexSeq::parse(a.i);
  const IndexSeq j = IndexSeq::parse(a.j);
  Report rep(g, "moment");
  rep.config("i", i.str());
  rep.config("j", j.str());
  if (a.numeric) rep.config("N", std::to_string(*a.numeric));

  const MomentResult r = a.numeric ? coe_moment_result(i, j, *a.numeric) : coe_moment_symbolic(i, j);
  const bool show_symbolic = a.symbolic || !a.numeric;
  if (show_symbolic) {
    rep.line("symbolic", render(r.symbolic, text_style("z", !a.expanded)), ratfunc_json(r.symbolic, "z"));
    rep.line("note", "evaluate at z = N+1");
    rep.line("in_N", render(shift(r.symbolic), text_style("N", !a.expanded)), ratfunc_json(shift(r.symbolic), "N"));
  }
  rep.line("matches", r.match_count.get_str());
  json per = json::object();
  std::string per_text;
  for (const auto& [mu, c] : r.per_coset) {
    per[mu.str()] = c.get_str();
    per_text += (per_text.empty() ? "" : " ") + std::string("[") + mu.str() + "]=" + c.get_str();
  }
  rep.line("coset_counts", per_text.empty() ? "none" : per_text, per);
  if (r.value_at) {
    rep.line("value", r.value_at->get_str());
    if (a.as_float) rep.line("float", decimal(*r.value_at), r.value_at->get_d());
  }
  rep.print(out);
  return kExitOk;
}

struct SingleArgs {
  std::string kind;
  int n = 1;
  std::optional<int> N;
  bool as_float = false;
};

int cmd_single(const Globals& g, const SingleArgs& a, std::ostream& out) {
  Report rep(g, "single");
  rep.config("kind", a.kind);
  rep.config("n", std::to_string(a.n));
  if (a.N) rep.config("N", std::to_string(*a.N));
  const bool diag = a.kind == "diagonal";
  const RatFunc f = diag ? diagonal_moment_symbolic(a.n) : offdiagonal_moment_symbolic(a.n);
  rep.line("symbolic", render(f, text_style("N")), ratfunc_json(f, "N"));
  if (a.N) {
    const Rational v = diag ? diagonal_moment(a.n, *a.N) : offdiagonal_moment(a.n, *a.N);
    rep.line("value", v.get_str());
    if (a.as_float) rep.line("float", decimal(v), v.get_d());
  }
  rep.print(out);
  return kExitOk;
}

struct WgArgs {
  std::string family;
  int n = 1;
  std::optional<int> at;
  bool expanded = false;
};

int cmd_wg(const Globals& g, const WgArgs& a, std::ostream& out) {
  Report rep(g, "wg");
  rep.config("family", a.family);
  rep.config("n", std::to_string(a.n));
  if (a.at) rep.config("at", std::to_string(*a.at));
  const bool ortho = a.family == "orthogonal";
  const auto& values = ortho ? wg_o_table(a.n).values : wg_u_table(a.n).values;
  const std::string name = ortho ? "Wg^O_" : "Wg^U_";
  json rows = json::array();
  // Largest type first, matching the usual listing.
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    const auto& [type, f] = *it;
    std::string text = name + std::to_string(a.n) + "([" + type.str() + "];z) = " + render(f, text_style("z", !a.expanded));
    json row = {{"type", type.str()}, {"value", ratfunc_json(f, "z")}};
    if (a.at) {
      try {
        const Rational v = eval_at(f, *a.at);
        text += "    at z=" + std::to_string(*a.at) + ": " + v.get_str();
        row["at"] = v.get_str();
      } catch (const PoleError&) {
        text += "    at z=" + std::to_string(*a.at) + ": pole";
        row["at"] = nullptr;
      }
    }
    rep.text_only(text);
    rows.push_back(std::move(row));
  }
  rep.raw_json("values", rows);
  rep.print(out);
  return kExitOk;
}

struct AsymArgs {
  std::string i, j;
  int orders = 3;
};

int cmd_asym(const Globals& g, const AsymArgs& a, std::ostream& out) {
  const IndexSeq i = IndexSeq::parse(a.i);
  const IndexSeq j = IndexSeq::parse(a.j);
  Report rep(g, "asym");
  rep.config("i", i.str());
  rep.config("j", j.str());
  rep.config("orders", std::to_string(a.orders));
  const auto counts = asymptotic_counts(i, j);
  const auto series = moment_expansion(i, j, a.orders);
  rep.line("s", counts.s.get_str());
  rep.line("s_prime", counts.s_prime.get_str());
  json coeffs = json::array();
  std::string text;
  for (int k = 0; k < a.orders; ++k) {
    const int e = series.top_exponent - k;
    const Rational& c = series.coeffs[static_cast<std::size_t>(k)];
    coeffs.push_back({{"exponent", e}, {"coeff", c.get_str()}});
    if (c == 0) continue;
    if (text.empty()) text = c < 0 ? "-" : "";
    else text += c < 0 ? " - " : " + ";
    text += Rational(abs(c)).get_str() + "*N^" + std::to_string(e);
  }
  if (text.empty()) text = "0";
  rep.line("expansion", text + " + O(N^" + std::to_string(series.top_exponent - a.orders) + ")", coeffs);
  rep.print(out);
  return kExitOk;
}

struct McArgs {
  std::string i, j;
  int N = 0;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  double k = 4.0;
  int threads = 1;
};

int cmd_mc_verify(const Globals& g, const McArgs& a, std::ostream& out) {
  const IndexSeq i = IndexSeq::parse(a.i);
  const IndexSeq j = IndexSeq::parse(a.j);
  Report rep(g, "mc-verify");
  rep.config("i", i.str());
  rep.config("j", j.str());
  rep.config("N", std::to_string(a.N));
  rep.config("samples", std::to_string(a.samples));
  rep.config("seed", std::to_string(a.seed));
  rep.config("k", decimal(a.k));
  rep.config("rng", kRngName);
  MCOptions opts;
  opts.samples = a.samples;
  opts.rng.seed = a.seed;
  opts.threads = a.threads;
  const MomentVerdict v = verify(i, j, a.N, opts, a.k);
  const auto& e = v.verdict.estimate;
  rep.line("exact", v.verdict.exact.get_str());
  std::ostringstream est;
  est << std::setprecision(10) << e.mean.real() << " " << (e.mean.imag() < 0 ? "-" : "+") << " "
      << std::abs(e.mean.imag()) << "i";
  rep.line("estimate", est.str());
  std::ostringstream se;
  se << std::setprecision(4) << e.stderr_re << " " << e.stderr_im;
  rep.line("stderr", se.str());
  std::ostringstream z;
  z << std::fixed << std::setprecision(3) << v.verdict.z_re << " " << v.verdict.z_im;
  rep.line("z", z.str());
  rep.line("verdict", v.verdict.pass ? "PASS" : "FAIL");
  rep.raw_json("record", json::parse(v.json()));
  rep.print(out);
  return v.verdict.pass ? kExitOk : kExitMcFail;
}

struct SelftestArgs {
  bool mc = false;
  std::uint64_t seed = 2011;
  std::uint64_t samples = 100'000;
};

int cmd_selftest(const Globals& g, const SelftestArgs& a, std::ostream& out) {
  SelftestOptions opts;
  opts.mc = a.mc;
  opts.seed = a.seed;
  opts.samples = a.samples;
  const auto results = run_selftest(opts);
  int passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  const int failed = static_cast<int>(results.size()) - passed;

  if (g.json) {
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back({{"group", r.group}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    json doc = {{"schema", "coe-selftest/1"},
                {"config", {{"command", "selftest"}, {"mc", a.mc}, {"seed", a.seed}, {"samples", a.samples},
                            {"n_max", g.n_max}, {"budget", g.budget}, {"rng", kRngName}}},
                {"checks", checks},
                {"passed", passed},
                {"failed", failed}};
    if (!g.no_timestamp) doc["timestamp"] = utc_timestamp();
    out << doc.dump(2) << "\n";
  } else {
    out << "config: command=selftest mc=" << (a.mc ? "true" : "false") << " seed=" << a.seed
        << " samples=" << a.samples << " n_max=" << g.n_max << " budget=" << g.budget << " rng=" << kRngName << "\n";
    if (!g.no_timestamp) out << "timestamp: " << utc_timestamp() << "\n";
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << "[" << r.group << "] " << r.name;
      if (!r.pass) out << " -- " << r.detail;
      out << "\n";
    }
    out << "summary: " << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitError;
}

void report_error(std::ostream& err, const std::string& code, const std::string& message) {
  err << "error: code=" << code << " message=" << std::quoted(message) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments of COE matrix elements via orthogonal Weingarten functions", "coe"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--n-max", g.n_max, "Largest half-degree for symbolic work")->check(CLI::Range(1, 10));
  app.add_option("--budget", g.budget, "Cap on enumerated permutations");
  app.add_flag("--no-timestamp", g.no_timestamp, "Omit the timestamp for byte-reproducible output");

  MomentArgs ma;
  auto* moment = app.add_subcommand("moment", "Moment E[v_{i1 i2}... conj(v_{j1 j2}...)] of a COE matrix");
  moment->add_option("--i", ma.i, "Holomorphic indices, comma separated")->required();
  moment->add_option("--j", ma.j, "Antiholomorphic indices, comma separated")->required();
  moment->add_flag("--symbolic", ma.symbolic, "Print the rational function in z (default without --numeric)");
  moment->add_option("--numeric", ma.numeric, "Evaluate for an N x N COE matrix (z = N+1)")->check(CLI::PositiveNumber);
  moment->add_flag("--float", ma.as_float, "Also print a decimal approximation");
  moment->add_flag("--expanded", ma.expanded, "Expanded instead of factored denominators");

  SingleArgs sa;
  auto* single = app.add_subcommand("single", "Closed forms for E|v_ii|^2n and E|v_ij|^2n");
  single->add_option("--kind", sa.kind)->required()->check(CLI::IsMember({"diagonal", "offdiagonal"}));
  single->add_option("--n", sa.n)->required()->check(CLI::PositiveNumber);
  single->add_option("--N", sa.N)->check(CLI::PositiveNumber);
  single->add_flag("--float", sa.as_float);

  WgArgs wa;
  auto* wg = app.add_subcommand("wg", "Weingarten function tables");
  wg->add_option("--family", wa.family)->required()->check(CLI::IsMember({"orthogonal", "unitary"}));
  wg->add_option("--n", wa.n, "n for orthogonal (on S_2n), m for unitary (on S_m)")->required()->check(CLI::PositiveNumber);
  wg->add_option("--at", wa.at, "Evaluate at z = value");
  wg->add_flag("--expanded", wa.expanded);

  AsymArgs aa;
  auto* asym = app.add_subcommand("asym", "Large-N expansion of a moment");
  asym->add_option("--i", aa.i)->required();
  asym->add_option("--j", aa.j)->required();
  asym->add_option("--orders", aa.orders)->check(CLI::Range(1, 50));

  McArgs mca;
  auto* mcv = app.add_subcommand("mc-verify", "Compare the exact moment with a Monte Carlo estimate");
  mcv->add_option("--i", mca.i)->required();
  mcv->add_option("--j", mca.j)->required();
  mcv->add_option("--N", mca.N)->required()->check(CLI::PositiveNumber);
  mcv->add_option("--samples", mca.samples)->check(CLI::Range(std::uint64_t{10'000}, std::uint64_t{1'000'000'000}));
  mcv->add_option("--seed", mca.seed);
  mcv->add_option("--k", mca.k, "Pass threshold in standard errors")->check(CLI::PositiveNumber);
  mcv->add_option("--threads", mca.threads)->check(CLI::Range(0, 256));

  SelftestArgs st;
  auto* selftest = app.add_subcommand("selftest", "Replay the worked examples and invariant suites");
  selftest->add_flag("--mc", st.mc, "Include the Monte Carlo suite");
  selftest->add_option("--seed", st.seed);
  selftest->add_option("--samples", st.samples);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage_error", e.what());
    return kExitUsage;
  }

  default_limits().n_max = g.n_max;
  default_limits().budget = g.budget;

  const char* cache_path = std::getenv("COE_WG_CACHE");
  try {
    if (cache_path && *cache_path) load_character_cache(cache_path);
    int code = kExitOk;
    if (*moment) code = cmd_moment(g, ma, out);
    else if (*single) code = cmd_single(g, sa, out);
    else if (*wg) code = cmd_wg(g, wa, out);
    else if (*asym) code = cmd_asym(g, aa, out);
    else if (*mcv) code = cmd_mc_verify(g, mca, out);
    else if (*selftest) code = cmd_selftest(g, st, out);
    if (cache_path && *cache_path) save_character_cache(cache_path);
    return code;
  } catch (const Error& e) {
    report_error(err, e.code(), e.what());
    return kExitError;
  } catch (const std::exception& e) {
    report_error(err, "internal_error", e.what());
    return kExitError;
  }
}

}  // namespace coe
