#include "kapn/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "kapn/cli/ops.hpp"
#include "kapn/cli/worker_pool.hpp"
#include "kapn/equations.hpp"
#include "kapn/power_map.hpp"
#include "kapn/serialize.hpp"

namespace kapn::cli {

namespace {

namespace eq = equations;
namespace ks = kasami;
using kapn::to_json;

struct RunConfig {
  std::string command;
  std::string target;  // verify target or sweep family
  std::optional<int> n, k;
  std::optional<std::string> poly;
  std::optional<std::string> a, u, omega_prime;
  std::optional<std::int64_t> d;
  int n_min = 3;
  std::optional<int> n_max;
  unsigned jobs = 1;
  std::optional<std::string> format;
  bool stable = false;
  bool full_sweep = false;
  bool witness = false;
  std::string output;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void merge(Json& into, const Json& from) {
  for (const auto& [key, value] : from.items()) into[key] = value;
}

template <class T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

Field field_of(const RunConfig& cfg) {
  std::optional<std::uint64_t> poly;
  if (cfg.poly) poly = parse_hex(*cfg.poly);
  return gf2n::make_field(need(cfg.n, "--n"), poly);
}

std::string format_of(const RunConfig& cfg, const char* fallback) {
  return cfg.format.value_or(fallback);
}

void require_json(const RunConfig& cfg) {
  if (format_of(cfg, "json") != "json") throw UsageError("csv output is available for ddt and sweep only");
}

int cmd_field(const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  const Field f = field_of(cfg);
  Json j = to_json(f);
  j["tables"] = f.has_tables();
  out << j.dump(2) << '\n';
  return kPass;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_json(cfg);
  const Field f = field_of(cfg);
  const int k = need(cfg.k, "--k");
  const Elem a = f.parse(need(cfg.a, "--a"));
  const eq::RootSet rs = eq::roots_bruteforce(f, k, a);
  Json j{{"n", f.degree()}};
  merge(j, to_json(rs));
  if (a.is_zero()) {
    j["warning"] = "a = 0 is outside the lemma scope";
    err << "warning: a = 0 is outside the lemma scope\n";
  }
  if (cfg.witness && rs.roots.size() == 3) {
    j["witness"] = to_json(eq::witness_from_u(f, k, eq::recover_u(f, k, a)));
  }
  out << j.dump(2) << '\n';
  return kPass;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  const Field f = field_of(cfg);
  const int k = need(cfg.k, "--k");
  const eq::Witness w = eq::witness_from_u(f, k, f.parse(need(cfg.u, "--u")));
  Json j{{"n", f.degree()}, {"k", k}};
  merge(j, to_json(w));
  out << j.dump(2) << '\n';
  return w.substitution_ok ? kPass : kCounterexample;
}

int cmd_recover(const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  const Field f = field_of(cfg);
  const int k = need(cfg.k, "--k");
  const Elem a = f.parse(need(cfg.a, "--a"));
  const Elem u = eq::recover_u(f, k, a);
  Json j{{"n", f.degree()}, {"k", k}, {"a", to_hex(a)}, {"u", to_hex(u)}};
  j["witness"] = to_json(eq::witness_from_u(f, k, u));
  int code = kPass;
  if (cfg.full_sweep) {
    const Elem ux = eq::recover_u_exhaustive(f, k, a);
    j["u_exhaustive"] = to_hex(ux);
    j["agree"] = ux == u;
    if (ux != u) code = kCounterexample;
  }
  out << j.dump(2) << '\n';
  return code;
}

int cmd_ddt(const RunConfig& cfg, std::ostream& out) {
  const Field f = field_of(cfg);
  const std::int64_t d = need(cfg.d, "--d");
  const Elem a = f.parse(cfg.a.value_or("0x1"));
  const ks::DifferentialSpectrum s = ks::derivative_spectrum(ks::PowerFunction(f, d), a);
  const std::string fmt = format_of(cfg, "csv");
  if (fmt == "csv") {
    write_spectrum_csv(out, s);
  } else {
    Json j{{"n", f.degree()}, {"d", d}, {"a", to_hex(a)}, {"delta", s.delta}, {"counts", s.row}};
    out << j.dump() << '\n';
  }
  return kPass;
}

int cmd_apn(const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  const Field f = field_of(cfg);
  const std::int64_t d = need(cfg.d, "--d");
  const ks::PowerFunction F(f, d);
  const std::uint64_t delta = ks::differential_uniformity(F, ks::Sweep::DirectionOne);
  Json j{{"n", f.degree()}, {"d", d}, {"delta", delta}, {"apn", delta == 2}};
  int code = kPass;
  if (cfg.full_sweep) {
    const std::uint64_t full = ks::differential_uniformity(F, ks::Sweep::AllDirections);
    j["delta_all_directions"] = full;
    j["agree"] = full == delta;
    if (full != delta) code = kCounterexample;
  }
  out << j.dump(2) << '\n';
  return code;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const int lo = cfg.n_min;
  const int hi = cfg.n_max.value_or(lo);
  if (lo < 3 || hi > gf2n::kMaxDegree || lo > hi) {
    throw UsageError("sweep needs 3 <= n-min <= n-max <= " + std::to_string(gf2n::kMaxDegree));
  }
  const bool gold = cfg.target == "gold";
  std::vector<std::pair<int, int>> grid;
  for (int n = lo; n <= hi; ++n) {
    for (int k : coprime_ks(n)) {
      if (!cfg.k || *cfg.k == k) grid.emplace_back(n, k);
    }
  }
  const ks::Sweep sweep = cfg.full_sweep ? ks::Sweep::AllDirections : ks::Sweep::DirectionOne;

  struct Line {
    int n, k;
    std::int64_t d;
    std::uint64_t delta;
    std::int64_t ms;
  };
  const auto lines = parallel_map(grid.size(), cfg.jobs, [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto [n, k] = grid[i];
    const std::int64_t d = gold ? ks::gold_exponent(k) : ks::kasami_exponent(k);
    const std::uint64_t delta = ks::differential_uniformity(ks::PowerFunction(gf2n::make_field(n), d), sweep);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return Line{n, k, d, delta, ms};
  });

  const bool csv = format_of(cfg, "json") == "csv";
  if (csv) out << (cfg.stable ? "n,k,d,delta,pass\n" : "n,k,d,delta,pass,elapsed_ms\n");
  bool all = true;
  for (const Line& l : lines) {
    const bool pass = l.delta == 2;
    all = all && pass;
    if (csv) {
      out << l.n << ',' << l.k << ',' << l.d << ',' << l.delta << ',' << (pass ? "true" : "false");
      if (!cfg.stable) out << ',' << l.ms;
      out << '\n';
    } else {
      Json j{{"n", l.n}, {"k", l.k}, {"d", l.d}, {"delta", l.delta}, {"pass", pass}};
      if (!cfg.stable) j["elapsed_ms"] = l.ms;
      out << j.dump() << '\n';
    }
  }
  return all ? kPass : kCounterexample;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  const Field f = field_of(cfg);
  VerifyOptions opt;
  if (cfg.u) opt.u = f.parse(*cfg.u);
  if (cfg.omega_prime) opt.omega_prime = f.parse(*cfg.omega_prime);
  opt.full_sweep = cfg.full_sweep;
  opt.jobs = cfg.jobs;
  const RunReport run = verify(cfg.target, f, cfg.k, opt);
  Json j{{"command", "verify"}, {"target", cfg.target}, {"n", f.degree()}};
  merge(j, to_json(run, cfg.stable));
  out << j.dump(2) << '\n';
  return run.pass ? kPass : kCounterexample;
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  const int n = need(cfg.n, "--n");
  Json entries = Json::array();
  for (const auto& e : ks::catalog_table1(n)) entries.push_back(to_json(e));
  out << Json{{"n", n}, {"entries", entries}}.dump(2) << '\n';
  return kPass;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "field") return cmd_field(cfg, out);
  if (cfg.command == "solve") return cmd_solve(cfg, out, err);
  if (cfg.command == "witness") return cmd_witness(cfg, out);
  if (cfg.command == "recover") return cmd_recover(cfg, out);
  if (cfg.command == "ddt") return cmd_ddt(cfg, out);
  if (cfg.command == "apn") return cmd_apn(cfg, out);
  if (cfg.command == "sweep") return cmd_sweep(cfg, out);
  if (cfg.command == "verify") return cmd_verify(cfg, out);
  if (cfg.command == "catalog") return cmd_catalog(cfg, out);
  throw UsageError("no command given");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Kasami APN toolkit over GF(2^n)", "kapn"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--n", cfg.n, "field degree")->check(CLI::Range(gf2n::kMinDegree, gf2n::kMaxDegree));
  app.add_option("--k", cfg.k, "parameter k, q = 2^k");
  app.add_option("--poly", cfg.poly, "defining polynomial, hex");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--stable", cfg.stable, "omit timings");
  app.add_flag("--full-sweep", cfg.full_sweep, "use full sweeps instead of shortcuts");
  app.add_option("--output,-o", cfg.output, "write to a file instead of stdout");

  app.add_subcommand("field", "show the field GF(2^n)");
  auto* solve = app.add_subcommand("solve", "roots of X^(q+1) + X + a");
  solve->add_option("--a", cfg.a, "a, hex");
  solve->add_flag("--witness", cfg.witness, "add the u-parameterized triple when there are three roots");
  auto* witness = app.add_subcommand("witness", "the three roots generated by u");
  witness->add_option("--u", cfg.u, "u, hex");
  auto* recover = app.add_subcommand("recover", "recover u from a three-root a");
  recover->add_option("--a", cfg.a, "a, hex");
  auto* ddt = app.add_subcommand("ddt", "derivative spectrum of x^d in direction a");
  ddt->add_option("--d", cfg.d, "exponent")->check(CLI::PositiveNumber);
  ddt->add_option("--a", cfg.a, "direction, hex (default 0x1)");
  auto* apn = app.add_subcommand("apn", "differential uniformity of x^d");
  apn->add_option("--d", cfg.d, "exponent")->check(CLI::PositiveNumber);
  auto* sweep = app.add_subcommand("sweep", "differential uniformity over an (n, k) grid");
  sweep->add_option("family", cfg.target, "kasami or gold")->required()->check(CLI::IsMember({"kasami", "gold"}));
  sweep->add_option("--n-min", cfg.n_min, "smallest n");
  sweep->add_option("--n-max", cfg.n_max, "largest n (default n-min)");
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive checks");
  verify_cmd->add_option("target", cfg.target)->required()->check(CLI::IsMember(verify_targets()));
  verify_cmd->add_option("--u", cfg.u, "single u, hex (trace, discussion)");
  verify_cmd->add_option("--omega-prime", cfg.omega_prime, "single omega' in GF(4)*, hex (discussion)");
  app.add_subcommand("catalog", "known APN exponent families at n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kPass;
    }
    app.exit(e, out, err);
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.output.empty()) return dispatch(cfg, out, err);
    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer, err);
    std::ofstream file(cfg.output);
    if (!file) throw UsageError("cannot open " + cfg.output);
    file << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace kapn::cli
