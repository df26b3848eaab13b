#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "wald/audit.hpp"
#include "wald/classifier.hpp"
#include "wald/errors.hpp"
#include "wald/fixtures.hpp"
#include "wald/json_io.hpp"

using namespace wald;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
  int m_max = 8;
  std::vector<std::uint64_t> primes = {kDefaultPrimes[0], kDefaultPrimes[1], kDefaultPrimes[2]};
  std::size_t aux_cap = kDefaultAuxCap;
  bool json_out = false;
  std::uint64_t seed = 0;
  std::size_t max_points = kDefaultPointCap;
  unsigned threads = 1;
};

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    buf << in.rdbuf();
  }
  return io::parse_text(buf.str(), path);
}

struct Input {
  std::vector<ProjPoint> points;
  std::optional<int> m;
  std::vector<int> mults;
};

Input read_input(const std::string& path, const RunConfig& cfg) {
  json j = read_json(path);
  Input in{io::points_from_json(j), std::nullopt, {}};
  if (in.points.empty()) throw ParseError(path + ": no points");
  if (in.points.size() > cfg.max_points)
    throw ParseError(path + ": " + std::to_string(in.points.size()) + " points exceed the cap of " +
                     std::to_string(cfg.max_points) + " (see --max-points)");
  require_distinct(in.points);
  if (j.is_object() && j.contains("m")) {
    if (!j["m"].is_number_integer() || j["m"].get<int>() < 1) throw ParseError(path + ": m must be a positive integer");
    in.m = j["m"].get<int>();
  }
  if (j.is_object() && j.contains("mults")) {
    const json& ms = j["mults"];
    if (!ms.is_array() || ms.size() != in.points.size()) throw ParseError(path + ": mults must list one entry per point");
    for (const auto& x : ms) {
      if (!x.is_number_integer() || x.get<int>() < 1) throw ParseError(path + ": mults must be positive integers");
      in.mults.push_back(x.get<int>());
    }
  }
  return in;
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.json_out) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string value_text(const ClassificationResult& r) {
  if (r.exact) return r.exact->str();
  return "[" + r.lower.str() + ", " + r.upper.str() + "]";
}

std::string sweep_text(const std::vector<SweepEntry>& s) {
  std::ostringstream out;
  for (const auto& e : s)
    out << "  m=" << e.m << "  alpha=" << e.alpha << "  ratio=" << e.ratio << "  min=" << e.running_min << "\n";
  return out.str();
}

std::string certificate_text(const LowerBoundCertificate& c) {
  std::ostringstream out;
  out << "lower bound " << c.bound << "\n";
  for (std::size_t i = 0; i < c.duals.size(); ++i)
    if (!c.duals[i].is_zero()) out << "  " << c.system.constraints[i].label << " x " << c.duals[i] << "\n";
  if (!c.support.empty()) {
    out << "  on points";
    for (auto k : c.support) out << " " << k;
    out << "\n";
  }
  return out.str();
}

ClassifyConfig classify_config(const RunConfig& cfg) {
  ClassifyConfig cc;
  cc.m_max = cfg.m_max;
  cc.aux_cap = cfg.aux_cap;
  cc.point_cap = cfg.max_points;
  return cc;
}

int cmd_classify(const std::string& path, const RunConfig& cfg) {
  Input in = read_input(path, cfg);
  Engine eng(EngineConfig{cfg.m_max, cfg.threads});
  ClassificationResult r = classify(in.points, classify_config(cfg), &eng);
  std::ostringstream t;
  t << "family: " << r.family << "\n";
  t << (r.exact ? "exact: " : "interval: ") << value_text(r) << "\n";
  for (const auto& c : r.citations) t << "cite: " << c.loc << " (" << c.quote << ")\n";
  if (r.lower_cert) t << certificate_text(*r.lower_cert);
  if (r.upper_evidence) t << "upper bound " << r.upper_evidence->bound << " by "
                          << (r.upper_evidence->divisor ? "construction" : "sweep") << "\n";
  if (!r.sweep.empty()) t << "sweep:\n" << sweep_text(r.sweep);
  for (const auto& n : r.notes) t << "note: " << n << "\n";
  emit(cfg, io::to_json(r), t.str());
  return kExitOk;
}

int cmd_alpha(const std::string& path, std::optional<int> m_flag, const RunConfig& cfg) {
  Input in = read_input(path, cfg);
  std::optional<int> m = m_flag ? m_flag : in.m;
  if (!m && in.mults.empty()) throw ParseError("alpha needs a multiplicity via --m, \"m\" or \"mults\"");
  FatPointScheme s = m ? FatPointScheme::uniform(in.points, *m) : FatPointScheme(in.points, in.mults);
  AlphaResult a = alpha(s);
  std::ostringstream t;
  if (m) {
    t << "alpha(" << *m << "X) = " << a.alpha << "\n";
  } else {
    t << "alpha = " << a.alpha << "\n";
  }
  t << "witness: " << a.witness.str() << "\n";
  t << "h0 trace:";
  for (const auto& [d, dim] : a.h0_trace) t << " " << d << ":" << dim;
  t << "\n";
  emit(cfg, io::to_json(a), t.str());
  return kExitOk;
}

int cmd_sweep(const std::string& path, const RunConfig& cfg) {
  Input in = read_input(path, cfg);
  Engine eng(EngineConfig{cfg.m_max, cfg.threads});
  auto s = eng.sweep(in.points, cfg.m_max);
  json j = json::array();
  for (const auto& e : s) j.push_back(io::to_json(e));
  emit(cfg, json{{"sweep", j}}, sweep_text(s));
  return kExitOk;
}

int cmd_lower(const std::string& path, const std::string& aux_path, bool grouped, const RunConfig& cfg) {
  Input in = read_input(path, cfg);
  AuxCurveSet aux = aux_path.empty() ? auto_aux(in.points, cfg.aux_cap) : io::aux_from_json(in.points, read_json(aux_path));
  LowerBoundCertificate c = solve_min_ratio(build_system(aux, BuildOptions{grouped}));
  auto chk = verify_certificate(c);
  if (!chk) throw InternalError("solver certificate rejected: " + chk.reason);
  emit(cfg, io::to_json(c), certificate_text(c));
  return kExitOk;
}

int cmd_upper(const std::string& path, const std::string& div_path, std::optional<int> m_flag, const RunConfig& cfg) {
  Input in = read_input(path, cfg);
  FormalDivisor d = io::divisor_from_json(read_json(div_path), in.points);
  if (m_flag) d.m = *m_flag;
  Rational u = verify_upper(d, in.points);
  std::ostringstream t;
  t << "upper bound " << u << " (degree " << d.degree() << ", multiplicity " << d.m << ")\n";
  emit(cfg, json{{"bound", io::to_json(u)}, {"degree", d.degree()}, {"divisor", io::to_json(d)}}, t.str());
  return kExitOk;
}

int cmd_fixture(const std::string& name, bool list, const RunConfig& cfg) {
  if (list || name.empty()) {
    json j = fixture_names();
    std::ostringstream t;
    for (const auto& n : fixture_names()) t << n << "\n";
    emit(cfg, j, t.str());
    return kExitOk;
  }
  FixtureSpec f = fixture(name);
  // Fixture output is always the points JSON so it can be fed back in.
  std::cout << io::to_json(f).dump(2) << "\n";
  return kExitOk;
}

int cmd_check(const std::string& path, const RunConfig& cfg) {
  Input in = read_input(path, cfg);
  Engine eng(EngineConfig{cfg.m_max, cfg.threads});
  ClassificationResult r = classify(in.points, classify_config(cfg), &eng);
  AuditConfig ac;
  ac.m_max = cfg.m_max;
  ac.aux_cap = cfg.aux_cap;
  ac.primes = cfg.primes;
  ac.seed = cfg.seed;
  AuditReport rep = audit(in.points, r, ac);
  std::ostringstream t;
  t << "family: " << r.family << "  value: " << value_text(r) << "\n";
  for (const auto& p : rep.passed) t << "ok    " << p << "\n";
  for (const auto& f : rep.failed) t << "FAIL  " << f << "\n";
  t << (rep.ok ? "check passed\n" : "check FAILED\n");
  emit(cfg, json{{"report", io::to_json(r)}, {"ok", rep.ok}, {"passed", rep.passed}, {"failed", rep.failed}}, t.str());
  return rep.ok ? kExitOk : kExitCheckFailed;
}

std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    Integer z = parse_integer(tok);
    if (sgn(z) <= 0 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0 || !z.fits_ulong_p())
      throw ParseError("--primes: " + tok + " is not a usable prime");
    out.push_back(z.get_ui());
  }
  std::sort(out.begin(), out.end());
  if (out.empty() || std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ParseError("--primes: expected distinct primes");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Waldschmidt constants of plane point configurations"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string primes;
  app.add_option("--m-max", cfg.m_max, "largest multiplicity in sweeps")->check(CLI::PositiveNumber);
  app.add_option("--aux-cap", cfg.aux_cap, "curve budget for automatic LP aux sets");
  app.add_option("--primes", primes, "comma separated primes for modular audits");
  app.add_option("--seed", cfg.seed, "seed for audit transforms");
  app.add_option("--max-points", cfg.max_points, "input size cap");
  app.add_option("--threads", cfg.threads, "worker threads for sweeps");
  app.add_flag("--json", cfg.json_out, "emit JSON");

  std::string input, aux_path, div_path, name;
  std::optional<int> m;
  bool grouped = false, list = false;

  auto* c_classify = app.add_subcommand("classify", "identify the family and its constant");
  c_classify->add_option("input", input, "points JSON file or -")->required();
  auto* c_alpha = app.add_subcommand("alpha", "initial degree of mX");
  c_alpha->add_option("input", input)->required();
  c_alpha->add_option("--m", m, "multiplicity");
  auto* c_sweep = app.add_subcommand("sweep", "alpha(mX)/m for m up to --m-max");
  c_sweep->add_option("input", input)->required();
  auto* c_lower = app.add_subcommand("lower", "LP lower bound with certificate");
  c_lower->add_option("input", input)->required();
  c_lower->add_option("--aux", aux_path, "aux curve JSON; automatic when omitted");
  c_lower->add_flag("--grouped", grouped, "share variables within curve groups");
  auto* c_upper = app.add_subcommand("upper", "verify a divisor construction");
  c_upper->add_option("input", input)->required();
  c_upper->add_option("divisor", div_path, "divisor JSON")->required();
  c_upper->add_option("--m", m, "override the divisor multiplicity");
  auto* c_fixture = app.add_subcommand("fixture", "print a registered configuration");
  c_fixture->add_option("name", name);
  c_fixture->add_flag("--list", list, "list fixture names");
  auto* c_check = app.add_subcommand("check", "classify and cross-validate");
  c_check->add_option("input", input)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  if (cfg.threads == 0) cfg.threads = std::max(1u, std::thread::hardware_concurrency());

  try {
    if (!primes.empty()) cfg.primes = parse_primes(primes);
    if (c_classify->parsed()) return cmd_classify(input, cfg);
    if (c_alpha->parsed()) return cmd_alpha(input, m, cfg);
    if (c_sweep->parsed()) return cmd_sweep(input, cfg);
    if (c_lower->parsed()) return cmd_lower(input, aux_path, grouped, cfg);
    if (c_upper->parsed()) return cmd_upper(input, div_path, m, cfg);
    if (c_fixture->parsed()) return cmd_fixture(name, list, cfg);
    if (c_check->parsed()) return cmd_check(input, cfg);
  } catch (const InsufficientMultiplicityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InconsistentBoundsError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
