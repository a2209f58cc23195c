#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "dblab/error.hpp"
#include "dblab/json_io.hpp"

namespace dblab::cli {

namespace {

using io::json;
using FE = FunctionExpr;

// A malformed command line or config; exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_value(const std::string& raw) {
  const auto first = raw.find_first_not_of(" \t\n");
  if (first != std::string::npos && (raw[first] == '{' || raw[first] == '[' || raw[first] == '"')) return json::parse(raw);
  std::error_code ec;
  if (std::filesystem::is_regular_file(raw, ec)) {
    std::ifstream f(raw);
    return json::parse(f);
  }
  const json v = json::parse(raw, nullptr, false);
  if (!v.is_discarded() && (v.is_number() || v.is_boolean() || v.is_null())) return v;
  return raw;
}

class Config {
 public:
  explicit Config(json j) : j_(std::move(j)) {}
  const json& raw() const { return j_; }
  bool has(const std::string& k) const { return j_.contains(k) && !j_.at(k).is_null(); }
  const json& at(const std::string& k) const {
    if (!has(k)) throw ConfigError("missing required parameter '" + k + "'");
    return j_.at(k);
  }
  double number(const std::string& k, double fallback) const { return has(k) ? io::number_from_json(j_.at(k)) : fallback; }
  double number(const std::string& k) const { return io::number_from_json(at(k)); }
  std::string string(const std::string& k, const std::string& fallback) const {
    if (!has(k)) return fallback;
    if (!j_.at(k).is_string()) throw ConfigError("parameter '" + k + "' must be a string");
    return j_.at(k).get<std::string>();
  }
  cplx complex(const std::string& k) const { return io::complex_from_json(at(k)); }
  FE function(const std::string& k) const {
    const json& v = at(k);
    return io::function_from_json(v.is_string() ? json{{"kind", v}} : v);
  }
  DbSpace space(const std::string& k) const { return io::space_from_json(at(k)); }
  InnerFunction inner(const std::string& k) const {
    const json& v = at(k);
    return io::inner_from_json(v.contains("inner") ? v : json{{"inner", v}});
  }
  std::vector<double> numbers(const std::string& k) const {
    const json& v = at(k);
    std::vector<double> out;
    if (v.is_array())
      for (const json& e : v) out.push_back(io::number_from_json(e));
    else
      out.push_back(io::number_from_json(v));
    return out;
  }
  std::vector<cplx> complexes(const std::string& k) const {
    const json& v = at(k);
    if (!v.is_array()) throw ConfigError("parameter '" + k + "' must be an array of complex numbers");
    std::vector<cplx> out;
    for (const json& e : v) out.push_back(io::complex_from_json(e));
    return out;
  }

 private:
  json j_;
};

struct Outcome {
  Outcome(json r = json::object(), std::string c = {}, int exit_code = 0)
      : result(std::move(r)), csv(std::move(c)), code(exit_code) {}
  json result;
  std::string csv;
  int code;
};

json complex_value(const EvalResult& r) {
  return {{"value", io::to_json(r.value)}, {"abs_error", io::number(r.abs_error)}, {"log_abs", io::number(std::log(std::abs(r.value)))}};
}

FE q_from(const Config& c) {
  if (c.has("q")) return c.function("q");
  return cayley_q_from_theta(c.inner("inner"), parse_cayley_variant(c.string("variant", "plus")));
}

Outcome cmd_eval(const Config& c) {
  const FE f = c.function("f");
  if (c.has("zs")) {
    json rows = json::array();
    std::ostringstream csv;
    csv << "re,im,value_re,value_im\n";
    for (const cplx& z : c.complexes("zs")) {
      const EvalResult r = evaluate(f, z);
      json row = complex_value(r);
      row["z"] = io::to_json(z);
      rows.push_back(row);
      csv << io::number(z.real()).dump() << ',' << io::number(z.imag()).dump() << ',' << io::number(r.value.real()).dump()
          << ',' << io::number(r.value.imag()).dump() << '\n';
    }
    return {{{"values", rows}}, csv.str()};
  }
  return {complex_value(evaluate(f, c.complex("z")))};
}

Outcome cmd_kernel(const Config& c) {
  const DbSpace s = c.space("space");
  return {{{"value", io::to_json(kernel(s, c.complex("w"), c.complex("z")))}}};
}

Outcome cmd_nabla(const Config& c) {
  const DbSpace s = c.space("space");
  const cplx z = c.complex("z");
  const double l = log_nabla(s, z);
  return {{{"value", io::number(std::exp(l))}, {"log_value", io::number(l)}}};
}

Outcome cmd_phase(const Config& c) {
  const DbSpace s = c.space("space");
  const std::string route = c.string("route", "kernel");
  if (route != "kernel" && route != "zero-sum") throw ConfigError("route must be 'kernel' or 'zero-sum'");
  const PhaseRoute r = route == "kernel" ? PhaseRoute::Kernel : PhaseRoute::ZeroSum;
  json rows = json::array();
  std::ostringstream csv;
  csv << "t,phi_prime\n";
  for (double t : c.numbers("t")) {
    const double v = phase_derivative(s, t, r);
    rows.push_back({{"t", io::number(t)}, {"value", io::number(v)}});
    csv << io::number(t).dump() << ',' << io::number(v).dump() << '\n';
  }
  return {{{"route", route}, {"values", rows}}, csv.str()};
}

Outcome cmd_meantype(const Config& c) {
  const FE f = c.function("f");
  const double theta = c.number("theta", kPi / 2);
  RadiusGrid g;
  g.r_min = c.number("r_min", g.r_min);
  g.r_max = c.number("r_max", g.r_max);
  g.count = static_cast<std::size_t>(c.number("count", static_cast<double>(g.count)));
  const cplx base = c.has("base") ? c.complex("base") : cplx{};
  const MeanTypeEstimate m = c.has("g") ? mean_type_ratio(f, c.function("g"), theta, g, base) : mean_type(f, theta, g, base);
  return {io::to_json(m)};
}

Outcome cmd_member(const Config& c) {
  MembershipOptions o;
  o.tol = c.number("tol", o.tol);
  return {io::to_json(membership(c.space("space"), c.function("f"), o))};
}

MajorizationOptions majorization_options(const Config& c) {
  MajorizationOptions o;
  o.subsamples = static_cast<int>(c.number("subsamples", o.subsamples));
  o.exclusion = c.number("exclusion", o.exclusion);
  return o;
}

Outcome cmd_majorize(const Config& c) {
  const MajorizationReport r =
      test_majorization(c.function("f"), io::majorant_from_json(c.at("majorant")), majorization_options(c));
  return {io::to_json(r, c.has("rows") && c.at("rows").get<bool>()), r.csv()};
}

Outcome cmd_admissible(const Config& c) {
  std::vector<FE> ws;
  for (const json& w : c.at("witnesses")) ws.push_back(io::function_from_json(w.is_string() ? json{{"kind", w}} : w));
  if (ws.empty()) throw ConfigError("witnesses must be nonempty");
  const AdmissibilityReport r =
      admissibility_check(io::majorant_from_json(c.at("majorant")), ws, c.space("space"), {}, majorization_options(c));
  return {io::to_json(r)};
}

Outcome cmd_hb(const Config& c, std::uint64_t seed) {
  DbSpace s = c.space("space");
  std::vector<cplx> grid = standard_hb_grid();
  if (c.has("random_points")) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> x(-10.0, 10.0), y(defaults::kHbMinImag, 10.0);
    grid.clear();
    for (int k = 0; k < static_cast<int>(c.number("random_points")); ++k) {
      const double re = x(rng);
      grid.emplace_back(re, y(rng));
    }
  }
  return {io::to_json(hb_check(s, grid))};
}

Outcome cmd_herglotz(const Config& c) {
  HerglotzOptions o;
  o.delta = c.number("delta", o.delta);
  o.half_width = c.number("half_width", o.half_width);
  o.grid_points = static_cast<int>(c.number("grid_points", o.grid_points));
  if (c.has("candidates")) o.mass_candidates = c.numbers("candidates");
  const HerglotzData d = herglotz_extract(q_from(c), o);
  std::ostringstream csv;
  csv << "t,density\n";
  for (const DensitySample& s : d.density) csv << io::number(s.t).dump() << ',' << io::number(s.value).dump() << '\n';
  return {io::to_json(d), csv.str()};
}

Outcome cmd_weaktype(const Config& c) {
  std::vector<double> as;
  if (c.has("a")) as = c.numbers("a");
  else
    for (int k = 1; k <= 20; ++k) as.push_back(0.1 * k);
  WeakTypeOptions o;
  if (c.has("envelope")) o.envelope_constant = c.number("envelope");
  const WeakTypeReport r =
      weak_type_test(q_from(c), c.number("y0", 1.0), as, parse_superlevel_measure(c.string("measure", "lebesgue")), o);
  return {io::to_json(r), r.csv()};
}

Outcome cmd_clark(const Config& c) {
  const InnerFunction th = c.inner("inner");
  const cplx z = c.complex("z");
  const FE k = clark_kernel(th, z);
  json res{{"kernel", io::to_json(k)}, {"diagonal", io::to_json(evaluate(k, z).value)}};
  if (c.has("zeta")) {
    json vals = json::array();
    for (const cplx& w : c.complexes("zeta")) vals.push_back({{"zeta", io::to_json(w)}, {"value", io::to_json(evaluate(k, w).value)}});
    res["values"] = vals;
  }
  if (th.kind() == InnerFunction::Kind::Blaschke) {
    const ClarkMeasure mu = clark_measure(th);
    json masses = json::array();
    for (const PointMass& m : mu.masses) masses.push_back({{"location", io::number(m.location)}, {"weight", io::number(m.weight)}});
    res["measure"] = {{"point_masses", masses}, {"mass_at_infinity", mu.mass_at_infinity}};
    res["kernel_norm2"] = {{"model_space", io::number(evaluate(k, z).value.real())}, {"clark", io::number(clark_norm2(mu, k))}};
    if (c.has("cutoff")) {
      const FE f = c.has("f") ? c.function("f") : k;
      const std::vector<cplx> pts = c.has("points") ? c.complexes("points") : std::vector<cplx>{z};
      res["decomposition"] = io::to_json(decomposition_experiment(mu, th, f, c.number("cutoff"), pts));
    }
  }
  return {res};
}

Outcome cmd_a60scan(const Config& c) {
  std::vector<double> rs;
  if (c.has("r")) rs = c.numbers("r");
  else
    for (int k = 0; k <= 10; ++k) rs.push_back(std::ldexp(1.0, k));
  std::optional<FE> f;
  if (c.has("f")) f = c.function("f");
  const A60Scan s = theorem_a60_scan(c.inner("inner"), c.number("y0", 1.0), c.number("c"), rs, f,
                                     static_cast<int>(c.number("samples", defaults::kA60SamplesPerR)));
  return {io::to_json(s), s.csv()};
}

std::map<std::string, double> example_params(const Config& c) {
  std::map<std::string, double> p;
  if (c.has("params"))
    for (const auto& [k, v] : c.at("params").items()) p[k] = io::number_from_json(v);
  return p;
}

Outcome cmd_example(const Config& c) {
  return {io::to_json(build_example(c.string("id", ""), example_params(c)))};
}

Outcome cmd_examples_list() {
  return {{{"ids", example_ids()}}};
}

Outcome cmd_verify(const Config& c) {
  const std::string id = c.string("theorem", "all");
  std::vector<VerifyReport> reps;
  if (id == "all") reps = verify_all();
  else if (c.has("instance")) reps.push_back(verify_theorem(id, c.string("instance", "")));
  else
    for (const std::string& inst : theorem_instances(id)) reps.push_back(verify_theorem(id, inst));
  bool passed = true;
  json a = json::array();
  std::ostringstream csv;
  csv << "theorem,instance,witness,role,majorant,domain,expected,actual,sup_ratio,slope,pass\n";
  for (const VerifyReport& r : reps) {
    passed = passed && r.passed;
    a.push_back(io::to_json(r));
    for (const VerifyRow& w : r.rows)
      csv << r.theorem << ',' << r.instance << ",\"" << w.witness << "\"," << w.role << ',' << w.majorant << ",\""
          << w.domain << "\"," << (w.expected ? std::string(to_string(*w.expected)) : "none") << ','
          << to_string(w.actual) << ',' << io::number(w.sup_ratio).dump() << ',' << io::number(w.slope).dump() << ','
          << (w.pass ? "true" : "false") << '\n';
  }
  return {{{"reports", a}, {"passed", passed}}, csv.str(), passed ? 0 : 1};
}

// Command-line keys accepted by each subcommand; each becomes --key.
const std::map<std::string, std::vector<std::string>>& command_keys() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"eval", {"f", "z", "zs"}},
      {"kernel", {"space", "w", "z"}},
      {"nabla", {"space", "z"}},
      {"phase", {"space", "t", "route"}},
      {"meantype", {"f", "g", "theta", "r_min", "r_max", "count", "base"}},
      {"member", {"space", "f", "tol"}},
      {"majorize", {"f", "majorant", "subsamples", "exclusion", "rows"}},
      {"admissible", {"majorant", "witnesses", "space", "subsamples", "exclusion"}},
      {"hb", {"space", "random_points"}},
      {"herglotz", {"q", "inner", "variant", "delta", "half_width", "grid_points", "candidates"}},
      {"weaktype", {"q", "inner", "variant", "y0", "a", "measure", "envelope"}},
      {"clark", {"inner", "z", "zeta", "cutoff", "f", "points"}},
      {"a60scan", {"inner", "y0", "c", "r", "f", "samples"}},
      {"example", {"params"}},
      {"verify", {"instance"}},
      {"defaults", {}},
  };
  return keys;
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& command, const std::string& kind,
                const std::string& detail) {
  out << json{{"command", command}, {"error", {{"kind", kind}, {"detail", detail}}}}.dump(2) << '\n';
  err << "dblab: " << kind << ": " << detail << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for de Branges spaces"};
  app.set_version_flag("--version", std::string(defaults::kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_path;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "JSON config file, or - for stdin");
  app.add_option("--out", out_path, "CSV output path");
  app.add_option("--seed", seed, "seed for randomized sampling");

  std::map<std::string, std::map<std::string, std::string>> raw;
  std::map<std::string, CLI::App*> subs;
  const std::map<std::string, std::string> help{
      {"eval", "evaluate a function"},
      {"kernel", "reproducing kernel K(w, z)"},
      {"nabla", "sqrt(K(z, z))"},
      {"phase", "phase derivative on the real line"},
      {"meantype", "mean type along a ray"},
      {"member", "membership in a space"},
      {"majorize", "test majorization on a domain"},
      {"admissible", "admissibility of a majorant"},
      {"hb", "Hermite-Biehler check"},
      {"herglotz", "Herglotz data of q"},
      {"weaktype", "superlevel-set measures of q on a horizontal line"},
      {"clark", "model-space kernel and Clark data"},
      {"a60scan", "measures of the sets M_r"},
      {"example", "build a shipped example"},
      {"verify", "witness tables of a theorem"},
      {"defaults", "print the defaults table"},
  };
  for (const auto& [name, keys] : command_keys()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    subs[name] = sub;
    for (const std::string& k : keys) sub->add_option("--" + k, raw[name][k]);
  }
  std::string example_id, theorem_id, build_id;
  std::vector<std::string> example_kv;
  subs["example"]->add_option("id", example_id, "example id")->required();
  subs["example"]->add_option("--param", example_kv, "key=value parameter");
  subs["verify"]->add_option("theorem", theorem_id, "theorem id or 'all'");
  CLI::App* examples = app.add_subcommand("examples", "list or build shipped examples");
  examples->require_subcommand(1);
  examples->add_subcommand("list", "list example ids");
  CLI::App* build = examples->add_subcommand("build", "build one example");
  build->add_option("id", build_id, "example id")->required();
  build->add_option("--param", example_kv, "key=value parameter");
  bool json_flag = false;
  build->add_flag("--json", json_flag, "emit JSON (always on)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << defaults::kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(out, err, "", "config", e.what());
    return 2;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;
  if (examples->parsed()) command = examples->get_subcommands().front()->get_name() == "list" ? "examples list" : "examples build";

  Outcome o;
  json config;
  try {
    try {
      config = json::object();
      if (!config_path.empty()) {
        if (config_path == "-") config = json::parse(in);
        else {
          std::ifstream f(config_path);
          if (!f) throw ConfigError("cannot open config '" + config_path + "'");
          config = json::parse(f);
        }
        if (!config.is_object()) throw ConfigError("config must be a JSON object");
        if (config.contains("command") && config.at("command") != command)
          throw ConfigError("config is for command '" + config.at("command").get<std::string>() + "'");
        config.erase("command");
        if (config.contains("seed")) seed = config.at("seed").get<std::uint64_t>();
        if (config.contains("out") && out_path.empty()) out_path = config.at("out").get<std::string>();
        config.erase("out");
      }
      if (raw.count(command))
        for (const auto& [k, v] : raw[command])
          if (subs[command]->count("--" + k)) config[k] = load_value(v);
      if (command == "example" || command == "examples build") {
        config["id"] = command == "example" ? example_id : build_id;
        for (const std::string& kv : example_kv) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos) throw ConfigError("--param expects key=value, got '" + kv + "'");
          config["params"][kv.substr(0, eq)] = load_value(kv.substr(eq + 1));
        }
      }
      if (command == "verify" && !theorem_id.empty()) config["theorem"] = theorem_id;
      config["seed"] = seed;
    } catch (const json::exception& e) {
      throw ConfigError(e.what());
    }

    const Config c(config);
    try {
      if (command == "eval") o = cmd_eval(c);
      else if (command == "kernel") o = cmd_kernel(c);
      else if (command == "nabla") o = cmd_nabla(c);
      else if (command == "phase") o = cmd_phase(c);
      else if (command == "meantype") o = cmd_meantype(c);
      else if (command == "member") o = cmd_member(c);
      else if (command == "majorize") o = cmd_majorize(c);
      else if (command == "admissible") o = cmd_admissible(c);
      else if (command == "hb") o = cmd_hb(c, seed);
      else if (command == "herglotz") o = cmd_herglotz(c);
      else if (command == "weaktype") o = cmd_weaktype(c);
      else if (command == "clark") o = cmd_clark(c);
      else if (command == "a60scan") o = cmd_a60scan(c);
      else if (command == "example" || command == "examples build") o = cmd_example(c);
      else if (command == "examples list") o = cmd_examples_list();
      else if (command == "verify") o = cmd_verify(c);
      else if (command == "defaults") o.result = io::defaults_table();
    } catch (const json::exception& e) {
      throw ConfigError(e.what());
    }
  } catch (const ConfigError& e) {
    emit_error(out, err, command, "config", e.what());
    return 2;
  } catch (const Error& e) {
    const bool parse = e.kind() == ErrorKind::Parse;
    emit_error(out, err, command, std::string(to_string(e.kind())), e.detail());
    return parse ? 2 : 1;
  } catch (const std::exception& e) {
    emit_error(out, err, command, "internal", e.what());
    return 1;
  }

  if (!out_path.empty()) {
    if (o.csv.empty()) {
      emit_error(out, err, command, "config", "command '" + command + "' has no CSV series");
      return 2;
    }
    std::ofstream f(out_path);
    if (!f) {
      emit_error(out, err, command, "config", "cannot write '" + out_path + "'");
      return 2;
    }
    f << o.csv;
  }
  json doc{{"command", command}, {"config", config}, {"result", o.result}, {"version", std::string(defaults::kVersion)}};
  if (!out_path.empty()) doc["csv"] = out_path;
  out << doc.dump(2) << '\n';
  return o.code;
}

}  // namespace dblab::cli
