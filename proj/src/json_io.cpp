#include "dblab/json_io.hpp"

#include <cmath>
#include <cstdlib>
#include <regex>

#include "dblab/error.hpp"

namespace dblab::io {

using FE = FunctionExpr;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

double get_number(const json& j, const char* key, double fallback) {
  return j.contains(key) ? number_from_json(j.at(key)) : fallback;
}

std::string get_string(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_string()) bad(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t get_count(const json& j, const char* key) {
  const double n = number_from_json(need(j, key));
  if (!(n >= 0.0) || n != std::floor(n)) bad(std::string("'") + key + "' must be a nonnegative integer");
  return static_cast<std::size_t>(n);
}

json complex_list(std::span<const cplx> zs) {
  json a = json::array();
  for (const cplx& z : zs) a.push_back(to_json(z));
  return a;
}

std::vector<cplx> complex_list_from(const json& j) {
  if (!j.is_array()) bad("expected an array of complex numbers");
  std::vector<cplx> out;
  for (const json& e : j) out.push_back(complex_from_json(e));
  return out;
}

json grid_json(const GridSpec& g) { return {{"ratio", g.ratio}, {"r_max", g.r_max}, {"linear_step", g.linear_step}}; }

GridSpec grid_from(const json& j) {
  GridSpec g;
  if (!j.contains("grid")) return g;
  const json& o = j.at("grid");
  g.ratio = get_number(o, "ratio", g.ratio);
  g.r_max = get_number(o, "r_max", g.r_max);
  g.linear_step = get_number(o, "linear_step", g.linear_step);
  return g;
}

json divisor_json(const std::vector<DivisorPoint>& d) {
  json a = json::array();
  for (const DivisorPoint& p : d) a.push_back({{"point", to_json(p.point)}, {"multiplicity", p.multiplicity}});
  return a;
}

std::vector<DivisorPoint> divisor_from(const json& j) {
  std::vector<DivisorPoint> out;
  if (!j.contains("divisor")) return out;
  for (const json& e : j.at("divisor"))
    out.push_back({complex_from_json(need(e, "point")), e.contains("multiplicity") ? e.at("multiplicity").get<int>() : 1});
  return out;
}

std::string verdict_name(MajorizationVerdict v) { return std::string(to_string(v)); }

}  // namespace

// --- scalars --------------------------------------------------------------------

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    if (s == "nan") return std::nan("");
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (...) {
    }
  }
  bad("expected a number, got " + j.dump());
}

json to_json(cplx z) { return json::array({number(z.real()), number(z.imag())}); }

cplx complex_from_json(const json& j) {
  if (j.is_array() && j.size() == 2) return {number_from_json(j[0]), number_from_json(j[1])};
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  bad("expected a complex number [re, im], got " + j.dump());
}

cplx parse_complex(const std::string& text) {
  static const std::regex full(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  static const std::regex pure(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pure)) {
    const std::string c = m[1].str();
    double im = 1.0;
    if (c == "-") im = -1.0;
    else if (!c.empty() && c != "+") im = std::stod(c);
    return {0.0, im};
  }
  if (!text.empty() && std::regex_match(text, m, full) && (m[1].matched || m[2].matched)) {
    const double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im = -im;
    }
    return {re, im};
  }
  bad("cannot parse complex number '" + text + "'");
}

// --- sequences -------------------------------------------------------------------

json to_json(const ZeroSequence& z) {
  json j{{"family", std::string(to_string(z.family()))}, {"genus", z.genus()}};
  if (z.family() == SequenceFamily::Explicit) {
    j["points"] = complex_list(z.points());
  } else {
    j["N"] = z.truncation();
    j["conjugated"] = z.conjugated();
  }
  return j;
}

ZeroSequence zeros_from_json(const json& j) {
  const SequenceFamily fam = sequence_family_from_string(j.value("family", std::string("explicit")));
  const int genus = j.contains("genus") ? j.at("genus").get<int>() : 0;
  if (fam == SequenceFamily::Explicit) return ZeroSequence::explicit_points(complex_list_from(need(j, "points")), genus);
  const std::size_t n = get_count(j, "N");
  ZeroSequence s = [&] {
    switch (fam) {
      case SequenceFamily::ShiftedSquares: return ZeroSequence::shifted_squares(n, genus);
      case SequenceFamily::DampedSquares: return ZeroSequence::damped_squares(n, genus);
      case SequenceFamily::LogSpaced: return ZeroSequence::log_spaced(n);
      default: bad("family '" + std::string(to_string(fam)) + "' is not a zero sequence");
    }
  }();
  if (j.value("conjugated", false)) s = s.conjugate();
  return s;
}

json to_json(const PoleSequence& p) {
  json j{{"family", std::string(to_string(p.family()))}};
  if (p.family() == SequenceFamily::Explicit) {
    j["poles"] = complex_list(p.poles());
    j["weights"] = complex_list(p.weights());
  } else {
    j["alpha"] = p.alpha();
    j["N"] = p.truncation();
    j["conjugated"] = p.conjugated();
  }
  return j;
}

PoleSequence poles_from_json(const json& j) {
  const SequenceFamily fam = sequence_family_from_string(j.value("family", std::string("explicit")));
  if (fam == SequenceFamily::Explicit)
    return PoleSequence::explicit_poles(complex_list_from(need(j, "poles")), complex_list_from(need(j, "weights")));
  if (fam != SequenceFamily::SymmetricPower) bad("family '" + std::string(to_string(fam)) + "' is not a pole sequence");
  PoleSequence p = PoleSequence::symmetric_power(number_from_json(need(j, "alpha")), get_count(j, "N"));
  if (j.value("conjugated", false)) p = p.conjugate();
  return p;
}

// --- expressions ------------------------------------------------------------------

json to_json(const FE& f) {
  using K = FE::Kind;
  auto list = [](const std::vector<FE>& fs) {
    json a = json::array();
    for (const FE& g : fs) a.push_back(to_json(g));
    return a;
  };
  switch (f.kind()) {
    case K::Constant: return {{"kind", "const"}, {"value", to_json(f.param_a())}};
    case K::Identity: return {{"kind", "z"}};
    case K::Exp: return {{"kind", "exp"}, {"rate", to_json(f.param_a())}};
    case K::Sin: return {{"kind", "sin"}};
    case K::Cos: return {{"kind", "cos"}};
    case K::Sinc: return {{"kind", "sinc"}};
    case K::Polynomial: return {{"kind", "poly"}, {"coeffs", complex_list(f.coefficients())}};
    case K::Affine:
      return {{"kind", "affine"}, {"a", to_json(f.param_a())}, {"b", to_json(f.param_b())}, {"arg", to_json(f.children()[0])}};
    case K::Sum: return {{"kind", "sum"}, {"terms", list(f.children())}};
    case K::Product: return {{"kind", "product"}, {"factors", list(f.children())}};
    case K::Quotient: return {{"kind", "quotient"}, {"num", to_json(f.children()[0])}, {"den", to_json(f.children()[1])}};
    case K::Power: return {{"kind", "power"}, {"base", to_json(f.children()[0])}, {"exponent", f.exponent()}};
    case K::Sharp: return {{"kind", "sharp"}, {"arg", to_json(f.children()[0])}};
    case K::CanonicalProduct: return {{"kind", "canonical_product"}, {"zeros", to_json(*f.zeros())}};
    case K::PartialFractions: return {{"kind", "partial_fractions"}, {"poles", to_json(*f.poles())}};
  }
  bad("unknown expression node");
}

FE function_from_json(const json& j) {
  const std::string k = get_string(j, "kind");
  auto list = [&](const char* key) {
    const json& a = need(j, key);
    if (!a.is_array()) bad(std::string("'") + key + "' must be an array");
    std::vector<FE> out;
    for (const json& e : a) out.push_back(function_from_json(e));
    return out;
  };
  if (k == "const") return FE::constant(complex_from_json(need(j, "value")));
  if (k == "z") return FE::identity();
  if (k == "exp") return FE::exp(complex_from_json(need(j, "rate")));
  if (k == "sin") return FE::sin();
  if (k == "cos") return FE::cos();
  if (k == "sinc") return FE::sinc();
  if (k == "poly") return FE::polynomial(complex_list_from(need(j, "coeffs")));
  if (k == "affine")
    return FE::affine(complex_from_json(need(j, "a")), complex_from_json(need(j, "b")), function_from_json(need(j, "arg")));
  if (k == "sum") return FE::sum(list("terms"));
  if (k == "product") return FE::product(list("factors"));
  if (k == "quotient") return FE::quotient(function_from_json(need(j, "num")), function_from_json(need(j, "den")));
  if (k == "power") return FE::power(function_from_json(need(j, "base")), need(j, "exponent").get<int>());
  if (k == "sharp") return FE::sharp_node(function_from_json(need(j, "arg")));
  if (k == "canonical_product") return FE::canonical_product(zeros_from_json(need(j, "zeros")));
  if (k == "partial_fractions") return FE::partial_fractions(poles_from_json(need(j, "poles")));
  bad("unknown function kind '" + k + "'");
}

// --- spaces, domains, majorants ---------------------------------------------------

json to_json(const DbSpace& s) {
  json j{{"E", to_json(s.E)}, {"declared_order", s.declared_order}, {"declared_exp_type", s.declared_exp_type}};
  if (s.zeros && s.E.kind() != FE::Kind::CanonicalProduct) j["zeros"] = to_json(*s.zeros);
  if (!s.real_zeros.empty()) {
    json a = json::array();
    for (const RealZero& r : s.real_zeros) a.push_back({{"point", r.point}, {"multiplicity", r.multiplicity}});
    j["real_zeros"] = a;
  }
  return j;
}

DbSpace space_from_json(const json& j) {
  if (j.is_string()) {
    const std::string id = j.get<std::string>();
    char* end = nullptr;
    const double a = id.size() > 2 && id.rfind("pw", 0) == 0 ? std::strtod(id.c_str() + 2, &end) : 0.0;
    if (end && *end == '\0') return space_from_json(json{{"example", "pw"}, {"params", {{"a", a}}}});
    return space_from_json(json{{"example", id}});
  }
  if (j.contains("example")) {
    std::map<std::string, double> params;
    if (j.contains("params"))
      for (const auto& [key, v] : j.at("params").items()) params[key] = number_from_json(v);
    const ExampleInstance ex = build_example(get_string(j, "example"), params);
    const std::string part = j.value("part", std::string("space"));
    const std::optional<DbSpace>& s = part == "subspace" ? ex.subspace : ex.space;
    if (part != "space" && part != "subspace") bad("'part' must be 'space' or 'subspace'");
    if (!s) throw Error(ErrorKind::UnknownInstance, "example '" + ex.id + "' has no " + part);
    return *s;
  }
  DbSpace s = DbSpace::from_E(function_from_json(need(j, "E")), get_number(j, "declared_order", 1.0),
                              get_number(j, "declared_exp_type", 0.0));
  if (j.contains("zeros")) s.zeros = std::make_shared<const ZeroSequence>(zeros_from_json(j.at("zeros")));
  if (j.contains("real_zeros"))
    for (const json& e : j.at("real_zeros"))
      s.real_zeros.push_back({number_from_json(need(e, "point")), e.value("multiplicity", 1)});
  return s;
}

json to_json(const SampledDomain& d) {
  using K = SampledDomain::Kind;
  switch (d.kind) {
    case K::Ray: return {{"kind", "ray"}, {"beta", d.beta}, {"h", d.h}, {"grid", grid_json(d.grid)}};
    case K::Line: return {{"kind", "line"}, {"h", d.h}, {"grid", grid_json(d.grid)}};
    case K::RealAxis: return {{"kind", "real"}, {"grid", grid_json(d.grid)}};
    case K::HorizontalRay:
      return {{"kind", "horizontal_ray"}, {"y0", d.y0}, {"h", d.h}, {"grid", grid_json(d.grid)}};
    case K::Union: {
      json a = json::array();
      for (const SampledDomain& p : d.parts) a.push_back(to_json(p));
      return {{"kind", "union"}, {"parts", a}};
    }
  }
  bad("unknown domain kind");
}

SampledDomain domain_from_json(const json& j) {
  const std::string k = get_string(j, "kind");
  const GridSpec g = grid_from(j);
  if (k == "ray") return SampledDomain::ray(get_number(j, "beta", 0.5), get_number(j, "h", 0.0), g);
  if (k == "line") return SampledDomain::line(number_from_json(need(j, "h")), g);
  if (k == "real") return SampledDomain::real_axis(g);
  if (k == "horizontal_ray")
    return SampledDomain::horizontal_ray(number_from_json(need(j, "y0")), get_number(j, "h", 0.0), g);
  if (k == "union") {
    std::vector<SampledDomain> parts;
    for (const json& p : need(j, "parts")) parts.push_back(domain_from_json(p));
    return SampledDomain::union_of(std::move(parts));
  }
  bad("unknown domain kind '" + k + "'");
}

json to_json(const Majorant& m) {
  using K = Majorant::Kind;
  json j{{"domain", to_json(m.domain)}, {"scale", m.scale}};
  switch (m.kind) {
    case K::Nabla:
      j["kind"] = "nabla";
      j["space"] = to_json(*m.space);
      break;
    case K::MS:
      j["kind"] = "mS";
      j["S"] = to_json(m.base);
      j["divisor"] = divisor_json(m.zero_divisor);
      break;
    case K::Modulus:
      j["kind"] = "modulus";
      j["f"] = to_json(m.base);
      j["divisor"] = divisor_json(m.zero_divisor);
      break;
    case K::Zero: j["kind"] = "zero"; break;
  }
  return j;
}

Majorant majorant_from_json(const json& j) {
  const std::string k = get_string(j, "kind");
  const SampledDomain d = domain_from_json(need(j, "domain"));
  Majorant m;
  if (k == "nabla") m = nabla_majorant(space_from_json(need(j, "space")), d);
  else if (k == "mS") m = mS_majorant(function_from_json(need(j, "S")), d, divisor_from(j));
  else if (k == "modulus") m = modulus_majorant(function_from_json(need(j, "f")), d, divisor_from(j));
  else if (k == "zero") m = zero_majorant(d);
  else bad("unknown majorant kind '" + k + "'");
  const double c = get_number(j, "scale", 1.0);
  return c == 1.0 ? m : scaled(m, c);
}

// --- inner functions -------------------------------------------------------------

json to_json(const InnerFunction& t) {
  using K = InnerFunction::Kind;
  json in;
  switch (t.kind()) {
    case K::Ratio: in = {{"kind", "ratio"}, {"E", to_json(t.ratio_E())}, {"alpha", t.ratio_alpha()}}; break;
    case K::General: in = {{"kind", "general"}, {"theta", to_json(t.expr())}}; break;
    case K::Exponential: in = {{"kind", "exp"}, {"a", t.expr().param_a().imag()}}; break;
    case K::Blaschke: in = {{"kind", "blaschke"}, {"zeros", complex_list(t.zeros())}, {"gamma", to_json(t.gamma())}}; break;
    case K::Constant: in = {{"kind", "constant"}, {"value", to_json(t.gamma())}}; break;
  }
  in["label"] = t.label();
  return {{"inner", in}};
}

InnerFunction inner_from_json(const json& outer) {
  const json& j = need(outer, "inner");
  const std::string k = get_string(j, "kind");
  if (k == "ratio") return InnerFunction::ratio(function_from_json(need(j, "E")), get_number(j, "alpha", 0.0));
  if (k == "exp") return InnerFunction::exponential(get_number(j, "a", 1.0));
  if (k == "blaschke")
    return InnerFunction::blaschke(complex_list_from(need(j, "zeros")),
                                   j.contains("gamma") ? complex_from_json(j.at("gamma")) : cplx(1.0));
  if (k == "constant") return InnerFunction::constant(complex_from_json(need(j, "value")));
  if (k == "general") return InnerFunction::general(function_from_json(need(j, "theta")), j.value("label", std::string("general")));
  bad("unknown inner function kind '" + k + "'");
}

// --- reports ----------------------------------------------------------------------

json to_json(const MeanTypeEstimate& m) {
  return {{"value", number(m.value)},
          {"residual", number(m.residual)},
          {"slope_error", number(m.slope_error)},
          {"radii_used", m.radii.size()},
          {"discarded", m.discarded}};
}

json to_json(const MembershipReport& r) {
  return {{"verdict", std::string(to_string(r.verdict))},
          {"mean_type_f", to_json(r.mean_type_f)},
          {"mean_type_sharp", to_json(r.mean_type_sharp)},
          {"norm_squared", r.norm_squared ? number(*r.norm_squared) : json(nullptr)},
          {"norm_status", r.norm_status},
          {"reason", r.reason}};
}

json to_json(const MajorizationReport& r, bool with_rows) {
  json j{{"sup_ratio", number(r.sup_ratio)},
         {"sup_point", to_json(r.sup_point)},
         {"slope", number(r.slope)},
         {"verdict", verdict_name(r.verdict)},
         {"excluded", r.excluded},
         {"cells", r.rows.size()}};
  if (with_rows) {
    json a = json::array();
    for (const RatioSample& s : r.rows) a.push_back({{"z", to_json(s.z)}, {"log_ratio", number(s.log_ratio)}});
    j["rows"] = a;
  }
  return j;
}

json to_json(const AdmissibilityReport& r) {
  json w = json::array();
  for (const WitnessCheck& c : r.witnesses)
    w.push_back({{"name", c.name},
                 {"membership", std::string(to_string(c.membership))},
                 {"majorization", verdict_name(c.majorization)}});
  return {{"adm1", r.adm1}, {"adm2", r.adm2}, {"admissible", r.admissible}, {"witnesses", w}};
}

json to_json(const HbReport& r) {
  return {{"hermite_biehler", r.hermite_biehler},
          {"worst_margin", number(r.worst_margin)},
          {"worst_log_margin", number(r.worst_log_margin)},
          {"worst_point", to_json(r.worst_point)},
          {"points", r.points}};
}

json to_json(const HerglotzData& d) {
  json dens = json::array(), masses = json::array();
  for (const DensitySample& s : d.density) dens.push_back({number(s.t), number(s.value)});
  for (const PointMass& m : d.masses) masses.push_back({{"location", number(m.location)}, {"weight", number(m.weight)}});
  return {{"p", number(d.p)},
          {"im_at_i", number(d.im_at_i)},
          {"density", dens},
          {"point_masses", masses},
          {"total_mass", number(d.total_mass)},
          {"limit_yq", number(d.limit_yq)},
          {"class_c0", d.class_c0},
          {"class_c1", d.class_c1}};
}

json to_json(const WeakTypeReport& r) {
  json rows = json::array();
  for (const WeakTypeRow& w : r.rows)
    rows.push_back({{"a", number(w.a)},
                    {"measure", number(w.measure)},
                    {"product", number(w.product)},
                    {"bound", number(w.bound)},
                    {"holds", w.holds}});
  return {{"y0", r.y0},
          {"measure", to_string(r.measure)},
          {"constant", r.constant},
          {"limit_yq", number(r.limit_yq)},
          {"rows", rows},
          {"all_hold", r.all_hold},
          {"monotone", r.monotone},
          {"tail_to_zero", r.tail_to_zero}};
}

json to_json(const A60Scan& s) {
  json rows = json::array(), res = json::array();
  for (const A60Row& r : s.rows) rows.push_back({{"r", number(r.r)}, {"measure", number(r.measure)}, {"ratio", number(r.ratio)}});
  for (const A60Residual& r : s.residual) res.push_back({{"x", number(r.x)}, {"value", number(r.value)}});
  return {{"rows", rows}, {"residual", res}, {"min_abs_one_plus_theta", number(s.min_abs_one_plus_theta)}};
}

json to_json(const DecompositionExperiment& e) {
  json rows = json::array();
  for (const DecompositionRow& r : e.rows)
    rows.push_back({{"z", to_json(r.z)},
                    {"f_eps", to_json(r.f_eps)},
                    {"f_eps_split", to_json(r.f_eps_split)},
                    {"gamma_eps", to_json(r.gamma_eps)}});
  return {{"cutoff", e.cutoff},
          {"tail_integral", number(e.tail_integral)},
          {"tail_mass", number(e.tail_mass)},
          {"rows", rows},
          {"max_split_mismatch", number(e.max_split_mismatch)}};
}

json to_json(const VerifyReport& r) {
  json rows = json::array();
  for (const VerifyRow& w : r.rows)
    rows.push_back({{"witness", w.witness},
                    {"role", w.role},
                    {"majorant", w.majorant},
                    {"domain", w.domain},
                    {"expected", w.expected ? json(verdict_name(*w.expected)) : json(nullptr)},
                    {"actual", verdict_name(w.actual)},
                    {"sup_ratio", number(w.sup_ratio)},
                    {"slope", number(w.slope)},
                    {"pass", w.pass}});
  return {{"theorem", r.theorem}, {"instance", r.instance}, {"rows", rows}, {"passed", r.passed}};
}

json to_json(const ExampleInstance& ex) {
  json params = json::object();
  for (const auto& [k, v] : ex.parameters) params[k] = number(v);
  json fns = json::array();
  for (const ShippedFunction& s : ex.functions)
    fns.push_back({{"name", s.name},
                   {"f", to_json(s.f)},
                   {"in_space", s.in_space},
                   {"in_subspace", s.in_subspace ? json(*s.in_subspace) : json(nullptr)}});
  json objs = json::object();
  for (const auto& [k, f] : ex.objects) objs[k] = to_json(f);
  json maj = json::array();
  for (const Majorant& m : ex.majorants) maj.push_back(to_json(m));
  return {{"id", ex.id},
          {"parameters", params},
          {"space", ex.space ? to_json(*ex.space) : json(nullptr)},
          {"subspace", ex.subspace ? to_json(*ex.subspace) : json(nullptr)},
          {"functions", fns},
          {"objects", objs},
          {"majorants", maj},
          {"notes", ex.notes}};
}

json defaults_table() {
  namespace d = defaults;
  return {{"version", std::string(d::kVersion)},
          {"entire_core",
           {{"pole_exclusion", d::kPoleExclusion},
            {"pole_probe_threshold", d::kPoleProbeThreshold},
            {"cauchy_radius", d::kCauchyRadius},
            {"cauchy_nodes", d::kCauchyNodes}}},
          {"db_space",
           {{"kernel_switch", d::kKernelSwitch},
            {"nabla_negative_slack", d::kNablaNegativeSlack},
            {"mean_type_r_min", d::kMeanTypeRMin},
            {"mean_type_r_max", d::kMeanTypeRMax},
            {"mean_type_radii", d::kMeanTypeRadii},
            {"mean_type_floor", d::kMeanTypeFloor},
            {"membership_tol", d::kMembershipTol},
            {"line_rel_tol", d::kLineRelTol},
            {"line_panel_width", d::kLinePanelWidth},
            {"line_decay_threshold", d::kLineDecayThreshold},
            {"membership_max_half_width", d::kMembershipMaxHalfWidth},
            {"membership_max_depth", d::kMembershipMaxDepth},
            {"membership_exponent_margin", d::kMembershipExponentMargin},
            {"hb_min_imag", d::kHbMinImag}}},
          {"majorization",
           {{"grid_ratio", d::kGridRatio},
            {"grid_r_max", d::kGridRMax},
            {"grid_linear_step", d::kGridLinearStep},
            {"grid_subsamples", d::kGridSubsamples},
            {"zero_exclusion", d::kZeroExclusion},
            {"slope_majorized", d::kSlopeMajorized},
            {"slope_not_majorized", d::kSlopeNotMajorized},
            {"sup_ratio_cap", d::kSupRatioCap}}},
          {"examples",
           {{"a38_truncation", d::kA38Truncation},
            {"a41_truncation", d::kA41Truncation},
            {"a45_truncation", d::kA45Truncation}}},
          {"model_space",
           {{"boundary_delta", d::kBoundaryDelta},
            {"point_mass_stability", d::kPointMassStability},
            {"bisection_tol", d::kBisectionTol},
            {"weak_type_constant", d::kWeakTypeConstant},
            {"herglotz_half_width", d::kHerglotzHalfWidth},
            {"herglotz_grid_points", d::kHerglotzGridPoints},
            {"herglotz_far_y_min", d::kHerglotzFarYMin},
            {"herglotz_far_y_max", d::kHerglotzFarYMax},
            {"herglotz_class_tol", d::kHerglotzClassTol},
            {"weak_type_dense_half_width", d::kWeakTypeDenseHalfWidth},
            {"weak_type_steps_per_y0", d::kWeakTypeStepsPerY0},
            {"weak_type_probe_octaves", d::kWeakTypeProbeOctaves},
            {"a60_samples_per_r", d::kA60SamplesPerR}}}};
}

}  // namespace dblab::io
