#include "ifslab/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

#include "ifslab/errors.hpp"

#ifndef IFSLAB_VERSION
#define IFSLAB_VERSION "0.0.0"
#endif

namespace ifslab {

std::string_view tool_version() { return IFSLAB_VERSION; }

namespace {

using ifslab::to_json;

void write_double(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
  // Keep floats recognizable as floats when read back.
  if (std::string_view(buf).find_first_of(".eEn") == std::string_view::npos) out += ".0";
}

void write_value(std::string& out, const Json& v, int indent, int level) {
  const auto newline = [&](int lvl) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * lvl, ' ');
  };
  switch (v.type()) {
    case Json::value_t::number_float: write_double(out, v.get<double>()); return;
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(level + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write_value(out, it.value(), indent, level + 1);
      }
      newline(level);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Short arrays of scalars stay on one line.
      const bool flat = v.size() <= 8 && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
      out += '[';
      bool first = true;
      for (const Json& e : v) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(level + 1);
        write_value(out, e, indent, level + 1);
      }
      if (!flat) newline(level);
      out += ']';
      return;
    }
    default: out += v.dump(); return;
  }
}

double number(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("malformed report: ") + e.what());
  }
}

Json to_json(const MembershipResult& m) {
  return Json{{"kind", m.survived() ? "survived" : "escaped"}, {"depth", m.depth}, {"set", to_string(m.set)}};
}

MembershipResult membership_from_json(const Json& j) {
  MembershipResult m;
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "survived" && kind != "escaped") throw Error(ErrorKind::parse_error, "bad membership kind");
  m.kind = kind == "survived" ? MembershipResult::Kind::survived : MembershipResult::Kind::escaped;
  m.depth = j.at("depth").get<int>();
  m.set = parse_param_set(j.at("set").get<std::string>());
  return m;
}

Json to_json(const ChainDisk& d) { return Json{{"n", d.n}, {"center", to_json(d.center)}, {"radius", d.radius}}; }

ChainDisk chain_disk_from_json(const Json& j) {
  return ChainDisk{j.at("n").get<int>(), complex_from_json(j.at("center")), number(j.at("radius"))};
}

Json to_json(const LevelCheck& c) {
  return Json{{"n", c.n},
              {"exists_margin", c.exists_margin},
              {"connect_margin", c.connect_margin},
              {"disjoint_margin", c.disjoint_margin},
              {"nearest_node", to_json(c.nearest_node)},
              {"contain_margin", c.contain_margin},
              {"exists", c.exists},
              {"connected", c.connected},
              {"disjoint", c.disjoint},
              {"contained_in_previous", c.contained_in_previous}};
}

LevelCheck level_from_json(const Json& j) {
  LevelCheck c;
  c.n = j.at("n").get<int>();
  c.exists_margin = number(j.at("exists_margin"));
  c.connect_margin = number(j.at("connect_margin"));
  c.disjoint_margin = number(j.at("disjoint_margin"));
  c.nearest_node = complex_from_json(j.at("nearest_node"));
  c.contain_margin = number(j.at("contain_margin"));
  c.exists = j.at("exists").get<bool>();
  c.connected = j.at("connected").get<bool>();
  c.disjoint = j.at("disjoint").get<bool>();
  c.contained_in_previous = j.at("contained_in_previous").get<bool>();
  return c;
}

Json window_json(const Window& w) { return Json{{"x0", w.x0}, {"y0", w.y0}, {"x1", w.x1}, {"y1", w.y1}}; }

}  // namespace

std::string dump_json(const Json& value, int indent) {
  std::string out;
  write_value(out, value, indent, 0);
  if (indent >= 0) out += '\n';
  return out;
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) { return {number(j.at("re")), number(j.at("im"))}; }

Json to_json(const RationalTypeSeries& f) {
  return Json{{"preperiod", f.head()}, {"period", f.block()}, {"text", f.to_string()}};
}

RationalTypeSeries series_from_json(const Json& j) {
  return RationalTypeSeries(j.at("preperiod").get<std::vector<int>>(), j.at("period").get<std::vector<int>>());
}

Json to_json(const ConditionRecord& r) {
  Json j{{"which", to_string(r.which)}, {"n", r.n},       {"lhs", r.lhs},
         {"rhs", r.rhs},                 {"margin", r.margin}, {"pass", r.pass}};
  if (!r.poly.empty()) j["poly"] = r.poly;
  if (r.partner >= 0) j["partner"] = r.partner;
  return j;
}

ConditionRecord condition_from_json(const Json& j) {
  return guarded([&] {
    ConditionRecord r;
    r.which = parse_condition(j.at("which").get<std::string>());
    r.n = j.at("n").get<int>();
    r.lhs = number(j.at("lhs"));
    r.rhs = number(j.at("rhs"));
    r.margin = number(j.at("margin"));
    r.pass = j.at("pass").get<bool>();
    if (j.contains("poly")) r.poly = j.at("poly").get<std::vector<int>>();
    if (j.contains("partner")) r.partner = j.at("partner").get<int>();
    return r;
  });
}

Json to_json(const CertificateReport& rep) {
  Json j;
  j["lambda"] = to_json(rep.lambda);
  j["series"] = to_json(rep.series);
  j["target"] = to_string(rep.target);
  j["zeta"] = to_json(rep.zeta);
  j["root_residual"] = rep.root_residual;
  j["derivative"] = to_json(rep.derivative);
  j["zero_count"] = rep.zero_count;
  j["overlap_size"] = rep.overlap_size;
  j["warnings"] = rep.warnings;
  j["conditions"] = Json::array();
  for (const auto& r : rep.conditions) j["conditions"].push_back(to_json(r));
  j["chain"] = Json::array();
  for (const auto& d : rep.geometric.chain) j["chain"].push_back(to_json(d));
  Json geo{{"alphabet", to_string(rep.geometric.alphabet)},
           {"periods", rep.geometric.periods},
           {"exists", rep.geometric.exists},
           {"connected", rep.geometric.connected},
           {"disjoint", rep.geometric.disjoint},
           {"levels", Json::array()}};
  for (const auto& c : rep.geometric.levels) geo["levels"].push_back(to_json(c));
  j["geometric"] = std::move(geo);
  j["periodicity_residuals"] = rep.periodicity_residuals;
  j["probes"] = Json::array();
  for (const auto& p : rep.probes) {
    j["probes"].push_back(Json{{"n", p.n}, {"parameter", to_json(p.parameter)}, {"membership", to_json(p.membership)}});
  }
  j["verdict"] = to_string(rep.verdict);
  j["reason"] = rep.reason;
  j["corollary"] = rep.corollary;
  return j;
}

CertificateReport certificate_from_json(const Json& j) {
  return guarded([&] {
    CertificateReport rep;
    rep.lambda = complex_from_json(j.at("lambda"));
    rep.series = series_from_json(j.at("series"));
    rep.target = parse_param_set(j.at("target").get<std::string>());
    rep.zeta = complex_from_json(j.at("zeta"));
    rep.root_residual = number(j.at("root_residual"));
    rep.derivative = complex_from_json(j.at("derivative"));
    rep.zero_count = j.at("zero_count").get<int>();
    rep.overlap_size = j.at("overlap_size").get<int>();
    rep.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& r : j.at("conditions")) rep.conditions.push_back(condition_from_json(r));
    for (const auto& d : j.at("chain")) rep.geometric.chain.push_back(chain_disk_from_json(d));
    const Json& geo = j.at("geometric");
    rep.geometric.alphabet = parse_alphabet(geo.at("alphabet").get<std::string>());
    rep.geometric.periods = geo.at("periods").get<int>();
    rep.geometric.exists = geo.at("exists").get<bool>();
    rep.geometric.connected = geo.at("connected").get<bool>();
    rep.geometric.disjoint = geo.at("disjoint").get<bool>();
    for (const auto& c : geo.at("levels")) rep.geometric.levels.push_back(level_from_json(c));
    for (const auto& r : j.at("periodicity_residuals")) rep.periodicity_residuals.push_back(number(r));
    for (const auto& p : j.at("probes")) {
      rep.probes.push_back(ProbeEvidence{p.at("n").get<int>(), complex_from_json(p.at("parameter")),
                                         membership_from_json(p.at("membership"))});
    }
    rep.verdict = parse_verdict(j.at("verdict").get<std::string>());
    rep.reason = j.at("reason").get<std::string>();
    rep.corollary = j.at("corollary").get<bool>();
    return rep;
  });
}

GridSummary summarize(const EscapeGrid& grid, std::string output) {
  GridSummary s{grid.window, grid.width, grid.height, grid.depth, grid.set, 0, 0, std::move(output)};
  for (std::int32_t v : grid.values) {
    if (v == 0) ++s.survived;
    s.max_escape = std::max(s.max_escape, v);
  }
  return s;
}

Json to_json(const GridSummary& s) {
  return Json{{"window", window_json(s.window)}, {"width", s.width},         {"height", s.height},
              {"depth", s.depth},                {"set", to_string(s.set)}, {"survived", s.survived},
              {"max_escape", s.max_escape},      {"output", s.output}};
}

GridSummary grid_summary_from_json(const Json& j) {
  return guarded([&] {
    GridSummary s;
    const Json& w = j.at("window");
    s.window = Window{number(w.at("x0")), number(w.at("y0")), number(w.at("x1")), number(w.at("y1"))};
    s.width = j.at("width").get<int>();
    s.height = j.at("height").get<int>();
    s.depth = j.at("depth").get<int>();
    s.set = parse_param_set(j.at("set").get<std::string>());
    s.survived = j.at("survived").get<std::int64_t>();
    s.max_escape = j.at("max_escape").get<std::int32_t>();
    s.output = j.at("output").get<std::string>();
    return s;
  });
}

Json to_json(const LandmarkOutcome& o) {
  Json j{{"id", o.id},
         {"root", to_json(o.root)},
         {"seed_distance", o.seed_distance},
         {"in_sector_S", o.in_sector_S},
         {"sector", Json::array()},
         {"existence", Json::array()},
         {"verdict", to_string(o.certificate.verdict)},
         {"corollary", o.certificate.corollary},
         {"zero_count", o.certificate.zero_count},
         {"overlap_size", o.certificate.overlap_size},
         {"min_margin", o.min_margin},
         {"connected", o.certificate.geometric.connected},
         {"disjoint", o.certificate.geometric.disjoint},
         {"status", o.status},
         {"failures", o.failures}};
  for (const auto& r : o.sector) j["sector"].push_back(to_json(r));
  for (const auto& r : o.existence) j["existence"].push_back(to_json(r));
  j["m0_verdict"] = o.m0_verdict ? Json(to_string(*o.m0_verdict)) : Json(nullptr);
  return j;
}

ReportEnvelope make_envelope(std::string command, Json payload) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return ReportEnvelope{"ifs_lab", std::string(tool_version()), std::move(command), stamp, std::move(payload)};
}

Json to_json(const ReportEnvelope& env) {
  return Json{{"tool", env.tool},
              {"version", env.version},
              {"command", env.command},
              {"timestamp", env.timestamp},
              {"payload", env.payload}};
}

ReportEnvelope envelope_from_json(const Json& j) {
  return guarded([&] {
    return ReportEnvelope{j.at("tool").get<std::string>(), j.at("version").get<std::string>(),
                          j.at("command").get<std::string>(), j.at("timestamp").get<std::string>(),
                          j.at("payload")};
  });
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw Error(ErrorKind::io_error, "write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ifslab
