// ifs_lab: parameter-space renders, attractor plots, accessibility
// certificates and the landmark suite.
//
// Exit status: 0 ok, 1 an expectation failed, 2 usage or parse error,
// 3 numeric failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "ifslab/certificate.hpp"
#include "ifslab/errors.hpp"
#include "ifslab/ifs.hpp"
#include "ifslab/landmarks.hpp"
#include "ifslab/paramspace.hpp"
#include "ifslab/ppm.hpp"
#include "ifslab/report.hpp"

using namespace ifslab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExpectation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw Error(ErrorKind::parse_error, "expected re,im but got '" + text + "'");
  }
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw Error(ErrorKind::parse_error, "bad number '" + s + "'");
    return v;
  };
  return {num(text.substr(0, comma)), num(text.substr(comma + 1))};
}

std::pair<int, int> parse_size(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t a = 0, b = 0;
    const int w = std::stoi(text.substr(0, comma), &a);
    const int h = std::stoi(text.substr(comma + 1), &b);
    if (comma == std::string::npos || a != comma || b != text.size() - comma - 1) throw std::invalid_argument(text);
    if (w < 1 || h < 1) throw Error(ErrorKind::invalid_window, "image size must be at least 1,1");
    return {w, h};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::parse_error, "expected W,H but got '" + text + "'");
  }
}

// --threads wins, then IFS_LAB_THREADS, then the per-command default.
int thread_count(int flag, int fallback) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("IFS_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return fallback;
}

std::string echo_command(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

void print_record(const ConditionRecord& r) {
  std::printf("  %-9s n=%-2d lhs=%.6g rhs=%.6g margin=%+.6g %s\n", std::string(to_string(r.which)).c_str(), r.n,
              r.lhs, r.rhs, r.margin, r.pass ? "ok" : "FAIL");
}

struct RenderArgs {
  std::string window = "-1,-1,1,1";
  std::string px = "256,256";
  int depth = 25;
  std::string set = "m";
  std::string out;
  std::string json;
  int threads = 0;
};

int run_render(const RenderArgs& a, const std::string& command) {
  const Window w = parse_window(a.window);
  const auto [width, height] = parse_size(a.px);
  const ParamSet set = parse_param_set(a.set);
  if (a.depth < 1) throw Error(ErrorKind::invalid_argument, "depth must be at least 1");
  const EscapeGrid grid = escape_grid(w, width, height, set, a.depth, thread_count(a.threads, 0));
  write_binary_file(a.out, encode_ppm(grid));
  const GridSummary s = summarize(grid, a.out);
  std::printf("wrote %s (%dx%d, depth %d, set %s): %lld survivors\n", a.out.c_str(), width, height, a.depth,
              std::string(to_string(set)).c_str(), static_cast<long long>(s.survived));
  if (!a.json.empty()) write_text_file(a.json, dump_json(to_json(make_envelope(command, to_json(s)))));
  return kExitOk;
}

struct AttractorArgs {
  std::string lambda;
  std::string series;
  std::string seed;
  int landmark = 0;
  int depth = 12;
  std::string alphabet = "binary";
  std::string overlay = "none";
  std::string window;
  std::string px = "512,512";
  std::string out;
  int threads = 0;
};

int run_attractor(const AttractorArgs& a) {
  std::optional<RationalTypeSeries> f;
  Complex lambda;
  if (a.landmark != 0) {
    const Landmark lm = landmark(a.landmark);
    f = lm.series;
    lambda = resolve_root(lm);
  } else if (!a.series.empty()) {
    f = RationalTypeSeries::parse(a.series);
    if (a.seed.empty() && a.lambda.empty()) throw Error(ErrorKind::invalid_argument, "--series needs --seed");
    lambda = newton_root(numerator_polynomial(*f), parse_complex(a.seed.empty() ? a.lambda : a.seed));
  } else if (!a.lambda.empty()) {
    lambda = parse_complex(a.lambda);
  } else {
    throw Error(ErrorKind::invalid_argument, "give --lambda, --series with --seed, or --landmark");
  }
  if (!(std::abs(lambda) < 1.0)) throw Error(ErrorKind::invalid_lambda, "attractor needs |lambda| < 1");

  const Alphabet alphabet = parse_alphabet(a.alphabet);
  const auto [width, height] = parse_size(a.px);
  const int threads = thread_count(a.threads, 0);
  Window view;
  if (a.window.empty()) {
    const double r = containing_radius(lambda);
    const double aspect = static_cast<double>(width) / height;
    view = Window{-r * std::max(aspect, 1.0), -r / std::min(aspect, 1.0), r * std::max(aspect, 1.0),
                  r / std::min(aspect, 1.0)};
  } else {
    view = parse_window(a.window);
  }

  Raster raster(width, height, view);
  for (const Complex& z : attractor_sample(lambda, a.depth, alphabet, threads)) raster.plot(z, {0, 0, 0});

  if (a.overlay.rfind("instar:", 0) == 0) {
    int level = 0;
    try {
      level = std::stoi(a.overlay.substr(7));
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, "overlay must be none, instar:L or chain");
    }
    for (const NodalDisk& d : instar_disks(level, lambda, alphabet, threads)) raster.circle(d.disk, {40, 80, 220});
  } else if (a.overlay == "chain") {
    if (!f) throw Error(ErrorKind::invalid_argument, "chain overlay needs --series/--seed or --landmark");
    for (int n = 0; n <= 2 * f->period(); ++n) {
      const ChainDisk d = chain_disk(*f, lambda, n);
      raster.circle(Disk{d.center, d.radius}, {20, 170, 60});
    }
    raster.plot(zeta(*f, lambda), {220, 30, 30});
  } else if (a.overlay != "none") {
    throw Error(ErrorKind::parse_error, "overlay must be none, instar:L or chain");
  }
  write_binary_file(a.out, raster.encode());
  std::printf("wrote %s (lambda %.10g%+.10gi, depth %d, %s)\n", a.out.c_str(), lambda.real(), lambda.imag(), a.depth,
              std::string(to_string(alphabet)).c_str());
  return kExitOk;
}

struct CertifyArgs {
  std::string series;
  std::string seed;
  int landmark = 0;
  std::string target = "m";
  int periods = 2;
  std::string out;
  std::string expect;
  bool verbose = false;
  int threads = 0;
};

int run_certify(const CertifyArgs& a, const std::string& command) {
  RationalTypeSeries f{{1}, {1}};
  Complex seed;
  if (a.landmark != 0) {
    const Landmark lm = landmark(a.landmark);
    f = lm.series;
    seed = a.seed.empty() ? lm.seed : parse_complex(a.seed);
  } else {
    if (a.series.empty() || a.seed.empty()) throw Error(ErrorKind::invalid_argument, "need --series and --seed");
    f = RationalTypeSeries::parse(a.series);
    seed = parse_complex(a.seed);
  }
  const ParamSet target = parse_param_set(a.target);
  const bool check = !a.expect.empty();
  const Verdict expected = check ? parse_verdict(a.expect) : Verdict::inconclusive;
  const Complex lambda = newton_root(numerator_polynomial(f), seed);

  CertifyOptions opts;
  opts.periods = a.periods;
  opts.threads = thread_count(a.threads, 1);
  const CertificateReport rep = certify(f, lambda, target, opts);

  std::printf("series %s  (l,p)=(%d,%d)\n", f.to_string().c_str(), f.preperiod(), f.period());
  std::printf("lambda %.15g%+.15gi  |f|=%.3g\n", lambda.real(), lambda.imag(), rep.root_residual);
  for (const auto& w : rep.warnings) std::printf("warning: %s\n", w.c_str());
  std::size_t failing = 0;
  for (const auto& r : rep.conditions) {
    if (!r.pass) ++failing;
    if (a.verbose || !r.pass || r.poly.empty()) print_record(r);
  }
  std::printf("  %zu condition records, %zu failing\n", rep.conditions.size(), failing);
  std::printf("chain: exists=%d connected=%d disjoint=%d over %d period(s)\n", rep.geometric.exists,
              rep.geometric.connected, rep.geometric.disjoint, rep.geometric.periods);
  std::printf("verdict: %s (%s)%s\n", std::string(to_string(rep.verdict)).c_str(), rep.reason.c_str(),
              rep.corollary ? "  [also on the boundary of M0]" : "");

  const std::string text = dump_json(to_json(make_envelope(command, to_json(rep))));
  if (!a.out.empty()) write_text_file(a.out, text);
  if (check && expected != rep.verdict) {
    std::fprintf(stderr, "expected verdict %s\n", std::string(to_string(expected)).c_str());
    return kExitExpectation;
  }
  return kExitOk;
}

struct LandmarkArgs {
  int id = 0;
  std::string json;
  int threads = 0;
};

int run_landmarks(const LandmarkArgs& a, const std::string& command) {
  if (a.id != 0) landmark(a.id);  // reject unknown ids before doing any work
  const int threads = thread_count(a.threads, 1);
  Json rows = Json::array();
  bool all_met = true;
  std::printf("%-3s %-16s %-27s %-7s %-14s %-4s %-7s %-11s %s\n", "id", "series", "root", "sector", "verdict", "cor",
              "overlap", "min margin", "status");
  for (int id = 1; id <= 6; ++id) {
    if (a.id != 0 && id != a.id) continue;
    const LandmarkOutcome o = evaluate_landmark(id, threads);
    all_met = all_met && o.expectations_met;
    char root[64];
    std::snprintf(root, sizeof root, "%.9f%+.9fi", o.root.real(), o.root.imag());
    std::printf("%-3d %-16s %-27s %-7s %-14s %-4s %-7d %-+11.4g %s\n", id, o.certificate.series.to_string().c_str(), root,
                o.in_sector_S ? "yes" : "no", std::string(to_string(o.certificate.verdict)).c_str(),
                o.certificate.corollary ? "yes" : "no", o.certificate.overlap_size, o.min_margin, o.status.c_str());
    for (const auto& f : o.failures) std::printf("    unmet: %s\n", f.c_str());
    rows.push_back(to_json(o));
  }
  if (!a.json.empty()) write_text_file(a.json, dump_json(to_json(make_envelope(command, rows))));
  return all_met ? kExitOk : kExitExpectation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameter space and attractors of the IFS {-1 + lz, lz, 1 + lz}"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  RenderArgs render;
  auto* r = app.add_subcommand("render", "Escape-depth image of M or M0 as binary PPM");
  r->add_option("--window", render.window, "x0,y0,x1,y1")->capture_default_str();
  r->add_option("--px", render.px, "W,H")->capture_default_str();
  r->add_option("--depth", render.depth, "Search depth")->capture_default_str();
  r->add_option("--set", render.set, "m or m0")->capture_default_str();
  r->add_option("--out", render.out, "Output .ppm")->required();
  r->add_option("--json", render.json, "Write a summary report here");
  r->add_option("--threads", render.threads, "Worker threads (default: IFS_LAB_THREADS or all)");

  AttractorArgs attr;
  auto* at = app.add_subcommand("attractor", "Plot an attractor sample as PPM");
  at->add_option("--lambda", attr.lambda, "re,im");
  at->add_option("--series", attr.series, "Series whose root to use, e.g. 1,-1,-1;1");
  at->add_option("--seed", attr.seed, "Newton seed re,im for --series");
  at->add_option("--landmark", attr.landmark, "Landmark id 1-6");
  at->add_option("--depth", attr.depth, "Word length minus one")->capture_default_str();
  at->add_option("--alphabet", attr.alphabet, "binary or ternary")->capture_default_str();
  at->add_option("--overlay", attr.overlay, "none, instar:L or chain")->capture_default_str();
  at->add_option("--window", attr.window, "x0,y0,x1,y1 (default: the containing disk)");
  at->add_option("--px", attr.px, "W,H")->capture_default_str();
  at->add_option("--out", attr.out, "Output .ppm")->required();
  at->add_option("--threads", attr.threads, "Worker threads");

  CertifyArgs cert;
  auto* c = app.add_subcommand("certify", "Check the accessibility conditions at a root");
  c->add_option("--series", cert.series, "e.g. 1,-1,-1;1");
  c->add_option("--seed", cert.seed, "Newton seed re,im");
  c->add_option("--landmark", cert.landmark, "Use landmark id 1-6");
  c->add_option("--target", cert.target, "m or m0")->capture_default_str();
  c->add_option("--set", cert.target, "Alias for --target");
  c->add_option("--periods", cert.periods, "Periods of the chain to check directly")->capture_default_str();
  c->add_option("--out", cert.out, "Write the JSON report here");
  c->add_option("--expect", cert.expect, "Exit 1 unless the verdict matches");
  c->add_flag("--verbose", cert.verbose, "Print every polynomial record");
  c->add_option("--threads", cert.threads, "Worker threads (default 1)");

  LandmarkArgs lms;
  auto* l = app.add_subcommand("landmarks", "Run the landmark suite");
  l->add_option("--id", lms.id, "Only this landmark");
  l->add_option("--json", lms.json, "Write the suite report here");
  l->add_option("--threads", lms.threads, "Worker threads (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = echo_command(argc, argv);
  try {
    if (*r) return run_render(render, command);
    if (*at) return run_attractor(attr);
    if (*c) return run_certify(cert, command);
    if (*l) return run_landmarks(lms, command);
  } catch (const Error& e) {
    std::fprintf(stderr, "ifs_lab: %s\n", e.what());
    return is_usage_error(e.kind()) ? kExitUsage : kExitNumeric;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "ifs_lab: %s\n", e.what());
    return kExitNumeric;
  }
  return kExitUsage;
}
