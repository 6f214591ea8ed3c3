// Acceptance checks. One line per criterion; exit status is the number of
// failed criteria (capped at 1 for ctest).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ifslab/certificate.hpp"
#include "ifslab/ifs.hpp"
#include "ifslab/landmarks.hpp"
#include "ifslab/paramspace.hpp"

using namespace ifslab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Detail {
 public:
  template <typename... A>
  void add(const char* fmt, A... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    if (!text_.empty()) text_ += "; ";
    text_ += buf;
  }
  std::string str() const { return text_; }

 private:
  std::string text_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome root_recovery() {
  const Complex paper[] = {{0.5957439, 0.2544259}, {0.6219644, 0.1877304}, {0.643703, 0.140749},
                           {0.63601, 0.106924},    {-0.366, 0.520},         {0.57395, 0.368989}};
  const double tol[] = {1e-4, 1e-4, 1e-4, 1e-4, 1e-3, 1e-4};
  Outcome o;
  Detail d;
  for (int id = 1; id <= 6; ++id) {
    const Complex r = resolve_root(landmark(id));
    const double err = std::abs(r - paper[id - 1]);
    o.pass = o.pass && err <= tol[id - 1];
    d.add("l%d err %.1e", id, err);
  }
  o.detail = d.str();
  return o;
}

Outcome sector_reproduction() {
  Outcome o;
  Detail d;
  for (int id = 1; id <= 4; ++id) {
    const Landmark lm = landmark(id);
    const Complex r = resolve_root(lm);
    bool ok = sector_S_contains(r);
    double worst = 1e300;
    for (const auto& rec : sector_inequalities(r)) {
      ok = ok && rec.pass;
      worst = std::min(worst, rec.margin);
    }
    const CertificateReport rep = certify(lm.series, r, ParamSet::M);
    double min_cond = 1e300;
    for (const auto& rec : rep.conditions) min_cond = std::min(min_cond, rec.margin);
    ok = ok && rep.verdict == Verdict::accessible_M && min_cond > 1e-3;
    o.pass = o.pass && ok;
    d.add("l%d sector-min %.3f cond-min %.3f %s", id, worst, min_cond, std::string(to_string(rep.verdict)).c_str());
  }
  o.detail = d.str();
  return o;
}

Outcome corollary_flags() {
  const bool flag[] = {true, false, false, true, true};
  const int overlap[] = {1, 2, 4, 1, 1};
  Outcome o;
  Detail d;
  for (int id = 1; id <= 5; ++id) {
    const Landmark lm = landmark(id);
    const CertificateReport rep = certify(lm.series, resolve_root(lm), ParamSet::M);
    const auto ov = overlap_set(lm.series, rep.lambda);
    o.pass = o.pass && rep.corollary == flag[id - 1] && rep.overlap_size == overlap[id - 1] &&
             static_cast<int>(ov.points.size()) == overlap[id - 1];
    d.add("l%d flag=%d |O|=%zu", id, rep.corollary ? 1 : 0, ov.points.size());
  }
  o.detail = d.str();
  return o;
}

Outcome period_three_chain() {
  const Landmark lm = landmark(5);
  const Complex l = resolve_root(lm);
  Outcome o;
  Detail d;
  double strict_min = 1e300;
  for (const auto& r : chain_existence_bounds(l)) {
    o.pass = o.pass && r.pass;
    strict_min = std::min(strict_min, r.margin);
  }
  const ChainGeometry g = verify_chain(lm.series, l, 2);
  o.pass = o.pass && g.exists && g.connected && g.disjoint;
  for (const auto& lv : g.levels) {
    strict_min = std::min({strict_min, lv.exists_margin, lv.connect_margin, lv.disjoint_margin});
  }
  // B_0 meets B_1 and B_2 meets B_3.
  const double meet01 = g.levels[0].connect_margin;
  const double meet23 = g.levels[2].connect_margin;
  // B_2 in B_1: the step of the argument is r_1 > 2 r_2; the disks themselves are
  // internally tangent, r_1 - |omega_1 - omega_2| - r_2 = 0 identically, so
  // containment of the open disks holds with no slack to spare.
  const ChainDisk& b1 = g.chain[1];
  const ChainDisk& b2 = g.chain[2];
  const double step = b1.radius - 2.0 * b2.radius;
  const double tangency = g.levels[2].contain_margin;
  strict_min = std::min(strict_min, step);
  o.pass = o.pass && g.levels[2].contained_in_previous && meet01 > 0 && meet23 > 0 && strict_min > 1e-4;
  d.add("exists/connected/disjoint %d/%d/%d", g.exists, g.connected, g.disjoint);
  d.add("B0nB1 %.4f B2nB3 %.4f", meet01, meet23);
  d.add("r1-2r2 %.4f, r1-|w1-w2|-r2 %.1e (tangent)", step, tangency);
  d.add("min strict margin %.4f", strict_min);
  o.detail = d.str();
  return o;
}

Outcome negative_control() {
  const Landmark lm = landmark(6);
  const Complex l = resolve_root(lm);
  const ChainGeometry g = verify_chain(lm.series, l, 2);
  Outcome o;
  Detail d;
  double rmin = 1e300;
  for (const auto& c : g.chain) rmin = std::min(rmin, c.radius);
  o.pass = rmin > 0 && (!g.connected || !g.disjoint);
  std::string levels;
  for (const auto& lv : g.levels) levels += std::string(lv.connected ? "c" : "-") + (lv.disjoint ? "d" : "x") + " ";
  d.add("min r_n %.4f connected=%d disjoint=%d per-level [%s]", rmin, g.connected, g.disjoint, levels.c_str());
  o.detail = d.str();
  return o;
}

Outcome periodicity() {
  Outcome o;
  Detail d;
  for (int id = 1; id <= 5; ++id) {
    const Landmark lm = landmark(id);
    const Complex l = resolve_root(lm);
    const double tol = 1e-10 * (1.0 + std::abs(zeta(lm.series, l)));
    double worst = 0.0;
    for (int n = 0; n < 2 * lm.series.period(); ++n) worst = std::max(worst, periodicity_residual(lm.series, l, n));
    o.pass = o.pass && worst <= tol;
    d.add("l%d %.1e", id, worst);
  }
  o.detail = d.str();
  return o;
}

Outcome overlap_similarity() {
  Outcome o;
  Detail d;
  double worst = 0.0;
  const Landmark l5 = landmark(5);
  const Complex r5 = resolve_root(l5);
  const std::vector<int> none;
  const Word a5 = overlap_itinerary(l5.series, none, 24);
  for (int k : {1, 2}) {
    for (int n = 0; n < 3; ++n) {
      const SelfSimResidual r = check_overlap_selfsim(l5.series, r5, Complex(0.0, 0.0), a5, n, k);
      worst = std::max({worst, r.center, r.radius});
    }
  }
  d.add("l5 %.1e", worst);
  o.pass = worst <= 1e-10;
  const Landmark l2 = landmark(2);
  const Complex r2 = resolve_root(l2);
  double worst2 = 0.0;
  for (int s : {-1, 1}) {
    const std::vector<int> sign{s};
    const Complex xi = overlap_point(l2.series, sign, r2);
    const Word a = overlap_itinerary(l2.series, sign, 24);
    for (int k : {1, 2}) {
      for (int n = 0; n < 3; ++n) {
        const SelfSimResidual r = check_overlap_selfsim(l2.series, r2, xi, a, n, k);
        worst2 = std::max({worst2, r.center, r.radius});
      }
    }
  }
  d.add("l2 (xi=+-l^3) %.1e", worst2);
  o.pass = o.pass && worst2 <= 1e-10;
  o.detail = d.str();
  return o;
}

Outcome rectangle() {
  const Complex l(0.0, 1.0 / std::numbers::sqrt2);
  const PointSet s = attractor_sample(l, 16, Alphabet::binary, 0);
  double re = 0.0, im = 0.0;
  for (const Complex& z : s) {
    re = std::max(re, std::abs(z.real()));
    im = std::max(im, std::abs(z.imag()));
  }
  Outcome o;
  o.pass = re >= 2.0 - 0.02 && re <= 2.0 && im >= std::numbers::sqrt2 - 0.02 && im <= std::numbers::sqrt2;
  Detail d;
  d.add("max|re| %.6f max|im| %.6f over %zu points", re, im, s.size());
  o.detail = d.str();
  return o;
}

Outcome real_spike() {
  Outcome o;
  Detail d;
  for (double x : {0.45, 0.49, 0.51, 0.6}) {
    const MembershipResult m = membership(Complex(x, 0.0), ParamSet::M, 40);
    o.pass = o.pass && m.survived() == (x > 0.5);
    d.add("%.2f %s@%d", x, m.survived() ? "survived" : "escaped", m.depth);
  }
  o.detail = d.str();
  return o;
}

bool exhaustive_survives(Complex lambda, ParamSet set, int depth) {
  const double m = std::abs(lambda);
  const double bound = std::pow(m, depth + 1) / (1.0 - m) + 1e-15 / (1.0 - m);
  const std::vector<int> digits = set == ParamSet::M ? std::vector<int>{-1, 0, 1} : std::vector<int>{-1, 1};
  std::vector<Complex> level{Complex(1.0, 0.0)};
  Complex pw(1.0, 0.0);
  for (int k = 1; k <= depth; ++k) {
    pw *= lambda;
    std::vector<Complex> next;
    next.reserve(level.size() * digits.size());
    for (const Complex& v : level)
      for (int c : digits) next.push_back(v + static_cast<double>(c) * pw);
    level.swap(next);
  }
  for (const Complex& v : level)
    if (std::abs(v) <= bound) return true;
  return false;
}

Outcome pruning_oracle(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.3, 0.7), angle(-std::numbers::pi, std::numbers::pi);
  Outcome o;
  int agree = 0, survived_m = 0, survived_m0 = 0;
  bool nested = true;
  for (int trial = 0; trial < 25; ++trial) {
    const Complex l = std::polar(radius(rng), angle(rng));
    const bool m = membership(l, ParamSet::M, 10).survived();
    const bool m0 = membership(l, ParamSet::M0, 10).survived();
    const bool ok = m == exhaustive_survives(l, ParamSet::M, 10) && m0 == exhaustive_survives(l, ParamSet::M0, 10);
    agree += ok;
    survived_m += m;
    survived_m0 += m0;
    nested = nested && (!m0 || m);
  }
  o.pass = agree == 25 && nested;
  Detail d;
  d.add("%d/25 agree, survivors M %d M0 %d, nesting %s", agree, survived_m, survived_m0, nested ? "holds" : "broken");
  o.detail = d.str();
  return o;
}

Outcome algebra_geometry() {
  Outcome o;
  Detail d;
  for (int id = 1; id <= 6; ++id) {
    const Landmark lm = landmark(id);
    const Complex l = resolve_root(lm);
    const ChainGeometry g = verify_chain(lm.series, l, 1);
    std::string row;
    for (int n = 0; n < lm.series.period(); ++n) {
      bool all = true;
      for (const auto& r : condition_iii(lm.series, l, n, Variant::doubled)) all = all && r.pass;
      const bool geo = g.levels[n].disjoint;
      o.pass = o.pass && all == geo;
      row += all == geo ? (all ? "T" : "F") : "!";
    }
    d.add("l%d %s", id, row.c_str());
  }
  o.detail = d.str();
  return o;
}

int run_tool(const std::string& args) {
  const std::string cmd = "'" + std::string(IFS_LAB_BIN) + "' " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome render_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("ifs_lab_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string base = "render --window -1,-1,1,1 --px 256,256 --depth 25 --set m";
  const auto t1 = std::chrono::steady_clock::now();
  const int s1 = run_tool(base + " --threads 1 --out '" + (dir / "t1.ppm").string() + "'");
  const double d1 = seconds_since(t1);
  const auto t8 = std::chrono::steady_clock::now();
  const int s8 = run_tool(base + " --threads 8 --out '" + (dir / "t8.ppm").string() + "'");
  const double d8 = seconds_since(t8);
  const std::string a = slurp(dir / "t1.ppm"), b = slurp(dir / "t8.ppm");
  fs::remove_all(dir);
  Outcome o;
  o.pass = s1 == 0 && s8 == 0 && !a.empty() && a == b && d1 < 60.0 && d8 < 60.0;
  Detail d;
  d.add("%zu bytes, identical=%d, 1 thread %.2f s, 8 threads %.2f s", a.size(), a == b ? 1 : 0, d1, d8);
  o.detail = d.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240607;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--seed-rng=", 0) == 0) seed = std::strtoull(argv[i] + 11, nullptr, 10);
    else if (arg == "--seed-rng" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
  }

  struct Criterion {
    int number;
    const char* name;
    double budget;  // seconds, 0 = none stated
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "root recovery", 1.0, root_recovery},
      {2, "sector landmarks accessible", 1.0, sector_reproduction},
      {3, "corollary flags and overlap sizes", 0.0, corollary_flags},
      {4, "period-3 chain", 5.0, period_three_chain},
      {5, "lambda_6 negative control", 0.0, negative_control},
      {6, "periodicity identity", 0.0, periodicity},
      {7, "overlap self-similarity", 0.0, overlap_similarity},
      {8, "rectangle attractor", 2.0, rectangle},
      {9, "real spike at 1/2", 1.0, real_spike},
      {10, "pruning soundness", 30.0, [seed] { return pruning_oracle(seed); }},
      {11, "algebra vs geometry", 0.0, algebra_geometry},
      {12, "render determinism", 0.0, render_determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("threw: ") + e.what()};
    }
    const double t = seconds_since(t0);
    const bool in_time = c.budget <= 0.0 || t < c.budget;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s %2d %-34s %7.3f s%s  %s\n", pass ? "PASS" : "FAIL", c.number, c.name, t,
                in_time ? "" : " (over budget)", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
