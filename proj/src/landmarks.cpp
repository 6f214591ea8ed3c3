#include "ifslab/landmarks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ifslab/errors.hpp"

namespace ifslab {

Landmark landmark(int id) {
  Landmark lm;
  lm.id = id;
  switch (id) {
    case 1:
      lm.series = RationalTypeSeries::parse("1,-1,-1;1");
      lm.seed = {0.5957439, 0.2544259};
      lm.expected = {true, true, true};
      break;
    case 2:
      lm.series = RationalTypeSeries::parse("1,-1,-1,0;1");
      lm.seed = {0.6219644, 0.1877304};
      lm.expected = {true, true, false};
      break;
    case 3:
      lm.series = RationalTypeSeries::parse("1,-1,-1,0,0;1");
      lm.seed = {0.643703, 0.140749};
      lm.expected = {true, true, false};
      break;
    case 4:
      lm.series = RationalTypeSeries::parse("1,-1,-1,-1;1");
      lm.seed = {0.63601, 0.106924};
      lm.expected = {true, true, true};
      break;
    case 5:
      lm.series = RationalTypeSeries::parse("1;1,1,-1");
      lm.seed = {-0.366, 0.520};
      lm.seed_tolerance = 1e-3;  // only three decimals are published
      lm.expected = {false, true, true};
      break;
    case 6:
      lm.series = RationalTypeSeries::parse("1,-1,0;1");
      lm.seed = {0.57395, 0.368989};
      lm.expected = {false, std::nullopt, false};
      break;
    default:
      throw Error(ErrorKind::unknown_landmark, "landmark ids run from 1 to 6, got " + std::to_string(id));
  }
  return lm;
}

Complex resolve_root(const Landmark& lm) {
  const std::vector<int> num = numerator_polynomial(lm.series);
  return newton_root(num, lm.seed);
}

bool sector_S_contains(Complex lambda) {
  const double r = std::abs(lambda);
  const double t = std::arg(lambda);
  return r > (std::sqrt(5.0) - 1.0) / 2.0 && r < 2.0 / 3.0 && t > 0.0 && t < 5.0 * std::numbers::pi / 32.0;
}

std::vector<ConditionRecord> sector_inequalities(Complex lambda) {
  const double m = std::abs(lambda);
  return {
      greater_record(Condition::sector_a, 0, 1.0 - m, 0.5 * std::abs(1.0 - lambda)),
      greater_record(Condition::sector_b, 0, 1.0 - m * m, std::abs(1.0 - lambda)),
      less_record(Condition::sector_c, 0, m, std::abs(2.0 - lambda)),
      less_record(Condition::sector_d, 0, 2.0 * m, std::abs(3.0 - lambda)),
      less_record(Condition::sector_e, 0, 2.0 * m, std::abs(1.0 + lambda)),
  };
}

std::vector<ConditionRecord> chain_existence_bounds(Complex lambda) {
  const RationalTypeSeries f = landmark(5).series;
  const double residual = std::abs(rational_eval(f, lambda));
  if (!(residual < 1e-8)) throw Error(ErrorKind::not_a_root, "not a root of the period-3 landmark series");
  const double m = std::abs(lambda);
  std::vector<ConditionRecord> out;
  for (int n = 0; n <= 2; ++n) {
    // f_2 = 2 lambda^3 at the root, which is how the last bound is usually written.
    const double lhs = n == 2 ? 4.0 * std::abs(ipow(lambda, 3)) : 2.0 * std::abs(taylor_eval(f, lambda, n));
    out.push_back(greater_record(Condition::existence, n, lhs, std::pow(m, n + 1) / (1.0 - m)));
  }
  return out;
}

LandmarkOutcome evaluate_landmark(int id, int threads) {
  const Landmark lm = landmark(id);
  LandmarkOutcome out;
  out.id = id;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) out.failures.push_back(what);
  };

  out.root = resolve_root(lm);
  out.seed_distance = std::abs(out.root - lm.seed);
  expect(out.seed_distance <= lm.seed_tolerance, "root is far from the published value");

  out.in_sector_S = sector_S_contains(out.root);
  expect(out.in_sector_S == lm.expected.in_sector_S, "sector membership differs");
  if (lm.expected.in_sector_S) {
    out.sector = sector_inequalities(out.root);
    for (const auto& r : out.sector) expect(r.pass, "sector inequality " + std::string(to_string(r.which)) + " fails");
  }
  if (id == 5) {
    out.existence = chain_existence_bounds(out.root);
    for (const auto& r : out.existence) expect(r.pass, "existence bound fails at n=" + std::to_string(r.n));
  }

  CertifyOptions opts;
  opts.threads = threads;
  out.certificate = certify(lm.series, out.root, ParamSet::M, opts);
  out.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& r : out.certificate.conditions) out.min_margin = std::min(out.min_margin, r.margin);

  const bool accessible = out.certificate.verdict == Verdict::accessible_M;
  if (lm.expected.accessible_M.has_value()) {
    expect(accessible == *lm.expected.accessible_M, "verdict is " + std::string(to_string(out.certificate.verdict)));
    expect(out.certificate.corollary == lm.expected.corollary_M0, "corollary flag differs");
    expect(out.certificate.overlap_size == (1 << out.certificate.zero_count), "overlap size is not 2^m");
  } else {
    // Undecided case: the certificate is expected not to go through.
    expect(!accessible, "certificate unexpectedly succeeds");
  }
  if (out.certificate.zero_count == 0) {
    out.m0_verdict = certify(lm.series, out.root, ParamSet::M0, opts).verdict;
    if (lm.expected.corollary_M0) expect(*out.m0_verdict == Verdict::accessible_M0, "M0 certificate fails");
  }

  out.expectations_met = out.failures.empty();
  if (!out.expectations_met) out.status = "FAIL";
  else if (!lm.expected.accessible_M.has_value()) out.status = "unknown/failed-certificate";
  else out.status = "pass";
  return out;
}

}  // namespace ifslab
