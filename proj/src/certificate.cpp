#include "ifslab/certificate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ifslab/errors.hpp"
#include "parallel.hpp"

namespace ifslab {

namespace {

constexpr std::array<std::pair<Condition, std::string_view>, 13> kConditionNames{{
    {Condition::i, "i"},
    {Condition::ii, "ii"},
    {Condition::iii, "iii"},
    {Condition::iii_prime, "iii'"},
    {Condition::w_i, "w-i"},
    {Condition::w_ii, "w-ii"},
    {Condition::w_iii, "w-iii"},
    {Condition::sector_a, "sector-a"},
    {Condition::sector_b, "sector-b"},
    {Condition::sector_c, "sector-c"},
    {Condition::sector_d, "sector-d"},
    {Condition::sector_e, "sector-e"},
    {Condition::existence, "existence"},
}};

void require_root(const RationalTypeSeries& f, Complex lambda) {
  const double residual = std::abs(rational_eval(f, lambda));
  if (!(residual < 1e-8)) {
    std::ostringstream msg;
    msg << "|f(lambda)| = " << residual << " is not below 1e-8";
    throw Error(ErrorKind::not_a_root, msg.str());
  }
}

void require_chain_index(const RationalTypeSeries& f, int n) {
  if (n < 0 || n >= f.period()) {
    throw Error(ErrorKind::invalid_argument, "chain index n must satisfy 0 <= n <= p - 1");
  }
}

double tail_over(Complex lambda, int power) {
  const double m = std::abs(lambda);
  return std::pow(m, power) / (1.0 - m);
}

}  // namespace

std::string_view to_string(Condition c) {
  for (const auto& [cond, name] : kConditionNames) {
    if (cond == c) return name;
  }
  return "?";
}

Condition parse_condition(std::string_view text) {
  for (const auto& [cond, name] : kConditionNames) {
    if (name == text) return cond;
  }
  throw Error(ErrorKind::parse_error, "unknown condition '" + std::string(text) + "'");
}

double margin_tolerance(double lhs, double rhs) { return 1e-12 * (std::abs(lhs) + std::abs(rhs)); }

ConditionRecord greater_record(Condition which, int n, double lhs, double rhs) {
  ConditionRecord r{which, n, lhs, rhs, lhs - rhs, false, {}, -1};
  r.pass = r.margin > margin_tolerance(lhs, rhs);
  return r;
}

ConditionRecord less_record(Condition which, int n, double lhs, double rhs) {
  ConditionRecord r{which, n, lhs, rhs, rhs - lhs, false, {}, -1};
  r.pass = r.margin > margin_tolerance(lhs, rhs);
  return r;
}

bool ambiguous(const ConditionRecord& r) { return std::abs(r.margin) <= margin_tolerance(r.lhs, r.rhs); }

Complex zeta(const RationalTypeSeries& f, Complex lambda) {
  require_root(f, lambda);
  const int l = f.preperiod();
  return -taylor_eval(f, lambda, l) / ipow(lambda, l + 1);
}

std::vector<std::string> hypothesis_warnings(const RationalTypeSeries& f, Complex lambda) {
  std::vector<std::string> out;
  if (std::abs(lambda.imag()) <= 1e-12 * std::abs(lambda)) out.emplace_back("lambda is real");
  if (std::abs(lambda) > 1.0 / std::numbers::sqrt2) out.emplace_back("|lambda| exceeds 2^(-1/2)");
  if (f.has_zeros_in_period()) out.emplace_back("zero coefficient in the periodic block");
  return out;
}

Complex chain_node(const RationalTypeSeries& f, Complex lambda, int n) {
  const int l = f.preperiod();
  return (taylor_eval(f, lambda, l + 1 + n) - taylor_eval(f, lambda, l)) / ipow(lambda, l + 1);
}

ChainDisk chain_disk(const RationalTypeSeries& f, Complex lambda, int n) {
  require_root(f, lambda);
  if (n < 0) throw Error(ErrorKind::invalid_argument, "chain index must be nonnegative");
  const int l = f.preperiod();
  const Complex lead = ipow(lambda, l + 1);
  const Complex fn = taylor_eval(f, lambda, l + 1 + n);
  const Complex fl = taylor_eval(f, lambda, l);
  ChainDisk d;
  d.n = n;
  d.center = -(fn + fl) / lead;
  d.radius = 2.0 * std::abs(fn) / std::abs(lead) - tail_over(lambda, n + 1);
  return d;
}

ConditionRecord condition_i(const RationalTypeSeries& f, Complex lambda, int n) {
  require_chain_index(f, n);
  const int l = f.preperiod();
  const double lhs = std::abs(taylor_eval(f, lambda, l + 1 + n));
  const double rhs = 0.5 * tail_over(lambda, l + 2 + n);
  return greater_record(Condition::i, n, lhs, rhs);
}

ConditionRecord condition_ii(const RationalTypeSeries& f, Complex lambda, int n) {
  require_chain_index(f, n);
  const int l = f.preperiod();
  const double lhs = std::abs(taylor_eval(f, lambda, l + 1 + n)) + std::abs(taylor_eval(f, lambda, l + 2 + n));
  const double rhs = tail_over(lambda, l + 2 + n);
  return greater_record(Condition::ii, n, lhs, rhs);
}

std::vector<int> solve_q(const RationalTypeSeries& f, int n, Variant variant) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "degree must be nonnegative");
  const int l = f.preperiod();
  const int scale = variant == Variant::doubled ? 2 : 1;
  // s f_{l+1+n} - s f_l, coefficient by coefficient.
  std::vector<int> diff(l + n + 2, 0);
  for (int j = 0; j <= l + 1 + n; ++j) diff[j] += scale * f.coeff_at(j);
  for (int j = 0; j <= l; ++j) diff[j] -= scale * f.coeff_at(j);
  for (int j = 0; j <= l; ++j) {
    if (diff[j] != 0) throw Error(ErrorKind::invalid_argument, "Q is not a polynomial");
  }
  return {diff.begin() + l + 1, diff.end()};
}

std::vector<ConditionRecord> condition_iii(const RationalTypeSeries& f, Complex lambda, int n, Variant variant,
                                           int threads) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "degree must be nonnegative");
  if (n > 12) throw Error(ErrorKind::enumeration_too_large, "polynomial enumeration limited to n <= 12");
  const int l = f.preperiod();
  const int lo = variant == Variant::doubled ? -2 : -1;
  const int base = variant == Variant::doubled ? 5 : 3;
  const double scale = variant == Variant::doubled ? 2.0 : 1.0;
  const Condition which = variant == Variant::doubled ? Condition::iii : Condition::iii_prime;
  const std::vector<int> q = solve_q(f, n, variant);

  const double lhs = scale * std::abs(taylor_eval(f, lambda, l + 1 + n));
  const Complex anchor = scale * taylor_eval(f, lambda, l);
  const Complex lead = ipow(lambda, l + 1);

  std::int64_t total = 1;
  for (int j = 0; j <= n; ++j) total *= base;
  std::vector<ConditionRecord> all(static_cast<std::size_t>(total));
  std::int64_t q_index = 0;
  for (int j = 0; j <= n; ++j) q_index = q_index * base + (q[j] - lo);

#pragma omp parallel for num_threads(detail::resolve_threads(threads)) schedule(static)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::vector<int> poly(n + 1);
    std::int64_t rem = idx;
    for (int j = n; j >= 0; --j) {
      poly[j] = static_cast<int>(rem % base) + lo;
      rem /= base;
    }
    const Complex value = anchor + lead * poly_eval(poly, lambda);
    ConditionRecord r = less_record(which, n, lhs, std::abs(value));
    r.poly = std::move(poly);
    all[idx] = std::move(r);
  }
  all.erase(all.begin() + q_index);
  return all;
}

std::vector<ConditionRecord> condition_weakened(const RationalTypeSeries& f, Complex lambda,
                                                std::span<const int> indices) {
  const int p = f.period();
  const int m = static_cast<int>(indices.size());
  if (m < 2 || m > p) throw Error(ErrorKind::bad_indices, "need 2 <= m <= p indices");
  for (int j = 0; j < m; ++j) {
    if (indices[j] < 0 || indices[j] > p - 1) throw Error(ErrorKind::bad_indices, "indices must lie in [0, p-1]");
    if (j > 0 && indices[j] <= indices[j - 1]) throw Error(ErrorKind::bad_indices, "indices must increase strictly");
  }
  const int l = f.preperiod();
  auto taylor = [&](int k) { return taylor_eval(f, lambda, l + 1 + k); };

  std::vector<ConditionRecord> out;
  for (int j = 0; j < m; ++j) {
    const int k = indices[j];
    const int next = j + 1 < m ? indices[j + 1] : indices[0] + p;
    const Complex fk = taylor(k);
    const Complex fnext = taylor(next);

    out.push_back(greater_record(Condition::w_i, k, std::abs(fk), 0.5 * tail_over(lambda, l + 2 + k)));

    ConditionRecord two = greater_record(Condition::w_ii, k, std::abs(fk) + std::abs(fnext) - 0.5 * std::abs(fk - fnext),
                                         0.5 * (tail_over(lambda, l + 2 + k) + tail_over(lambda, l + 2 + next)));
    two.partner = next;
    out.push_back(std::move(two));

    for (ConditionRecord r : condition_iii(f, lambda, k, Variant::single)) {
      r.which = Condition::w_iii;
      out.push_back(std::move(r));
    }
  }
  return out;
}

ChainGeometry verify_chain(const RationalTypeSeries& f, Complex lambda, int periods, Alphabet alphabet,
                           int threads) {
  if (periods < 1) throw Error(ErrorKind::invalid_argument, "periods must be at least 1");
  const int total = periods * f.period();
  if (total > 14) throw Error(ErrorKind::level_too_deep, "periods * p must not exceed 14");
  require_root(f, lambda);

  ChainGeometry g;
  g.alphabet = alphabet;
  g.periods = periods;
  for (int n = 0; n <= total; ++n) g.chain.push_back(chain_disk(f, lambda, n));

  g.exists = g.connected = g.disjoint = true;
  for (int n = 0; n < total; ++n) {
    const ChainDisk& b = g.chain[n];
    const ChainDisk& next = g.chain[n + 1];
    const double rho = nodal_radius(lambda, n + 1);
    LevelCheck c;
    c.n = n;

    c.exists_margin = b.radius;
    c.exists = b.radius > margin_tolerance(b.radius + rho, rho);

    const double step = std::abs(b.center - next.center);
    c.connect_margin = b.radius + next.radius - step;
    c.connected = c.connect_margin > margin_tolerance(b.radius + next.radius, step);

    const Complex tangent = chain_node(f, lambda, n);
    const InstarGap gap = instar_gap(lambda, n, alphabet, Disk{b.center, b.radius}, tangent,
                                     1e-10 * (1.0 + std::abs(tangent)), threads);
    c.disjoint_margin = gap.gap;
    c.nearest_node = gap.nearest;
    c.disjoint = gap.gap > margin_tolerance(b.radius + rho, std::abs(b.center - gap.nearest));

    if (n > 0) {
      const ChainDisk& prev = g.chain[n - 1];
      const double back = std::abs(b.center - prev.center);
      c.contain_margin = prev.radius - back - b.radius;
      c.contained_in_previous = c.contain_margin >= -margin_tolerance(prev.radius, back + b.radius);
    }

    g.exists = g.exists && c.exists;
    g.connected = g.connected && c.connected;
    g.disjoint = g.disjoint && c.disjoint;
    g.levels.push_back(c);
  }
  return g;
}

double periodicity_residual(const RationalTypeSeries& f, Complex lambda, int n) {
  const Complex z = zeta(f, lambda);
  const Complex here = chain_disk(f, lambda, n).center - z;
  const Complex later = chain_disk(f, lambda, n + f.period()).center - z;
  return std::abs(ipow(lambda, f.period()) * here - later);
}

Complex parameter_probe(const RationalTypeSeries& f, Complex lambda, Complex b, int n) {
  const Complex slope = derivative_eval(f, lambda);
  if (std::abs(slope) < 1e-300) throw Error(ErrorKind::derivative_vanished, "f'(lambda) vanishes");
  const int l = f.preperiod();
  const Complex z = zeta(f, lambda);
  // First order: g(mu) = 0 for a series agreeing with f through index l + pn
  // forces mu - lambda ~ lambda^{pn} (lambda^{l+1} / f') (zeta - tail value).
  return lambda + ipow(lambda, f.period() * n) * (ipow(lambda, l + 1) / slope) * (z - b);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::accessible_M: return "accessible_M";
    case Verdict::accessible_M0: return "accessible_M0";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::failed: return "failed";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::accessible_M, Verdict::accessible_M0, Verdict::inconclusive, Verdict::failed}) {
    if (to_string(v) == text) return v;
  }
  throw Error(ErrorKind::parse_error, "unknown verdict '" + std::string(text) + "'");
}

CertificateReport certify(const RationalTypeSeries& f, Complex lambda, ParamSet target,
                          const CertifyOptions& options) {
  require_root(f, lambda);
  const int p = f.period();
  const bool for_m0 = target == ParamSet::M0;

  CertificateReport rep;
  rep.lambda = lambda;
  rep.series = f;
  rep.target = target;
  rep.zeta = zeta(f, lambda);
  rep.root_residual = std::abs(rational_eval(f, lambda));
  rep.derivative = derivative_eval(f, lambda);
  rep.zero_count = static_cast<int>(f.zero_positions().size());
  rep.overlap_size = f.has_zeros_in_period() ? 0 : (1 << rep.zero_count);
  rep.warnings = hypothesis_warnings(f, lambda);

  for (int n = 0; n < p; ++n) {
    rep.conditions.push_back(condition_i(f, lambda, n));
    rep.conditions.push_back(condition_ii(f, lambda, n));
    auto third = condition_iii(f, lambda, n, for_m0 ? Variant::single : Variant::doubled, options.threads);
    rep.conditions.insert(rep.conditions.end(), third.begin(), third.end());
  }

  rep.geometric = verify_chain(f, lambda, options.periods, for_m0 ? Alphabet::binary : Alphabet::ternary,
                               options.threads);
  for (int n = 0; n < 2 * p; ++n) rep.periodicity_residuals.push_back(periodicity_residual(f, lambda, n));

  const Complex b = rep.geometric.chain.front().center;
  for (int n : options.probe_indices) {
    ProbeEvidence e;
    e.n = n;
    e.parameter = parameter_probe(f, lambda, b, n);
    const double r = std::abs(e.parameter);
    if (r > 0.0 && r < 1.0) e.membership = membership(e.parameter, ParamSet::M, options.probe_depth);
    else e.membership = MembershipResult{MembershipResult::Kind::escaped, 1, ParamSet::M};
    rep.probes.push_back(e);
  }

  // Decide. Hard failures first, then sign ambiguity, then the geometric cross-check.
  std::vector<std::string> failures;
  if (f.has_zeros_in_period()) failures.emplace_back("zero coefficient in the periodic block");
  if (for_m0 && rep.zero_count > 0) failures.emplace_back("series has zero coefficients");
  bool unsure = false;
  for (const ConditionRecord& r : rep.conditions) {
    if (r.pass) continue;
    if (ambiguous(r)) {
      unsure = true;
      continue;
    }
    std::ostringstream msg;
    msg << "condition " << to_string(r.which) << " fails at n=" << r.n << " (margin " << r.margin << ")";
    failures.push_back(msg.str());
  }

  if (!failures.empty()) {
    rep.verdict = Verdict::failed;
    std::ostringstream msg;
    for (std::size_t i = 0; i < failures.size() && i < 4; ++i) msg << (i ? "; " : "") << failures[i];
    if (failures.size() > 4) msg << "; and " << failures.size() - 4 << " more";
    if (!rep.geometric.connected) msg << "; chain disconnected";
    if (!rep.geometric.disjoint) msg << "; chain meets the instar";
    rep.reason = msg.str();
  } else if (unsure) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "a condition margin is within rounding of zero";
  } else if (!(rep.geometric.exists && rep.geometric.connected && rep.geometric.disjoint)) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "conditions hold but the direct chain check disagrees";
  } else {
    rep.verdict = for_m0 ? Verdict::accessible_M0 : Verdict::accessible_M;
    rep.reason = "all conditions hold with positive margin";
  }
  rep.corollary = !for_m0 && rep.zero_count == 0 && rep.verdict == Verdict::accessible_M;
  return rep;
}

}  // namespace ifslab
