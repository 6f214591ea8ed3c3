#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifslab/ifs.hpp"
#include "ifslab/numerics.hpp"
#include "ifslab/paramspace.hpp"
#include "ifslab/series.hpp"

namespace ifslab {

/// Inequality families checked by the accessibility certificate.
///
///  i, ii, iii      chain disk exists / consecutive disks meet / disk misses the
///                  ternary instar (doubled polynomial form)
///  iii_prime       same against the binary instar (single polynomial form)
///  w_i, w_ii, w_iii  the relaxed variants over an index subset k_1 < ... < k_m
///  sector_a..e     the five inequalities that hold on the landmark sector
///  existence       2|f_n| > |lambda^{n+1}| / (1 - |lambda|) for the period-3 landmark
enum class Condition {
  i,
  ii,
  iii,
  iii_prime,
  w_i,
  w_ii,
  w_iii,
  sector_a,
  sector_b,
  sector_c,
  sector_d,
  sector_e,
  existence,
};

std::string_view to_string(Condition c);
Condition parse_condition(std::string_view text);

/// One evaluated inequality. `margin` is signed so that a positive value means
/// the inequality holds in the stated direction.
struct ConditionRecord {
  Condition which = Condition::i;
  int n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = false;
  std::vector<int> poly;  ///< P for the polynomial families, empty otherwise
  int partner = -1;       ///< second chain index for w_ii

  bool operator==(const ConditionRecord&) const = default;
};

/// Relative tolerance below which a margin cannot be told apart from equality.
double margin_tolerance(double lhs, double rhs);

/// Record for lhs > rhs.
ConditionRecord greater_record(Condition which, int n, double lhs, double rhs);
/// Record for lhs < rhs.
ConditionRecord less_record(Condition which, int n, double lhs, double rhs);

/// |margin| within margin_tolerance: the sign is not trustworthy.
bool ambiguous(const ConditionRecord& r);

/// Center of the chain disk B_n and its radius; radius <= 0 means the disk
/// does not exist.
struct ChainDisk {
  int n = 0;
  Complex center{};
  double radius = 0.0;

  bool operator==(const ChainDisk&) const = default;
};

/// Self-similarity center -lambda^{-(l+1)} f_l(lambda).
/// Throws ErrorKind::not_a_root when |f(lambda)| >= 1e-8.
Complex zeta(const RationalTypeSeries& f, Complex lambda);

/// Warnings for parameters outside the certificate's hypotheses (real lambda,
/// |lambda| > 2^{-1/2}). Empty when the hypotheses hold.
std::vector<std::string> hypothesis_warnings(const RationalTypeSeries& f, Complex lambda);

/// Node zeta_n of the periodic itinerary of zeta, lambda^{-(l+1)} (f_{l+1+n} - f_l).
Complex chain_node(const RationalTypeSeries& f, Complex lambda, int n);

/// B_n: center -(f_{l+1+n} + f_l) / lambda^{l+1},
/// radius 2|f_{l+1+n}| / |lambda^{l+1}| - |lambda|^{n+1} / (1 - |lambda|).
ChainDisk chain_disk(const RationalTypeSeries& f, Complex lambda, int n);

ConditionRecord condition_i(const RationalTypeSeries& f, Complex lambda, int n);
ConditionRecord condition_ii(const RationalTypeSeries& f, Complex lambda, int n);

enum class Variant { doubled, single };

/// Integer coefficients of Q solving  s f_l(z) + z^{l+1} Q(z) = s f_{l+1+n}(z),
/// s = 2 (doubled) or 1 (single), found by exact coefficient matching.
std::vector<int> solve_q(const RationalTypeSeries& f, int n, Variant variant);

/// One record per polynomial P of degree <= n (coefficients in {-2..2} for
/// doubled, {-1,0,1} for single), P != Q, ordered lexicographically by
/// (P_0, ..., P_n). Throws ErrorKind::enumeration_too_large when n > 12.
std::vector<ConditionRecord> condition_iii(const RationalTypeSeries& f, Complex lambda, int n,
                                           Variant variant, int threads = 1);

/// Relaxed conditions over 0 <= k_1 < ... < k_m <= p - 1, 2 <= m <= p.
/// The pair for j = m is (k_m, k_1 + p): the next disk of the periodic chain.
/// Throws ErrorKind::bad_indices.
std::vector<ConditionRecord> condition_weakened(const RationalTypeSeries& f, Complex lambda,
                                                std::span<const int> indices);

/// Direct geometric checks of one chain index.
struct LevelCheck {
  int n = 0;
  double exists_margin = 0.0;    ///< r_n
  double connect_margin = 0.0;   ///< r_n + r_{n+1} - |omega_n - omega_{n+1}|
  double disjoint_margin = 0.0;  ///< min over other level-n nodes of the disk gap
  Complex nearest_node{};
  double contain_margin = 0.0;   ///< r_{n-1} - |omega_n - omega_{n-1}| - r_n (n >= 1)
  bool exists = false;
  bool connected = false;
  bool disjoint = false;
  bool contained_in_previous = false;

  bool operator==(const LevelCheck&) const = default;
};

struct ChainGeometry {
  Alphabet alphabet = Alphabet::ternary;
  int periods = 0;
  std::vector<ChainDisk> chain;    ///< B_0 .. B_{N}, N = periods * p
  std::vector<LevelCheck> levels;  ///< n = 0 .. N - 1
  bool exists = false;
  bool connected = false;
  bool disjoint = false;

  bool operator==(const ChainGeometry&) const = default;
};

/// Checks B_0 .. B_{N-1}, N = periods * p, against the instar of the given
/// alphabet. Throws ErrorKind::level_too_deep when N > 14.
ChainGeometry verify_chain(const RationalTypeSeries& f, Complex lambda, int periods,
                           Alphabet alphabet = Alphabet::ternary, int threads = 1);

/// |lambda^p (omega_n - zeta) - (omega_{n+p} - zeta)|.
double periodicity_residual(const RationalTypeSeries& f, Complex lambda, int n);

/// lambda + lambda^{pn} (lambda^{l+1} / f'(lambda)) (zeta - b).
///
/// Near lambda, M looks like lambda + lambda^{pn} (lambda^{l+1} / f') (zeta - A~),
/// so the probe is expected outside M for large n when b is not in A~ (for
/// instance b inside a chain disk), and inside M when b is in A~.
/// Throws ErrorKind::derivative_vanished when |f'(lambda)| < 1e-300.
Complex parameter_probe(const RationalTypeSeries& f, Complex lambda, Complex b, int n);

enum class Verdict { accessible_M, accessible_M0, inconclusive, failed };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct ProbeEvidence {
  int n = 0;
  Complex parameter{};
  MembershipResult membership;

  bool operator==(const ProbeEvidence&) const = default;
};

struct CertificateReport {
  Complex lambda{};
  RationalTypeSeries series{{1}, {1}};
  ParamSet target = ParamSet::M;
  Complex zeta{};
  double root_residual = 0.0;  ///< |f(lambda)|
  Complex derivative{};
  int zero_count = 0;
  int overlap_size = 0;  ///< 2^zero_count, 0 when the overlap is infinite
  std::vector<std::string> warnings;
  std::vector<ConditionRecord> conditions;
  ChainGeometry geometric;
  std::vector<double> periodicity_residuals;  ///< n = 0 .. 2p - 1
  std::vector<ProbeEvidence> probes;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  bool corollary = false;  ///< also a boundary point of M0 (target M, no zero coefficients)

  bool operator==(const CertificateReport&) const = default;
};

struct CertifyOptions {
  int periods = 2;
  std::vector<int> probe_indices{1, 2, 3, 4};
  int probe_depth = 40;
  int threads = 1;
};

/// Runs every condition for n = 0..p-1, the geometric chain check, the
/// periodicity residuals and the parameter probes, and decides a verdict.
/// Throws ErrorKind::not_a_root when |f(lambda)| >= 1e-8.
CertificateReport certify(const RationalTypeSeries& f, Complex lambda, ParamSet target,
                          const CertifyOptions& options = {});

}  // namespace ifslab
