#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ifslab/certificate.hpp"
#include "ifslab/series.hpp"

namespace ifslab {

struct LandmarkExpectation {
  bool in_sector_S = false;
  std::optional<bool> accessible_M;  ///< nullopt: left undecided
  bool corollary_M0 = false;
};

/// One of the six sample parameters with a unique vanishing series.
///
/// The period-3 landmark is stored in the orientation -0.366+0.520i; the
/// other common convention differs by z -> -z.
struct Landmark {
  int id = 0;
  RationalTypeSeries series{{1}, {1}};
  Complex seed{};
  double seed_tolerance = 1e-4;  ///< how far the published digits may sit from the root
  LandmarkExpectation expected;
};

/// Throws ErrorKind::unknown_landmark unless 1 <= id <= 6.
Landmark landmark(int id);

/// Root of the numerator polynomial nearest the seed (Newton from the seed).
Complex resolve_root(const Landmark& lm);

/// (sqrt5 - 1)/2 < |z| < 2/3 and 0 < arg z < 5 pi / 32, all strict.
bool sector_S_contains(Complex lambda);

/// The five inequalities (a)-(e) that hold on the sector, as records
/// sector_a..sector_e. Meaningful anywhere; margins say by how much.
std::vector<ConditionRecord> sector_inequalities(Complex lambda);

/// 2|f_n(lambda)| > |lambda|^{n+1} / (1 - |lambda|) for n = 0, 1, 2 on the
/// period-3 landmark series. Throws ErrorKind::not_a_root when
/// |f(lambda)| >= 1e-8.
std::vector<ConditionRecord> chain_existence_bounds(Complex lambda);

/// Everything the landmark suite checks for one id.
struct LandmarkOutcome {
  int id = 0;
  Complex root{};
  double seed_distance = 0.0;
  bool in_sector_S = false;
  std::vector<ConditionRecord> sector;     ///< ids 1-4 only
  std::vector<ConditionRecord> existence;  ///< id 5 only
  CertificateReport certificate;           ///< target M
  std::optional<Verdict> m0_verdict;       ///< only when the series has no zeros
  double min_margin = 0.0;                 ///< over certificate conditions
  bool expectations_met = false;
  std::string status;                 ///< "pass", "FAIL" or "unknown/failed-certificate"
  std::vector<std::string> failures;  ///< unmet expectations
};

LandmarkOutcome evaluate_landmark(int id, int threads = 1);

}  // namespace ifslab
