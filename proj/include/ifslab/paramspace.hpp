#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ifslab/numerics.hpp"

namespace ifslab {

/// Which parameter locus a search targets. M allows coefficients {-1,0,+1},
/// M0 only {-1,+1}.
enum class ParamSet { M, M0 };

std::string_view to_string(ParamSet set);
ParamSet parse_param_set(std::string_view text);

/// Result of the depth-limited search for a vanishing series.
///
/// Survival is one-sided evidence: it only says some Taylor prefix of length
/// depth + 1 is still compatible with a root. Escape is definitive.
struct MembershipResult {
  enum class Kind { escaped, survived };
  Kind kind = Kind::escaped;
  /// For escaped: max(1, first level at which every prefix was pruned).
  /// For survived: the requested depth.
  int depth = 0;
  ParamSet set = ParamSet::M;

  bool survived() const { return kind == Kind::survived; }
  bool operator==(const MembershipResult&) const = default;
};

/// Tail bound |lambda|^{k+1} / (1 - |lambda|) plus the rounding guard 1e-15 R.
double prune_bound(Complex lambda, int k);

/// Depth-first search over prefixes c_0 = 1, c_1..c_depth. A prefix f_k is
/// pruned as soon as |f_k(lambda)| exceeds prune_bound(lambda, k).
/// Throws ErrorKind::invalid_lambda unless 0 < |lambda| < 1.
MembershipResult membership(Complex lambda, ParamSet set, int depth);

struct SurvivorList {
  std::vector<std::vector<int>> prefixes;  ///< c_0..c_depth, lexicographic (-1 < 0 < +1)
  bool overflow = false;                   ///< more than `cap` survivors exist
};

SurvivorList survivors(Complex lambda, ParamSet set, int depth, std::size_t cap);

/// Rectangle [x0, x1] x [y0, y1] of the parameter plane.
struct Window {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  bool operator==(const Window&) const = default;
};

Window parse_window(std::string_view text);

/// Row-major escape depths, top row at y1. 0 marks a survivor.
struct EscapeGrid {
  Window window;
  int width = 0;
  int height = 0;
  int depth = 0;
  ParamSet set = ParamSet::M;
  std::vector<std::int32_t> values;

  bool operator==(const EscapeGrid&) const = default;
};

/// Pixel-center parameter for column i, row j.
Complex pixel_center(const Window& window, int width, int height, int i, int j);

/// Escape value of one parameter: 0 for survived, otherwise the escape depth.
/// lambda = 0 and |lambda| >= 1 map to 1.
std::int32_t escape_value(Complex lambda, ParamSet set, int depth);

/// Per-pixel membership at pixel centers, evaluated on up to `threads` OpenMP
/// threads. Output is independent of the thread count.
EscapeGrid escape_grid(const Window& window, int width, int height, ParamSet set, int depth, int threads = 1);

}  // namespace ifslab
