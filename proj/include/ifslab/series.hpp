#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ifslab/numerics.hpp"

namespace ifslab {

/// Normalized power series with coefficients in {-1, 0, +1}, c_0 = +1, whose
/// coefficient sequence is pre-periodic:
///
///   f(z) = sum_{j<=l} c_j z^j + (c_{l+1} z^{l+1} + ... + c_{l+p} z^{l+p}) / (1 - z^p)
///
/// The stored (l, p) pair is always the minimal one: the periodic block is
/// primitive and the preperiod is rolled back while c_l == c_{l+p}.
class RationalTypeSeries {
 public:
  /// `head` holds c_0..c_l and `block` holds c_{l+1}..c_{l+p}; the pair is
  /// reduced to minimal form. Throws ErrorKind::invalid_series on bad input.
  RationalTypeSeries(std::vector<int> head, std::vector<int> block);

  /// Parses "c0,...,cl;c(l+1),...,c(l+p)" (ASCII digits and hyphen-minus).
  static RationalTypeSeries parse(std::string_view text);

  int preperiod() const noexcept { return preperiod_; }
  int period() const noexcept { return period_; }

  /// c_0 .. c_{l+p}.
  const std::vector<int>& coefficients() const noexcept { return coeffs_; }
  std::vector<int> head() const;
  std::vector<int> block() const;

  /// c_j for any j >= 0, following the periodic tail.
  int coeff_at(int j) const;

  /// Indices j with c_j = 0 (all of them lie in the head or the first block).
  std::vector<int> zero_positions() const;
  bool has_zeros_in_period() const;

  std::string to_string() const;

  bool operator==(const RationalTypeSeries&) const = default;

 private:
  int preperiod_ = 0;
  int period_ = 1;
  std::vector<int> coeffs_;
};

/// Taylor polynomial f_k(lambda) = sum_{j<=k} c_j lambda^j.
Complex taylor_eval(const RationalTypeSeries& f, Complex lambda, int k);

/// f(lambda) through the closed form. Throws ErrorKind::pole_at_unity when
/// |1 - lambda^p| < 1e-14.
Complex rational_eval(const RationalTypeSeries& f, Complex lambda);

/// f'(lambda) by differentiating the closed form.
Complex derivative_eval(const RationalTypeSeries& f, Complex lambda);

/// Integer coefficients of (1 - z^p) f(z), degree l + p.
std::vector<int> numerator_polynomial(const RationalTypeSeries& f);

struct OverlapDescription {
  std::vector<int> zero_positions;
  /// All sums over zero positions of a_j lambda^j, a_j in {-1,+1}; sign patterns
  /// enumerated with - before +, first zero position most significant.
  std::vector<Complex> points;
};

/// Throws ErrorKind::zeros_in_period if a zero sits in the periodic block.
OverlapDescription overlap_set(const RationalTypeSeries& f, Complex lambda);

}  // namespace ifslab
