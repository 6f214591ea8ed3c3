#include "ifslab/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ifslab/errors.hpp"

namespace ifslab {

namespace {

bool valid_digit(int c) { return c == -1 || c == 0 || c == 1; }

// Smallest d dividing block.size() with block[i] == block[i % d] for all i.
std::size_t primitive_period(const std::vector<int>& block) {
  const std::size_t p = block.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < p && repeats; ++i) repeats = block[i] == block[i % d];
    if (repeats) return d;
  }
  return p;
}

std::vector<int> parse_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "1" || item == "+1") {
      out.push_back(1);
    } else if (item == "0" || item == "-0" || item == "+0") {
      out.push_back(0);
    } else if (item == "-1") {
      out.push_back(-1);
    } else {
      throw Error(ErrorKind::parse_error, "series entry '" + std::string(item) + "' is not one of -1, 0, 1");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

RationalTypeSeries::RationalTypeSeries(std::vector<int> head, std::vector<int> block) {
  if (head.empty()) throw Error(ErrorKind::invalid_series, "preperiodic part must contain c_0");
  if (block.empty()) throw Error(ErrorKind::invalid_series, "periodic block must be nonempty");
  if (!std::all_of(head.begin(), head.end(), valid_digit) ||
      !std::all_of(block.begin(), block.end(), valid_digit)) {
    throw Error(ErrorKind::invalid_series, "coefficients must lie in {-1, 0, 1}");
  }
  if (head.front() != 1) throw Error(ErrorKind::invalid_series, "c_0 must be +1");

  block.resize(primitive_period(block));
  coeffs_ = std::move(head);
  coeffs_.insert(coeffs_.end(), block.begin(), block.end());
  period_ = static_cast<int>(block.size());
  preperiod_ = static_cast<int>(coeffs_.size()) - period_ - 1;

  while (preperiod_ > 0 && coeffs_[preperiod_] == coeffs_[preperiod_ + period_]) {
    --preperiod_;
    coeffs_.pop_back();
  }
}

RationalTypeSeries RationalTypeSeries::parse(std::string_view text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw Error(ErrorKind::parse_error, "series must look like \"c0,...,cl;c(l+1),...,c(l+p)\"");
  }
  try {
    return RationalTypeSeries(parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1)));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_series) throw Error(ErrorKind::parse_error, e.what());
    throw;
  }
}

std::vector<int> RationalTypeSeries::head() const {
  return {coeffs_.begin(), coeffs_.begin() + preperiod_ + 1};
}

std::vector<int> RationalTypeSeries::block() const {
  return {coeffs_.begin() + preperiod_ + 1, coeffs_.end()};
}

int RationalTypeSeries::coeff_at(int j) const {
  if (j < 0) throw Error(ErrorKind::invalid_argument, "negative coefficient index");
  if (j <= preperiod_ + period_) return coeffs_[j];
  return coeffs_[preperiod_ + 1 + (j - preperiod_ - 1) % period_];
}

std::vector<int> RationalTypeSeries::zero_positions() const {
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(coeffs_.size()); ++j) {
    if (coeffs_[j] == 0) out.push_back(j);
  }
  return out;
}

bool RationalTypeSeries::has_zeros_in_period() const {
  return std::find(coeffs_.begin() + preperiod_ + 1, coeffs_.end(), 0) != coeffs_.end();
}

std::string RationalTypeSeries::to_string() const {
  std::ostringstream out;
  for (int j = 0; j < static_cast<int>(coeffs_.size()); ++j) {
    if (j > 0) out << (j == preperiod_ + 1 ? ';' : ',');
    out << coeffs_[j];
  }
  return out.str();
}

Complex taylor_eval(const RationalTypeSeries& f, Complex lambda, int k) {
  if (k < 0) throw Error(ErrorKind::invalid_argument, "Taylor degree must be nonnegative");
  Complex acc(0.0, 0.0);
  for (int j = k; j >= 0; --j) acc = acc * lambda + static_cast<double>(f.coeff_at(j));
  return acc;
}

namespace {

struct ClosedForm {
  Complex head, head_slope, block, block_slope, denom;
};

ClosedForm closed_form(const RationalTypeSeries& f, Complex z) {
  const auto& c = f.coefficients();
  const int l = f.preperiod();
  const int p = f.period();
  std::span<const int> all(c);
  std::vector<int> block_poly(c.size(), 0);
  std::copy(c.begin() + l + 1, c.end(), block_poly.begin() + l + 1);
  ClosedForm out;
  out.head = poly_eval(all.first(l + 1), z);
  out.head_slope = poly_derivative_eval(all.first(l + 1), z);
  out.block = poly_eval(block_poly, z);
  out.block_slope = poly_derivative_eval(block_poly, z);
  out.denom = 1.0 - ipow(z, p);
  if (std::abs(out.denom) < 1e-14) throw Error(ErrorKind::pole_at_unity, "lambda^p is 1");
  return out;
}

}  // namespace

Complex rational_eval(const RationalTypeSeries& f, Complex lambda) {
  const ClosedForm cf = closed_form(f, lambda);
  return cf.head + cf.block / cf.denom;
}

Complex derivative_eval(const RationalTypeSeries& f, Complex lambda) {
  const ClosedForm cf = closed_form(f, lambda);
  const int p = f.period();
  const Complex denom_slope = -static_cast<double>(p) * ipow(lambda, p - 1);
  return cf.head_slope + (cf.block_slope * cf.denom - cf.block * denom_slope) / (cf.denom * cf.denom);
}

std::vector<int> numerator_polynomial(const RationalTypeSeries& f) {
  const auto& c = f.coefficients();
  const int l = f.preperiod();
  const int p = f.period();
  std::vector<int> out(c.begin(), c.end());
  for (int j = 0; j <= l; ++j) out[j + p] -= c[j];
  return out;
}

OverlapDescription overlap_set(const RationalTypeSeries& f, Complex lambda) {
  if (f.has_zeros_in_period()) {
    throw Error(ErrorKind::zeros_in_period, "zero coefficient in the periodic block gives an infinite overlap");
  }
  OverlapDescription out;
  out.zero_positions = f.zero_positions();
  const std::size_t m = out.zero_positions.size();
  if (m > 20) throw Error(ErrorKind::enumeration_too_large, "too many zero coefficients");
  std::vector<Complex> powers;
  for (int j : out.zero_positions) powers.push_back(ipow(lambda, j));
  const std::size_t count = std::size_t{1} << m;
  out.points.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const bool plus = (mask >> (m - 1 - i)) & 1U;
      sum += plus ? powers[i] : -powers[i];
    }
    out.points.push_back(sum);
  }
  return out;
}

}  // namespace ifslab
