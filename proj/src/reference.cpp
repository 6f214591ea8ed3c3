#include "ifslab/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ifslab/errors.hpp"
#include "node_enum.hpp"

namespace ifslab::serial {

namespace {

std::vector<Complex> powers_of(Complex lambda, int length) {
  std::vector<Complex> powers(length);
  Complex pw(1.0, 0.0);
  for (int j = 0; j < length; ++j) {
    powers[j] = pw;
    pw *= lambda;
  }
  return powers;
}

// Decodes the lexicographic index digit by digit, first letter most significant.
Complex node_at(std::int64_t index, const std::vector<Complex>& powers, Alphabet alphabet) {
  const int base = alphabet_size(alphabet);
  const auto letters = detail::letters_of(alphabet);
  const int length = static_cast<int>(powers.size());
  std::int64_t scale = detail::ipow_int(base, length);
  Complex sum(0.0, 0.0);
  for (int j = 0; j < length; ++j) {
    scale /= base;
    const int d = static_cast<int>(index / scale);
    index %= scale;
    sum = detail::step(sum, letters[d], powers[j]);
  }
  return sum;
}

void check_level(int level, Alphabet alphabet) {
  if (level < 0) throw Error(ErrorKind::invalid_argument, "level must be nonnegative");
  if (level > max_level(alphabet)) throw Error(ErrorKind::level_too_deep, "level exceeds the enumeration limit");
}

}  // namespace

PointSet attractor_sample(Complex lambda, int depth, Alphabet alphabet) {
  check_level(depth, alphabet);
  const auto powers = powers_of(lambda, depth + 1);
  const std::int64_t count = detail::ipow_int(alphabet_size(alphabet), depth + 1);
  PointSet out(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out[i] = node_at(i, powers, alphabet);
  return out;
}

InstarGap instar_gap(Complex lambda, int level, Alphabet alphabet, Disk probe, Complex exclude,
                     double exclude_tol) {
  const PointSet nodes = serial::attractor_sample(lambda, level, alphabet);
  const double reach = probe.radius + nodal_radius(lambda, level + 1);
  InstarGap out{std::numeric_limits<double>::infinity(), {}, 0};
  for (const Complex& nu : nodes) {
    if (std::abs(nu - exclude) <= exclude_tol) {
      ++out.skipped;
      continue;
    }
    const double g = std::abs(probe.center - nu) - reach;
    if (g < out.gap) {
      out.gap = g;
      out.nearest = nu;
    }
  }
  return out;
}

EscapeGrid escape_grid(const Window& window, int width, int height, ParamSet set, int depth) {
  if (!(window.x0 < window.x1) || !(window.y0 < window.y1)) {
    throw Error(ErrorKind::invalid_window, "window needs x0 < x1 and y0 < y1");
  }
  if (width < 1 || height < 1) throw Error(ErrorKind::invalid_window, "image needs at least one pixel");
  EscapeGrid grid{window, width, height, depth, set, {}};
  grid.values.reserve(static_cast<std::size_t>(width) * height);
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) {
      grid.values.push_back(escape_value(pixel_center(window, width, height, i, j), set, depth));
    }
  }
  return grid;
}

double directed_distance(std::span<const Complex> from, std::span<const Complex> to) {
  if (from.empty() || to.empty()) throw Error(ErrorKind::invalid_argument, "empty point set");
  double worst = 0.0;
  for (const Complex& a : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& b : to) best = std::min(best, std::norm(a - b));
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

std::vector<ConditionRecord> condition_iii(const RationalTypeSeries& f, Complex lambda, int n,
                                           Variant variant) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "degree must be nonnegative");
  if (n > 12) throw Error(ErrorKind::enumeration_too_large, "polynomial enumeration limited to n <= 12");
  const int l = f.preperiod();
  const int lo = variant == Variant::doubled ? -2 : -1;
  const int hi = -lo;
  const double scale = variant == Variant::doubled ? 2.0 : 1.0;
  const Condition which = variant == Variant::doubled ? Condition::iii : Condition::iii_prime;
  const std::vector<int> q = solve_q(f, n, variant);
  const double lhs = scale * std::abs(taylor_eval(f, lambda, l + 1 + n));
  const Complex anchor = scale * taylor_eval(f, lambda, l);
  const Complex lead = ipow(lambda, l + 1);

  std::vector<ConditionRecord> out;
  std::vector<int> poly(n + 1, lo);
  while (true) {
    if (poly != q) {
      ConditionRecord r = less_record(which, n, lhs, std::abs(anchor + lead * poly_eval(poly, lambda)));
      r.poly = poly;
      out.push_back(std::move(r));
    }
    // Odometer with the last coefficient fastest, matching the lexicographic order.
    int j = n;
    while (j >= 0 && poly[j] == hi) poly[j--] = lo;
    if (j < 0) break;
    ++poly[j];
  }
  return out;
}

}  // namespace ifslab::serial
