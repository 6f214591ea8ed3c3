#include "ifslab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ifslab/errors.hpp"
#include "parallel.hpp"

namespace ifslab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::invalid_series: return "InvalidSeries";
    case ErrorKind::invalid_window: return "InvalidWindow";
    case ErrorKind::unknown_landmark: return "UnknownLandmark";
    case ErrorKind::bad_indices: return "BadIndices";
    case ErrorKind::io_error: return "IoError";
    case ErrorKind::no_convergence: return "NoConvergence";
    case ErrorKind::derivative_vanished: return "DerivativeVanished";
    case ErrorKind::pole_at_unity: return "PoleAtUnity";
    case ErrorKind::zeros_in_period: return "ZerosInPeriod";
    case ErrorKind::level_too_deep: return "LevelTooDeep";
    case ErrorKind::invalid_lambda: return "InvalidLambda";
    case ErrorKind::not_a_root: return "NotARoot";
    case ErrorKind::enumeration_too_large: return "EnumerationTooLarge";
  }
  return "Unknown";
}

bool is_usage_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument:
    case ErrorKind::parse_error:
    case ErrorKind::invalid_series:
    case ErrorKind::invalid_window:
    case ErrorKind::unknown_landmark:
    case ErrorKind::bad_indices:
    case ErrorKind::io_error:
      return true;
    default:
      return false;
  }
}

Complex ipow(Complex z, int k) {
  if (k < 0) return Complex(1.0) / ipow(z, -k);
  Complex result(1.0, 0.0);
  Complex base = z;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Complex poly_eval(std::span<const int> coeffs, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z + static_cast<double>(*it);
  }
  return acc;
}

Complex poly_derivative_eval(std::span<const int> coeffs, Complex z) {
  Complex acc(0.0, 0.0);
  for (std::size_t j = coeffs.size(); j-- > 1;) {
    acc = acc * z + static_cast<double>(j) * static_cast<double>(coeffs[j]);
  }
  return acc;
}

double newton_tolerance(std::span<const int> coeffs) {
  double l1 = 0.0;
  for (int c : coeffs) l1 += std::abs(c);
  return 1e-13 * (1.0 + l1);
}

Complex newton_root(std::span<const int> coeffs, Complex seed) {
  if (coeffs.size() < 2 ||
      std::all_of(coeffs.begin() + 1, coeffs.end(), [](int c) { return c == 0; })) {
    throw Error(ErrorKind::invalid_argument, "newton_root needs a nonconstant polynomial");
  }
  const double tol = newton_tolerance(coeffs);
  Complex z = seed;
  for (int iter = 0; iter < 100; ++iter) {
    const Complex value = poly_eval(coeffs, z);
    if (std::abs(value) <= tol) return z;
    const Complex slope = poly_derivative_eval(coeffs, z);
    if (std::abs(slope) < 1e-300) {
      throw Error(ErrorKind::derivative_vanished, "polynomial derivative vanished during Newton iteration");
    }
    z -= value / slope;
  }
  if (std::abs(poly_eval(coeffs, z)) <= tol) return z;
  throw Error(ErrorKind::no_convergence, "Newton iteration did not converge in 100 steps");
}

PointSet truncate_set(std::span<const Complex> points, double r) {
  if (!(r > 0.0)) throw Error(ErrorKind::invalid_argument, "truncation radius must be positive");
  PointSet out;
  out.reserve(points.size() + kBoundarySamples);
  for (const Complex& z : points) {
    if (std::abs(z) <= r) out.push_back(z);
  }
  for (int k = 0; k < kBoundarySamples; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / kBoundarySamples;
    out.push_back(std::polar(r, angle));
  }
  return out;
}

double directed_distance(std::span<const Complex> from, std::span<const Complex> to, int threads) {
  if (from.empty() || to.empty()) throw Error(ErrorKind::invalid_argument, "empty point set");
  const auto n = static_cast<std::int64_t>(from.size());
  double worst = 0.0;
#pragma omp parallel for num_threads(detail::resolve_threads(threads)) reduction(max : worst) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& b : to) {
      best = std::min(best, std::norm(from[i] - b));
      if (best == 0.0) break;
    }
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

double hausdorff_dr(std::span<const Complex> e, std::span<const Complex> f, double r, int threads) {
  const PointSet te = truncate_set(e, r);
  const PointSet tf = truncate_set(f, r);
  return std::max(directed_distance(te, tf, threads), directed_distance(tf, te, threads));
}

}  // namespace ifslab
