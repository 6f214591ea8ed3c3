#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace ifslab {

using Complex = std::complex<double>;

/// Closed disk in the plane.
struct Disk {
  Complex center{};
  double radius = 0.0;

  bool operator==(const Disk&) const = default;
};

/// Finite sample standing in for a compact set.
using PointSet = std::vector<Complex>;

/// Number of equally spaced samples used for the circle |z| = r in truncate_set.
inline constexpr int kBoundarySamples = 256;

/// z^k by repeated squaring; ipow(z, 0) is exactly 1.
Complex ipow(Complex z, int k);

/// Horner evaluation of sum coeffs[j] z^j. Coefficients are in ascending degree.
Complex poly_eval(std::span<const int> coeffs, Complex z);

/// Derivative of the same polynomial at z.
Complex poly_derivative_eval(std::span<const int> coeffs, Complex z);

/// Plain Newton iteration. Converges when |p(z)| <= 1e-13 * (1 + sum |c_j|).
///
/// Throws ErrorKind::no_convergence after 100 iterations and
/// ErrorKind::derivative_vanished when |p'(z)| < 1e-300.
Complex newton_root(std::span<const int> coeffs, Complex seed);

/// Residual tolerance newton_root accepts for these coefficients.
double newton_tolerance(std::span<const int> coeffs);

/// Points of `points` with modulus <= r, followed by the fixed boundary sample of
/// the circle of radius r (kBoundarySamples angles starting at 0).
PointSet truncate_set(std::span<const Complex> points, double r);

/// sup over a in `from` of the distance from a to the nearest point of `to`.
double directed_distance(std::span<const Complex> from, std::span<const Complex> to,
                         int threads = 1);

/// Hausdorff distance between the truncations [E]_r and [F]_r.
double hausdorff_dr(std::span<const Complex> e, std::span<const Complex> f, double r,
                    int threads = 1);

}  // namespace ifslab
