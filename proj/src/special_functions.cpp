#include "cavityqed/special_functions.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/bessel.hpp>

#include "cavityqed/errors.hpp"

namespace cavityqed {

namespace {

// Errors are reported through our own exceptions, not errno or Boost's throw.
using quiet_policy = boost::math::policies::policy<
    boost::math::policies::domain_error<boost::math::policies::ignore_error>,
    boost::math::policies::overflow_error<boost::math::policies::ignore_error>,
    boost::math::policies::underflow_error<boost::math::policies::ignore_error>,
    boost::math::policies::promote_double<false>>;

void require_positive(const char* name, double x) {
  if (!(x > 0.0)) {
    throw DomainError(std::string(name) + ": argument must be > 0, got " + std::to_string(x));
  }
}

}  // namespace

double bessel_j(BesselOrder order, double x) {
  if (!(x >= 0.0)) {
    throw DomainError("bessel_j: argument must be >= 0, got " + std::to_string(x));
  }
  switch (order) {
    case BesselOrder::zero:
      return boost::math::cyl_bessel_j(0, x, quiet_policy());
    case BesselOrder::one:
      return boost::math::cyl_bessel_j(1, x, quiet_policy());
    case BesselOrder::two:
      return boost::math::cyl_bessel_j(2, x, quiet_policy());
  }
  throw DomainError("bessel_j: unsupported order");
}

double bessel_y(BesselOrder order, double x) {
  require_positive("bessel_y", x);
  switch (order) {
    case BesselOrder::zero:
      return boost::math::cyl_neumann(0, x, quiet_policy());
    case BesselOrder::one:
      return boost::math::cyl_neumann(1, x, quiet_policy());
    default:
      break;
  }
  throw DomainError("bessel_y: only orders 0 and 1 are provided");
}

double bessel_k(BesselOrder order, double x) {
  require_positive("bessel_k", x);
  switch (order) {
    case BesselOrder::zero:
      return boost::math::cyl_bessel_k(0, x, quiet_policy());
    case BesselOrder::one:
      return boost::math::cyl_bessel_k(1, x, quiet_policy());
    default:
      break;
  }
  throw DomainError("bessel_k: only orders 0 and 1 are provided");
}

double j0(double x) { return bessel_j(BesselOrder::zero, std::abs(x)); }
double j1(double x) {
  double v = bessel_j(BesselOrder::one, std::abs(x));
  return x < 0.0 ? -v : v;
}
double j2(double x) { return bessel_j(BesselOrder::two, std::abs(x)); }
double y0(double x) { return bessel_y(BesselOrder::zero, x); }
double y1(double x) { return bessel_y(BesselOrder::one, x); }
double k0(double x) { return bessel_k(BesselOrder::zero, x); }
double k1(double x) { return bessel_k(BesselOrder::one, x); }

double j1_over_x(double x) {
  double ax = std::abs(x);
  if (ax < 1e-4) {
    double x2 = ax * ax;
    return 0.5 - x2 / 16.0 + x2 * x2 / 384.0;
  }
  return bessel_j(BesselOrder::one, ax) / ax;
}

double k0_scaled(double x) {
  require_positive("k0_scaled", x);
  if (x < 600.0) return std::exp(x) * k0(x);
  // Large-argument expansion; the first omitted term is below 1e-16 relative here.
  double s = 1.0, t = 1.0;
  for (int n = 1; n < 8; ++n) {
    double a = 2.0 * n - 1.0;
    t *= -(a * a) / (8.0 * n * x);
    s += t;
  }
  return std::sqrt(M_PI / (2.0 * x)) * s;
}

double k1_scaled(double x) {
  require_positive("k1_scaled", x);
  if (x < 600.0) return std::exp(x) * k1(x);
  double s = 1.0, t = 1.0;
  for (int n = 1; n < 8; ++n) {
    double a = 2.0 * n - 1.0;
    t *= (4.0 - a * a) / (8.0 * n * x);
    s += t;
  }
  return std::sqrt(M_PI / (2.0 * x)) * s;
}

}  // namespace cavityqed
