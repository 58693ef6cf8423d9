#pragma once

namespace cavityqed {

// Orders of the cylinder functions that the cavity formulas need.
// J: 0..2, Y: 0..1, K: 0..1.
enum class BesselOrder { zero = 0, one = 1, two = 2 };

// First kind. Defined for x >= 0; negative x is rejected with DomainError.
double bessel_j(BesselOrder order, double x);

// Second kind. DomainError for x <= 0 and for order two.
double bessel_y(BesselOrder order, double x);

// Modified, second kind. DomainError for x <= 0 and for order two.
double bessel_k(BesselOrder order, double x);

// Shorthands used throughout the Green tensor code.
double j0(double x);
double j1(double x);
double j2(double x);
double y0(double x);
double y1(double x);
double k0(double x);
double k1(double x);

// J1(x)/x with the removable singularity filled in (value 1/2 at x = 0).
double j1_over_x(double x);

// Exponentially scaled e^x K_n(x); stays finite where K underflows.
double k0_scaled(double x);
double k1_scaled(double x);

}  // namespace cavityqed
