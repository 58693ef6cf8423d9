#pragma once

#include <complex>
#include <functional>
#include <string>

#include "cavityqed/quadrature.hpp"

namespace cavityqed {

// Two atoms at the mid-plane of plates a distance d apart, separated by r
// parallel to the plates. Only the products k*r and k*d matter.
struct CavityGeometry {
  double r = 1.0;
  double d = 1.0;

  void validate() const;
};

// Diagonal Green tensor in the frame (along r, across r, normal to plates).
// Off-diagonal components vanish at the mid-plane and are not stored.
template <class T>
struct CartesianGreenT {
  T par{};
  T perp{};
  T g00{};
};

// Spherical components: pm = G+- = G-+, pp = G++ = G--, g00.
template <class T>
struct SphericalGreenT {
  T pm{};
  T pp{};
  T g00{};
};

using CartesianGreen = CartesianGreenT<double>;
using CartesianGreenC = CartesianGreenT<std::complex<double>>;
using SphericalGreen = SphericalGreenT<double>;
using SphericalGreenC = SphericalGreenT<std::complex<double>>;

template <class T>
SphericalGreenT<T> to_spherical(const CartesianGreenT<T>& g) {
  return {(g.par + g.perp) * 0.5, (g.par - g.perp) * 0.5, g.g00};
}

template <class T>
CartesianGreenT<T> from_spherical(const SphericalGreenT<T>& s) {
  return {s.pm + s.pp, s.pm - s.pp, s.g00};
}

CartesianGreen real_part(const CartesianGreenC& g);
CartesianGreen imag_part(const CartesianGreenC& g);

struct GreenOptions {
  // Half-width of the excluded band around each threshold n*pi/d, in units of pi/d.
  double guard_band = 1e-6;
  SeriesSpec series{};
};

// Throws ThresholdError if k lies within the guard band of n*pi/d for some n >= 1.
void check_threshold(const CavityGeometry& geom, double k, const GreenOptions& opts = {});

// Distance from k to the nearest threshold n*pi/d (n >= 1).
double threshold_distance(const CavityGeometry& geom, double k);

// Imaginary parts from the finite sums over propagating cavity modes.
CartesianGreen im_green_modesum(const CavityGeometry& geom, double k, const GreenOptions& opts = {});

// Real parts: Bessel-Y sums over propagating modes plus a converged Bessel-K
// sum over evanescent ones.
CartesianGreen re_green_modesum(const CavityGeometry& geom, double k, const GreenOptions& opts = {});

// k^2 Re G, the quantity whose k-derivative enters the double-pole term.
CartesianGreen k2_re_green_modesum(const CavityGeometry& geom, double k,
                                   const GreenOptions& opts = {});

CartesianGreenC green_modesum(const CavityGeometry& geom, double k, const GreenOptions& opts = {});

// Sign attached to the order-m reflection term.
enum class ReflectionSign {
  alternate_horizontal,  // (-1)^m on par/perp, none on g00 (image-dipole reading)
  alternate_all,         // (-1)^m on every component
  none,                  // no alternation
};

std::string to_string(ReflectionSign s);

struct ReflectionOptions {
  int m_max = 500;
  QuadSpec quad{};
  ReflectionSign sign = ReflectionSign::alternate_horizontal;
  // Wynn-epsilon acceleration of the partial sums over m.
  bool accelerate = true;
  // Stop once successive estimates change by less than this (relative).
  double series_tol = 1e-10;
};

struct ReflectionResult {
  CartesianGreenC value;
  double truncation_estimate = 0.0;
  int m_used = 0;
};

// Free-space term plus reflection orders m = 1..m_max.
ReflectionResult green_reflection_series(const CavityGeometry& geom, double k,
                                         const ReflectionOptions& opts = {});

// The order-m reflection term without its sign factor.
CartesianGreenC reflection_term(const CavityGeometry& geom, double k, int m, const QuadSpec& quad);

enum class ImagFreqMethod { automatic, zeta_integral, mode_sum };

// Green tensor at k = i u (all components real).
CartesianGreen green_imaginary_freq(const CavityGeometry& geom, double u, const QuadSpec& spec = {},
                                    ImagFreqMethod method = ImagFreqMethod::automatic,
                                    const SeriesSpec& series = {});

// Scattering part alone (no free-space term), by the zeta integral.
CartesianGreen green_imaginary_freq_scattering(const CavityGeometry& geom, double u,
                                               const QuadSpec& spec = {});

// The reflection series continued to k = i u: each order is a damped zeta
// integral. Independent of green_imaginary_freq's summed form.
CartesianGreen green_reflection_series_imaginary(const CavityGeometry& geom, double u,
                                                 const QuadSpec& spec = {}, int m_max = 500,
                                                 double series_tol = 1e-14);

CartesianGreenC free_space_green(double r, double k);
CartesianGreen free_space_green_imag(double r, double u);

// d/dk [k^2 Re G_free] in closed form.
CartesianGreen d_dk_k2_re_free_space(double r, double k);

struct DerivativeResult {
  CartesianGreen analytic;
  CartesianGreen finite_difference;
  double max_rel_discrepancy = 0.0;
};

// d/dk [k^2 Re G] from the differentiated mode sums, cross-checked by
// Richardson-extrapolated central differences. Throws
// DerivativeMismatchError when the two disagree beyond tolerance.
DerivativeResult d_dk_k2_re_green(const CavityGeometry& geom, double k,
                                  const GreenOptions& opts = {}, double tolerance = 1e-6);

CartesianGreen d_dk_k2_re_green_analytic(const CavityGeometry& geom, double k,
                                         const GreenOptions& opts = {});
CartesianGreen d_dk_k2_re_green_fd(const CavityGeometry& geom, double k,
                                   const GreenOptions& opts = {});

// lim_{k -> 0} k^2 G from the electrostatic image-dipole sum.
CartesianGreen static_k2_green(const CavityGeometry& geom);

// Real parts by a once-subtracted numerical Kramers-Kronig transform of the
// mode-sum imaginary parts, mode by mode.
CartesianGreen kramers_kronig_re(const CavityGeometry& geom, double k, const QuadSpec& spec = {});

// Principal value of the integral over s in [0, inf) of f(s) / (s^2 - p2),
// for integrands oscillating with period 2 pi / r. Building block of
// kramers_kronig_re.
double kk_principal_value(const std::function<double(double)>& f, double p2, double r,
                          const QuadSpec& spec = {});

// Direct radial quadrature of the defining in-plane wavevector integrals at
// k = i u (scattering part) plus the closed-form free-space part.
CartesianGreen greens_q_integral_oracle(const CavityGeometry& geom, double u,
                                        const QuadSpec& spec = {});

}  // namespace cavityqed
