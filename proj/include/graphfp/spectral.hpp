#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace graphfp::spectral {

using Complex = std::complex<double>;

// Cauchy transform of the semicircle law, F0(z) = <(a0 - z)^{-1} d0, d0>,
// as the Herglotz branch of the root of F^2 + z F + 1 = 0 that vanishes at
// infinity. The square root of z^2 - 4 is split as sqrt(z+2) sqrt(z-2) with
// branch cuts running straight down from -2 and 2, so the boundary values
// on the real axis are exactly `boundary_f0`. Requires Im z > 0.
Complex cauchy_f0(Complex z);

// Cauchy transform of the rank-one perturbation a_rho = a0 - (1/rho) p0:
// F_rho = rho F0 / (rho - F0). Defined on Im z >= 0 (the real axis goes
// through boundary_f0); requires rho > 1, which keeps F0 away from rho.
Complex cauchy_frho(Complex z, double rho);

// Boundary values f0(t) = F0(t + i0):
//   ( -t + sqrt(t^2-4) )/2   for t >= 2
//   ( -t + i sqrt(4-t^2))/2  for -2 <= t <= 2
//   ( -t - sqrt(t^2-4) )/2   for t <= -2
Complex boundary_f0(double t);

// Spectral density of a_rho: 1_{[-2,2]} rho^2 sqrt(4-t^2)
// / (2 pi (rho^2 + rho t + 1)). Requires rho > 1.
double density_arho(double t, double rho);

// Spectral density of t*t: the shift of density_arho by rho + 1/rho. This
// is the free Poisson (Marchenko-Pastur) density with rate rho^2 and jump
// size 1/rho; support [(rho + 1/rho) - 2, (rho + 1/rho) + 2].
double density_tstar_t(double t, double rho);

struct SupportInterval {
  double lo;
  double hi;
};
SupportInterval tstar_t_support(double rho);

// Integrals of the densities, via a sin substitution that removes the
// square-root endpoint behaviour, then adaptive Simpson.
double arho_density_mass(double rho);
double arho_density_moment(int n, double rho);
double density_mass(double rho);
double density_moment(int n, double rho);

struct InversionRow {
  double t;
  double inversion;  // Im F_rho(t + i eps) / pi
  double density;    // density_arho(t)
  double abs_diff;
};

// Stieltjes inversion against the closed-form density on a grid.
std::vector<InversionRow> stieltjes_inversion_scan(double rho, double epsilon,
                                                   const std::vector<double>& grid);

std::vector<double> linspace(double a, double b, int count);

// Adaptive Simpson quadrature; exposed for reuse in tests.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tolerance);

}  // namespace graphfp::spectral
