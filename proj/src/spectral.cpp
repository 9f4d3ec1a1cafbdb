#include "graphfp/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace graphfp::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

// Square root holomorphic off the downward ray {-it : t >= 0}, positive on
// the positive reals: arguments live in [-pi/2, 3pi/2).
Complex sqrt_cut_down(Complex w) {
  double theta = std::arg(w);
  if (theta < -kPi / 2) theta += 2 * kPi;
  const double r = std::sqrt(std::abs(w));
  return {r * std::cos(theta / 2), r * std::sin(theta / 2)};
}

void require_rho(double rho) {
  if (!(rho > 1)) throw std::domain_error("rho must be > 1");
}

}  // namespace

Complex cauchy_f0(Complex z) {
  if (!(z.imag() > 0)) throw std::domain_error("cauchy_f0 requires Im z > 0");
  const Complex root = sqrt_cut_down(z + 2.0) * sqrt_cut_down(z - 2.0);
  return (root - z) / 2.0;
}

Complex boundary_f0(double t) {
  if (t >= 2) return {(-t + std::sqrt(t * t - 4)) / 2, 0};
  if (t <= -2) return {(-t - std::sqrt(t * t - 4)) / 2, 0};
  return {-t / 2, std::sqrt(4 - t * t) / 2};
}

Complex cauchy_frho(Complex z, double rho) {
  require_rho(rho);
  if (z.imag() < 0) throw std::domain_error("cauchy_frho requires Im z >= 0");
  const Complex f0 = (z.imag() == 0) ? boundary_f0(z.real()) : cauchy_f0(z);
  return rho * f0 / (rho - f0);
}

double density_arho(double t, double rho) {
  require_rho(rho);
  if (t <= -2 || t >= 2) return 0;
  return rho * rho * std::sqrt(4 - t * t) / (2 * kPi * (rho * rho + rho * t + 1));
}

double density_tstar_t(double t, double rho) {
  require_rho(rho);
  return density_arho(t - (rho + 1 / rho), rho);
}

SupportInterval tstar_t_support(double rho) {
  require_rho(rho);
  const double center = rho + 1 / rho;
  return {center - 2, center + 2};
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tolerance) {
  auto simpson = [](double lo, double flo, double hi, double fhi, double fmid) {
    return (hi - lo) / 6 * (flo + 4 * fmid + fhi);
  };
  auto rec = [&](auto&& self, double lo, double flo, double hi, double fhi, double mid,
                 double fmid, double whole, double tol, int depth) -> double {
    const double lm = (lo + mid) / 2;
    const double rm = (mid + hi) / 2;
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(lo, flo, mid, fmid, flm);
    const double right = simpson(mid, fmid, hi, fhi, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15 * tol) {
      return left + right + delta / 15;
    }
    return self(self, lo, flo, mid, fmid, lm, flm, left, tol / 2, depth - 1) +
           self(self, mid, fmid, hi, fhi, rm, frm, right, tol / 2, depth - 1);
  };
  const double m = (a + b) / 2;
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = simpson(a, fa, b, fb, fm);
  return rec(rec, a, fa, b, fb, m, fm, whole, tolerance, 40);
}

namespace {

// integral of p(t) g_rho(t - shift) dt over the support, with t = shift +
// 2 sin u flattening the sqrt endpoints
double density_integral(double rho, double shift, const std::function<double(double)>& p) {
  auto integrand = [&](double u) {
    const double s = 2 * std::sin(u);
    const double cosu = std::cos(u);
    // g_rho(s) * dt, with sqrt(4 - s^2) = 2 cos u already substituted
    const double g = rho * rho * (2 * cosu) / (2 * kPi * (rho * rho + rho * s + 1));
    return p(shift + s) * g * 2 * cosu;
  };
  return adaptive_simpson(integrand, -kPi / 2, kPi / 2, 1e-12);
}

}  // namespace

double arho_density_mass(double rho) {
  require_rho(rho);
  return density_integral(rho, 0, [](double) { return 1.0; });
}

double arho_density_moment(int n, double rho) {
  require_rho(rho);
  return density_integral(rho, 0, [n](double t) { return std::pow(t, n); });
}

double density_mass(double rho) {
  require_rho(rho);
  return density_integral(rho, rho + 1 / rho, [](double) { return 1.0; });
}

double density_moment(int n, double rho) {
  require_rho(rho);
  return density_integral(rho, rho + 1 / rho, [n](double t) { return std::pow(t, n); });
}

std::vector<InversionRow> stieltjes_inversion_scan(double rho, double epsilon,
                                                   const std::vector<double>& grid) {
  require_rho(rho);
  if (!(epsilon > 0) || epsilon > 1e-2) {
    throw std::domain_error("epsilon must lie in (0, 1e-2]");
  }
  std::vector<InversionRow> rows;
  rows.reserve(grid.size());
  for (double t : grid) {
    const double inv = cauchy_frho(Complex(t, epsilon), rho).imag() / kPi;
    const double g = density_arho(t, rho);
    rows.push_back({t, inv, g, std::abs(inv - g)});
  }
  return rows;
}

std::vector<double> linspace(double a, double b, int count) {
  if (count < 2) throw std::invalid_argument("linspace needs at least 2 points");
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(a + (b - a) * i / (count - 1));
  }
  return out;
}

}  // namespace graphfp::spectral
