#include "nlm/local_model.hpp"

#include <cmath>
#include <stdexcept>

#include "nlm/parallel.hpp"

namespace nlm {
namespace {

// Quintic smoothstep and its integral; T(u) = int_0^u (1 - S(v)) dv with
// T(u>=1) = 1/2, so a ramp of width sigma loses no radius on average.
inline double smoothstep(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return ((6.0 * u - 15.0) * u + 10.0) * u * u * u;
}

inline double ramp_integral(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 0.5;
  double u4 = u * u * u * u;
  return u - (u4 * u * u - 3.0 * u4 * u + 2.5 * u4);
}

// Potential of the mollified unit radial profile supported on [r0, r1]
// (r0 = 0 gives the ball). Phi'(r) ramps 0->1 around r0 and 1->0 around r1.
double profile_potential(double r, double r0, double r1, double sigma) {
  if (sigma <= 0.0) {  // sharp profile
    if (r <= r0) return 0.0;
    return std::min(r, r1) - r0;
  }
  double up_a = r0 - sigma / 2.0;
  double dn_a = r1 - sigma / 2.0;
  double acc = 0.0;
  if (r0 > 0.0) {
    // rising ramp centred at r0
    if (r <= up_a) return 0.0;
    double u = (r - up_a) / sigma;
    if (u < 1.0) acc = sigma * (std::min(u, 1.0) - ramp_integral(std::min(u, 1.0)));
    else acc = sigma * 0.5 + (r - (up_a + sigma));
  } else {
    acc = r;  // unit slope from the origin
  }
  // falling ramp centred at r1
  if (r > dn_a) {
    double u = (r - dn_a) / sigma;
    acc -= (r - dn_a) - sigma * ramp_integral(u);
  }
  return acc;
}

}  // namespace

void LocalSolutionSpec::validate() const {
  if (!(j >= 1.0)) throw std::invalid_argument("LocalSolutionSpec: j must be >= 1");
  if (!(q > 1.0)) throw std::invalid_argument("LocalSolutionSpec: q must be > 1");
  if (rho < 0.0) throw std::invalid_argument("LocalSolutionSpec: rho must be >= 0");
  if (sigma < 0.0) throw std::invalid_argument("LocalSolutionSpec: sigma must be >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("LocalSolutionSpec: sign must be +-1");
}

VectorField build_local_solution(const LocalSolutionSpec& spec, const Grid& grid) {
  spec.validate();
  if (grid.dim() != 3) throw std::invalid_argument("build_local_solution: dim-3 grid required");
  double r0 = (spec.family == LocalSolutionSpec::Family::annulus) ? spec.rho : 0.0;
  double r1 = r0 + 1.0 / spec.j;
  if (r1 + spec.sigma / 2.0 >= grid.half_width())
    throw std::invalid_argument("build_local_solution: support exceeds the box");

  ScalarField phi(grid);
  parallel_for(phi.size(), [&](std::size_t i) {
    double r = grid.min_image_radius(grid.unflat(i));
    phi[i] = profile_potential(r, r0, r1, spec.sigma);
  });
  return gradient(phi);
}

LocalEnergy local_energy(const VectorField& E, double q, int sign) {
  if (!(q > 1.0)) throw std::invalid_argument("local_energy: q must be > 1");
  VectorField c = curl(E);
  double curl2 = inner(c, c);
  double e2 = inner(E, E);
  double e2q = E.grid().cell_volume() * parallel_sum(E.comp(0).size(), [&](std::size_t i) {
                 return std::pow(E.magnitude_at(i), 2.0 * q);
               });
  LocalEnergy out;
  out.I_L_part = curl2 + sign * e2;
  out.nonlinear_part = e2q;
  out.I = 0.5 * out.I_L_part - sign * e2q / (2.0 * q);
  return out;
}

double nehari_membership_residual(const VectorField& E, double q) {
  double e2 = inner(E, E);
  if (!(e2 > 0.0)) throw std::invalid_argument("nehari_membership_residual: zero field");
  VectorField c = curl(E);
  double curl2 = inner(c, c);
  double e2q = E.grid().cell_volume() * parallel_sum(E.comp(0).size(), [&](std::size_t i) {
                 return std::pow(E.magnitude_at(i), 2.0 * q);
               });
  return std::abs(curl2 + e2 - e2q) / e2;
}

double local_energy_exact(const LocalSolutionSpec& spec) {
  double r0 = (spec.family == LocalSolutionSpec::Family::annulus) ? spec.rho : 0.0;
  double r1 = r0 + 1.0 / spec.j;
  double volume = 4.0 * M_PI / 3.0 * (r1 * r1 * r1 - r0 * r0 * r0);
  return spec.sign * (spec.q - 1.0) / (2.0 * spec.q) * volume;
}

}  // namespace nlm
