#pragma once

#include "nlm/spectral.hpp"

namespace nlm {

/// Explicit solution families of the local curl-curl equation
/// curl curl E + sign*E = sign*|E|^{2q-2}E realized as mollified potentials.
struct LocalSolutionSpec {
  enum class Family { shrinking_ball, annulus };
  Family family = Family::shrinking_ball;
  double j = 1.0;      // outer radius = 1/j (support [rho, rho + 1/j] for annulus)
  double rho = 0.0;    // annulus inner radius
  double q = 2.0;
  int sign = +1;       // sign of the E term
  double sigma = 0.0;  // mollification width in length units (0 = sharp)

  void validate() const;
};

/// Spectral gradient of the sampled, sigma-mollified potential (quintic
/// smoothstep ramp over each profile jump); curl vanishes by construction.
VectorField build_local_solution(const LocalSolutionSpec& spec, const Grid& grid);

struct LocalEnergy {
  double I = 0.0;               // 1/2 I_L_part - sign/(2q) nonlinear_part
  double I_L_part = 0.0;        // int |curl E|^2 + sign |E|^2
  double nonlinear_part = 0.0;  // int |E|^{2q}
};

LocalEnergy local_energy(const VectorField& E, double q, int sign);

/// |I'(E)[E]| / ||E||_2^2 for the sign=+1 model.
double nehari_membership_residual(const VectorField& E, double q);

/// Closed-form continuum energy of the sharp unit profile on its support
/// (ball of radius r or annulus [rho, rho+w]): (q-1)/(2q) * volume, signed.
double local_energy_exact(const LocalSolutionSpec& spec);

}  // namespace nlm
