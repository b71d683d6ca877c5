#pragma once

#include <optional>
#include <vector>

#include "nlm/kernels.hpp"

namespace nlm {

/// Energies and fibering data of the partially nonlocal Kerr functional
/// I(E) = 1/2 I_L - 1/4 I_NL, I_L = int |curl E|^2 + |E|^2,
/// I_NL = int (K*|E|^2)|E|^2.
struct KerrReport {
  double I_L = 0.0;
  double I_NL = 0.0;
  std::optional<double> quotient;          // I_L^2 / (4 I_NL), when I_NL > 0
  std::optional<double> t_star;            // sqrt(I_L / I_NL)
  std::optional<double> energy_at_nehari;  // I(t* E) = quotient
  double bound = 0.0;                      // 1/(4 K(0))
  bool attained_prediction = false;        // delta_K > 0
};

KerrReport kerr_energy(const VectorField& E, const SampledKernel& K);

/// Nehari-scaled gradient bump with diam(supp) <= delta_K; throws for
/// plateau-free kernels (non-attainment, Thm-1.2 regime).
VectorField kerr_minimizer(const SampledKernel& K);

/// E_n(x) = n^{1/2} grad[phi(n x)] for integer scales; the rescaled potential
/// is sampled exactly by index remapping. Scales leaving fewer than 8 cells
/// across supp(grad phi(n.)) are rejected.
std::vector<std::pair<int, KerrReport>> kerr_shrinking_family(const ScalarField& phi,
                                                              const std::vector<int>& scales,
                                                              const SampledKernel& K);

/// C-infinity bump exp(-1/(1-|x/rho|^2)) on |x| < rho, zero outside.
ScalarField bump_potential(const Grid& grid, double rho);

/// Min-image diameter of {|E| > rel_threshold * max |E|}.
double support_diameter(const VectorField& E, double rel_threshold = 1e-12);

}  // namespace nlm
