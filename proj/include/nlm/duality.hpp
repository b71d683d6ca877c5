#pragma once

#include <array>
#include <vector>

#include "nlm/spectral.hpp"

namespace nlm {

/// Positive Fourier symbol m(xi) of the pseudodifferential operator P(D).
struct SymbolSpec {
  enum class Form { bessel, custom_radial };
  Form form = Form::bessel;
  double s = 1.0;                                // bessel: m(xi) = (1+|xi|^2)^s
  std::vector<std::pair<double, double>> table;  // custom: (|xi|, m) pairs

  /// m sampled on the grid frequencies; throws if any value is <= 0.
  std::vector<double> sample(const Grid& grid) const;
};

struct SolveOptions {
  double tol = 1e-12;  // successive-iterate L^2 distance
  int max_iter = 5000;
};

struct PrimalResult {
  ScalarField u;
  double I_value = 0.0;     // (1/2 - 1/r) ||u||_r^r at the Nehari point
  double el_residual = 0.0; // ||P(D)u - |u|^{r-2}u||_2 / ||P(D)u||_2
  bool converged = false;
  int iterations = 0;
};

/// Ground state of I(u) = 1/2 <P(D)u, u> - (1/r)||u||_r^r by the Nehari-scaled
/// fixed point u <- NehariScale(P(D)^{-1}(|u|^{r-2}u)).
PrimalResult primal_ground_state(const SymbolSpec& m, double r, const Grid& grid,
                                 const SolveOptions& opts = {});

struct DualScalarResult {
  ScalarField v;
  double J_value = 0.0;       // (1/r' - 1/2) int (Kcal*v) v at the Nehari point
  double dual_residual = 0.0; // || |v|^{r'-2}v - Kcal*v ||_2 / ||Kcal*v||_2
  bool converged = false;
  int iterations = 0;
};

/// Dual ground state via the scalar power iteration with multiplier m^{-1}
/// at exponent r', Nehari-scaled for J.
DualScalarResult dual_ground_state_scalar(const SymbolSpec& m, double r, const Grid& grid,
                                          const SolveOptions& opts = {});

struct DualityCheck {
  double map_residual = 0.0;  // ||v - |u|^{r-2}u||_{r'} / ||v||_{r'} after alignment
  double energy_gap = 0.0;    // |I(u) - J(v)| / |I(u)|
  std::array<int, 3> shift{0, 0, 0};
  int sign = +1;
};

/// Align v against |u|^{r-2}u over circular shifts and sign, then compare.
DualityCheck duality_correspondence_check(const PrimalResult& primal,
                                          const DualScalarResult& dual, const SymbolSpec& m,
                                          double r);

}  // namespace nlm
