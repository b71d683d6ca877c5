#pragma once

#include "nlm/qmax.hpp"

namespace nlm {

/// Report of the dual variational solve for the fully nonlocal equation
/// curl curl E + E = K*(|E|^{r-2}E), r > 2, via J on L^{r'}.
struct DualGroundStateReport {
  double r = 0.0;
  double r_prime = 0.0;            // r/(r-1)
  double Q_U = 0.0;                // int (Kcal*U) . U at ||U||_{r'} = 1
  double t_star = 0.0;             // (Q_U / ||U||^{r'})^{1/(r'-2)}
  double J_value = 0.0;
  double predicted_J = 0.0;        // (2-r')/(2r') (||U||^2 / Q_U)^{r'/(2-r')}
  double dual_residual = 0.0;      // || |U|^{r'-2}U - Kcal*U || / ||Kcal*U||
  double maxwell_residual_sol = 0.0;
  double maxwell_residual_irr = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// J(U) = (1/r') int |U|^{r'} - 1/2 int (Kcal*U) . U.
double dual_energy(const VectorField& U, const TensorMultiplier& M, double r_prime);

struct DualSolution {
  VectorField U;  // dual ground state of J
  VectorField E;  // |U|^{r'-2} U, dual ground state of the Maxwell system
  DualGroundStateReport report;
};

/// Maximize the dual quadratic form over the L^{r'} sphere, Nehari-scale, and
/// assemble E. The kernel must pass positivity_transfer_check (Thm-1.4
/// hypothesis); maximizer failure propagates as a runtime_error.
DualSolution dual_ground_state(const KernelSpec& spec, double r, const Grid& grid,
                               const MaximizeOptions& opts);

/// Residuals of the split spectral system
/// (|xi|^2+1)(1-R)E-hat = K-hat (1-R)U-hat  and  R E-hat = K-hat R U-hat,
/// each relative to the L2 norm of its left-hand side.
std::pair<double, double> maxwell_residual(const VectorField& E, const VectorField& U,
                                           const SampledKernel& K);

struct PositivityCheck {
  double scalar_Q = 0.0;  // sum K-hat |f-hat|^2 (Parseval weight)
  double vector_Q = 0.0;  // sum Kcal-hat F-hat . conj(F-hat), F-hat = (xi/|xi|) f-hat, F-hat(0)=0
  double gap = 0.0;       // scalar_Q - vector_Q (the xi=0 mode only)
};

/// Prop-6.2 positivity transfer, evaluated spectrally.
PositivityCheck positivity_transfer_check(const ScalarField& f, const SampledKernel& K);

}  // namespace nlm
