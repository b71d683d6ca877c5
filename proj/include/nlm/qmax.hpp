#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlm/kernels.hpp"
#include "nlm/rearrange.hpp"

namespace nlm {

enum class CCClass { compact, vanishing, dichotomy, undetermined };
std::string to_string(CCClass c);

/// Knobs for the nonlinear power iteration on the L^p sphere, 1 < p < 2.
struct MaximizeOptions {
  double p = 4.0 / 3.0;
  double tol = 1e-10;          // successive-iterate L^p distance
  int max_iter = 5000;
  double relaxation = 1.0;     // initial step blend, halved by the safeguard
  bool symmetrize = false;     // Schwarz-rearrange each iterate (scalar only)
  bool record_history = false;

  enum class Init { gaussian_bump, random, provided };
  Init init = Init::gaussian_bump;
  std::uint64_t seed = 0;

  void validate() const;
};

struct MaximizerReport {
  double q_value = 0.0;
  int iterations = 0;
  bool converged = false;
  double el_residual = 0.0;
  CCClass cc_class = CCClass::undetermined;
  std::array<int, 3> recenter_shift{0, 0, 0};
  std::vector<double> q_history;  // filled when record_history
};

/// Maximize Q(f) = int (K*f) f over {f >= 0, ||f||_p = 1} by the safeguarded
/// fixed point f <- normalize((K*f)+^{1/(p-1)}). Non-convergence is reported,
/// not thrown.
std::pair<ScalarField, MaximizerReport> maximize_scalar_Q(
    const SampledKernel& K, const MaximizeOptions& opts,
    const ScalarField* init_field = nullptr);

/// Vector variant over the L^{r'} sphere with a tensor multiplier:
/// U <- normalize(|W|^{(2-r')/(r'-1)} W), W = Kcal * U. `symmetrize` is
/// ignored (rearrangement is scalar-only).
std::pair<VectorField, MaximizerReport> maximize_vector_Q(
    const TensorMultiplier& M, const MaximizeOptions& opts,
    const VectorField* init_field = nullptr);

double q_form(const SampledKernel& K, const ScalarField& f);
double q_form(const TensorMultiplier& M, const VectorField& U);

struct ConcentrationReport {
  CCClass cls = CCClass::undetermined;
  std::vector<std::pair<double, double>> profile;  // (R, C(R))
  double lambda = 0.0;                             // plateau mass for dichotomy
  std::array<int, 3> best_center{0, 0, 0};         // argmax cell at the largest R
};

/// Lions trichotomy diagnostics for ||f||_p = 1: C(R) = max_x int_{B_R(x)}|f|^p
/// evaluated by FFT convolution with ball indicators. Empty radii list uses
/// 8 radii spanning [L/8, L/2].
ConcentrationReport concentration_diagnostics(const ScalarField& f, double p,
                                              std::vector<double> radii = {},
                                              double eps_cc = 0.05);

/// Circularly translate f so the best-ball centre (radius L/4) sits at the
/// origin; returns the applied shift in cells.
std::array<int, 3> recenter(ScalarField& f, double p);

/// Deterministic uniform [-1, 1) field from a seed (splitmix64 stream).
ScalarField random_field(const Grid& grid, std::uint64_t seed);

/// exp(-(2|x|/L)^2) bump, the canonical initial iterate.
ScalarField gaussian_bump(const Grid& grid);

}  // namespace nlm
