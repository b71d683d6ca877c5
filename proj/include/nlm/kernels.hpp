#pragma once

#include <array>
#include <string>
#include <vector>

#include "nlm/spectral.hpp"

#include "json.hpp"

namespace nlm {

enum class KernelKind { gaussian, exponential, ball, custom_radial };

/// Radial convolution kernel description.
///   gaussian:      K(z) = a exp(-|z|^2)
///   exponential:   K(z) = a exp(-|z|)
///   ball:          K(z) = a 1_{|z| < R}
///   custom_radial: piecewise-linear table of (r, value) pairs
struct KernelSpec {
  KernelKind kind = KernelKind::gaussian;
  double amplitude = 1.0;
  double radius = 0.0;                              // ball only
  std::vector<std::pair<double, double>> table;     // custom_radial only

  double value_at(double r) const;
  double at_origin() const { return value_at(0.0); }

  static KernelSpec gaussian(double a = 1.0);
  static KernelSpec exponential(double a = 1.0);
  static KernelSpec ball(double R, double a = 1.0);
  static KernelSpec custom(std::vector<std::pair<double, double>> table);

  static KernelSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Largest delta with K(z) = K(0) for |z| < delta (0 for strictly decreasing
/// kernels, R for the ball).
double kernel_plateau_radius(const KernelSpec& spec);

/// K evaluated at the min-image displacement of each cell from the origin.
/// custom_radial tables must cover [0, sqrt(dim)*L].
ScalarField sample_kernel(const KernelSpec& spec, const Grid& grid);

/// cell_volume-scaled circular convolution, K* f ~ int K(x-y) f(y) dy.
/// Takes the raw sampled kernel field (origin-centred, as from sample_kernel).
ScalarField convolve(const ScalarField& kernel_field, const ScalarField& f);

/// Real Fourier symbol K-hat(xi) of an origin-centred kernel field:
/// cell_volume * DFT of the samples rolled so the origin cell is index 0.
std::vector<double> kernel_symbol(const ScalarField& kernel_field);

/// Sampled kernel with its symbol cached; the workhorse for iterative solvers.
class SampledKernel {
 public:
  SampledKernel(const KernelSpec& spec, const Grid& grid);

  const KernelSpec& spec() const { return spec_; }
  const Grid& grid() const { return field_.grid(); }
  const ScalarField& field() const { return field_; }
  const std::vector<double>& symbol() const { return symbol_; }
  double at_origin() const { return spec_.at_origin(); }
  double plateau_radius() const { return kernel_plateau_radius(spec_); }

  ScalarField convolve(const ScalarField& f) const;

 private:
  KernelSpec spec_;
  ScalarField field_;
  std::vector<double> symbol_;
};

/// The 3x3 Fourier symbol K-hat(xi) [ (Id - R(xi))/(|xi|^2+1) + R(xi) ],
/// R(xi) = xi xi^T / |xi|^2, R(0) := 0. Stored as iso(xi) Id + ridge(xi) R(xi)
/// with iso = K-hat/(|xi|^2+1) and ridge = K-hat - iso (both real; the matrix
/// is symmetric and even in xi by construction).
class TensorMultiplier {
 public:
  static TensorMultiplier isotropic(const Grid& grid, double c);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& iso() const { return iso_; }
  const std::vector<double>& ridge() const { return ridge_; }

  /// Dense 3x3 matrix at a flat frequency index (row-major).
  std::array<double, 9> matrix_at(std::size_t flat) const;

  /// Spectral application F^-1(K-hat U-hat).
  VectorField apply(const VectorField& U) const;
  SpectralVector apply(const SpectralVector& U) const;

  friend TensorMultiplier dual_multiplier(const KernelSpec&, const Grid&);

 private:
  explicit TensorMultiplier(const Grid& grid)
      : grid_(grid), iso_(grid.cell_count(), 0.0), ridge_(grid.cell_count(), 0.0) {}
  Grid grid_;
  std::vector<double> iso_;
  std::vector<double> ridge_;
};

/// Dual kernel symbol of Theorem 1.4 for a dim-3 grid.
TensorMultiplier dual_multiplier(const KernelSpec& spec, const Grid& grid);

}  // namespace nlm
