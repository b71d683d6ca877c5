#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nlm/grid.hpp"

namespace nlm {

/// Real samples on a Grid, row-major cell order.
class ScalarField {
 public:
  explicit ScalarField(const Grid& grid, double fill = 0.0)
      : grid_(grid), values_(grid.cell_count(), fill) {}
  ScalarField(const Grid& grid, std::vector<double> values)
      : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.cell_count())
      throw std::invalid_argument("ScalarField: value count != cell count");
  }

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }
  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Three scalar components on a shared dim-3 grid.
class VectorField {
 public:
  explicit VectorField(const Grid& grid, double fill = 0.0)
      : components_{ScalarField(checked(grid), fill), ScalarField(grid, fill),
                    ScalarField(grid, fill)} {}
  VectorField(ScalarField x, ScalarField y, ScalarField z)
      : components_{std::move(x), std::move(y), std::move(z)} {
    checked(components_[0].grid());
    if (components_[1].grid() != components_[0].grid() ||
        components_[2].grid() != components_[0].grid())
      throw std::invalid_argument("VectorField: components on different grids");
  }

  const Grid& grid() const { return components_[0].grid(); }
  ScalarField& comp(int c) { return components_[static_cast<std::size_t>(c)]; }
  const ScalarField& comp(int c) const { return components_[static_cast<std::size_t>(c)]; }

  double magnitude_at(std::size_t i) const {
    double x = components_[0][i], y = components_[1][i], z = components_[2][i];
    return std::sqrt(x * x + y * y + z * z);
  }

 private:
  static const Grid& checked(const Grid& g) {
    if (g.dim() != 3) throw std::invalid_argument("VectorField: grid must have dim 3");
    return g;
  }
  std::array<ScalarField, 3> components_;
};

/// Complex Fourier coefficients of a scalar field (unnormalized DFT layout).
class SpectralScalar {
 public:
  explicit SpectralScalar(const Grid& grid)
      : grid_(grid), coeff_(grid.cell_count(), {0.0, 0.0}) {}

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return coeff_.size(); }
  std::complex<double>& operator[](std::size_t i) { return coeff_[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return coeff_[i]; }
  std::complex<double>* data() { return coeff_.data(); }
  const std::complex<double>* data() const { return coeff_.data(); }

 private:
  Grid grid_;
  std::vector<std::complex<double>> coeff_;
};

/// Per-component spectra of a vector field.
class SpectralVector {
 public:
  explicit SpectralVector(const Grid& grid)
      : components_{SpectralScalar(grid), SpectralScalar(grid), SpectralScalar(grid)} {}

  const Grid& grid() const { return components_[0].grid(); }
  SpectralScalar& comp(int c) { return components_[static_cast<std::size_t>(c)]; }
  const SpectralScalar& comp(int c) const { return components_[static_cast<std::size_t>(c)]; }

 private:
  std::array<SpectralScalar, 3> components_;
};

}  // namespace nlm
