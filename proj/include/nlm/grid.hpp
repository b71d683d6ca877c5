#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace nlm {

/// Uniform periodic box [-L, L)^dim with n cells per axis.
///
/// Cell i along an axis sits at x_i = -L + i*h, h = 2L/n. The derivative
/// wavenumber at index i is pi*m/L with m = i for i < n/2, m = i - n for
/// i > n/2, and m = 0 at the Nyquist index i = n/2 (a one-sided -n/2 mode
/// has no conjugate partner; odd spectral symbols must vanish there so that
/// real fields stay real).
class Grid {
 public:
  Grid(int dim, int n, double half_width) : dim_(dim), n_(n), half_width_(half_width) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("Grid: dim must be 1, 2 or 3");
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("Grid: n must be even and >= 8");
    if (!(half_width > 0.0)) throw std::invalid_argument("Grid: half_width must be positive");
  }

  int dim() const { return dim_; }
  int n() const { return n_; }
  double half_width() const { return half_width_; }
  double spacing() const { return 2.0 * half_width_ / n_; }
  double cell_volume() const {
    double h = spacing(), v = h;
    for (int d = 1; d < dim_; ++d) v *= h;
    return v;
  }
  std::size_t cell_count() const {
    std::size_t c = static_cast<std::size_t>(n_);
    for (int d = 1; d < dim_; ++d) c *= static_cast<std::size_t>(n_);
    return c;
  }

  /// Physical coordinate of cell index i along one axis.
  double coord(int i) const { return -half_width_ + spacing() * i; }

  /// Derivative wavenumber pi*m/L at index i (Nyquist index -> 0).
  double wavenumber(int i) const {
    if (i == n_ / 2) return 0.0;
    int m = (i <= n_ / 2) ? i : i - n_;
    return M_PI * m / half_width_;
  }

  /// Wrap a displacement into [-L, L).
  double min_image(double d) const {
    double span = 2.0 * half_width_;
    d = std::fmod(d + half_width_, span);
    if (d < 0) d += span;
    return d - half_width_;
  }

  /// Min-image distance of cell (multi-index) from the origin.
  double min_image_radius(const std::array<int, 3>& idx) const {
    double r2 = 0.0;
    for (int d = 0; d < dim_; ++d) {
      double c = min_image(coord(idx[d]));
      r2 += c * c;
    }
    return std::sqrt(r2);
  }

  /// Row-major flat index (unused trailing components must be 0).
  std::size_t flat(const std::array<int, 3>& idx) const {
    std::size_t f = 0;
    for (int d = 0; d < dim_; ++d) f = f * n_ + static_cast<std::size_t>(idx[d]);
    return f;
  }

  /// Inverse of flat(): multi-index of a flat cell index.
  std::array<int, 3> unflat(std::size_t f) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int d = dim_ - 1; d >= 0; --d) {
      idx[d] = static_cast<int>(f % n_);
      f /= n_;
    }
    return idx;
  }

  bool operator==(const Grid& o) const {
    return dim_ == o.dim_ && n_ == o.n_ && half_width_ == o.half_width_;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }

 private:
  int dim_;
  int n_;
  double half_width_;
};

}  // namespace nlm
