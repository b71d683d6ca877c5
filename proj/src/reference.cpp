#include "nlm/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace nlm {
namespace ref {

double integrate(const ScalarField& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i];
  return f.grid().cell_volume() * s;
}

double lp_norm(const ScalarField& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("ref::lp_norm: p must be >= 1");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += std::pow(std::abs(f[i]), p);
  return std::pow(f.grid().cell_volume() * s, 1.0 / p);
}

ScalarField convolve_direct(const ScalarField& kernel_field, const ScalarField& f) {
  const Grid& g = f.grid();
  if (kernel_field.grid() != g) throw std::invalid_argument("ref::convolve_direct: grid mismatch");
  const int n = g.n();
  ScalarField out(g);
  // (K*f)(x_i) = h^dim sum_j K(minimg(x_i - x_j)) f(x_j); the kernel field is
  // origin-centred, so K(minimg(...)) = kernel_field at index (i - j + n/2) mod n
  for (std::size_t a = 0; a < out.size(); ++a) {
    auto ia = g.unflat(a);
    double acc = 0.0;
    for (std::size_t b = 0; b < f.size(); ++b) {
      auto ib = g.unflat(b);
      std::array<int, 3> d{0, 0, 0};
      for (int dd = 0; dd < g.dim(); ++dd)
        d[dd] = ((ia[dd] - ib[dd] + n / 2) % n + n) % n;
      acc += kernel_field[g.flat(d)] * f[b];
    }
    out[a] = acc * g.cell_volume();
  }
  return out;
}

double q_form_direct(const ScalarField& kernel_field, const ScalarField& f) {
  ScalarField conv = convolve_direct(kernel_field, f);
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += conv[i] * f[i];
  return f.grid().cell_volume() * s;
}

}  // namespace ref
}  // namespace nlm
