#include "nlm/kerr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlm/parallel.hpp"

namespace nlm {

KerrReport kerr_energy(const VectorField& E, const SampledKernel& K) {
  const Grid& g = E.grid();
  if (g != K.grid()) throw std::invalid_argument("kerr_energy: grid mismatch");
  double e2 = inner(E, E);
  if (!(e2 > 0.0)) throw std::invalid_argument("kerr_energy: zero field");

  VectorField c = curl(E);
  KerrReport rep;
  rep.I_L = inner(c, c) + e2;

  ScalarField intensity(g);
  parallel_for(intensity.size(), [&](std::size_t i) {
    double m = E.magnitude_at(i);
    intensity[i] = m * m;
  });
  rep.I_NL = inner(K.convolve(intensity), intensity);

  rep.bound = 1.0 / (4.0 * K.at_origin());
  rep.attained_prediction = K.plateau_radius() > 0.0;
  if (rep.I_NL > 0.0) {
    rep.quotient = rep.I_L * rep.I_L / (4.0 * rep.I_NL);
    rep.t_star = std::sqrt(rep.I_L / rep.I_NL);
    rep.energy_at_nehari = rep.quotient;
  }
  return rep;
}

ScalarField bump_potential(const Grid& grid, double rho) {
  if (!(rho > 0.0 && rho < grid.half_width()))
    throw std::invalid_argument("bump_potential: need 0 < rho < L");
  ScalarField phi(grid);
  parallel_for(phi.size(), [&](std::size_t i) {
    double r = grid.min_image_radius(grid.unflat(i));
    double u2 = (r / rho) * (r / rho);
    phi[i] = u2 < 1.0 ? std::exp(-1.0 / (1.0 - u2)) : 0.0;
  });
  return phi;
}

VectorField kerr_minimizer(const SampledKernel& K) {
  double delta = K.plateau_radius();
  if (!(delta > 0.0))
    throw std::invalid_argument(
        "kerr_minimizer: delta_K = 0 (kernel has no plateau at the origin); "
        "the infimum 1/(4K(0)) is not attained for this kernel");
  const Grid& g = K.grid();
  double rho = delta / 2.0;
  if (!(rho < g.half_width()))
    throw std::invalid_argument("kerr_minimizer: bump support exceeds the box");

  VectorField E = gradient(bump_potential(g, rho));
  // spectral ringing spreads 1e-9-level values box-wide; the analytic field
  // vanishes outside the bump ball, so zero those cells
  parallel_for(E.comp(0).size(), [&](std::size_t i) {
    if (g.min_image_radius(g.unflat(i)) >= rho) {
      E.comp(0)[i] = 0.0;
      E.comp(1)[i] = 0.0;
      E.comp(2)[i] = 0.0;
    }
  });
  KerrReport rep = kerr_energy(E, K);
  double t = rep.t_star.value();
  for (int c = 0; c < 3; ++c)
    parallel_for(E.comp(c).size(), [&](std::size_t i) { E.comp(c)[i] *= t; });
  return E;
}

std::vector<std::pair<int, KerrReport>> kerr_shrinking_family(const ScalarField& phi,
                                                              const std::vector<int>& scales,
                                                              const SampledKernel& K) {
  const Grid& g = phi.grid();
  if (g.dim() != 3) throw std::invalid_argument("kerr_shrinking_family: dim-3 grid required");
  if (g != K.grid()) throw std::invalid_argument("kerr_shrinking_family: grid mismatch");
  const int n = g.n();

  // support radius of grad(phi) in cells, from the sampled potential
  VectorField base = gradient(phi);
  double maxmag = 0.0;
  for (std::size_t i = 0; i < base.comp(0).size(); ++i)
    maxmag = std::max(maxmag, base.magnitude_at(i));
  double supp_r = 0.0;
  for (std::size_t i = 0; i < base.comp(0).size(); ++i)
    if (base.magnitude_at(i) > 1e-8 * maxmag)
      supp_r = std::max(supp_r, g.min_image_radius(g.unflat(i)));

  std::vector<std::pair<int, KerrReport>> out;
  for (int s : scales) {
    if (s < 1) throw std::invalid_argument("kerr_shrinking_family: scales must be >= 1");
    if (2.0 * supp_r / s < 8.0 * g.spacing())
      throw std::invalid_argument("kerr_shrinking_family: scale " + std::to_string(s) +
                                  " leaves fewer than 8 cells across the support");
    // phi_s(x) = sqrt(s) phi(s x): exact index remap, zero where s*x leaves the box
    ScalarField phis(g);
    double amp = std::sqrt(static_cast<double>(s));
    parallel_for(phis.size(), [&](std::size_t i) {
      auto idx = g.unflat(i);
      std::array<int, 3> src{0, 0, 0};
      bool inside = true;
      for (int d = 0; d < 3; ++d) {
        int j = s * idx[d] - (s - 1) * (n / 2);
        if (j < 0 || j >= n) inside = false;
        src[d] = inside ? j : 0;
      }
      phis[i] = inside ? amp * phi[g.flat(src)] : 0.0;
    });
    out.emplace_back(s, kerr_energy(gradient(phis), K));
  }
  return out;
}

double support_diameter(const VectorField& E, double rel_threshold) {
  const Grid& g = E.grid();
  double maxmag = 0.0;
  for (std::size_t i = 0; i < E.comp(0).size(); ++i)
    maxmag = std::max(maxmag, E.magnitude_at(i));
  if (maxmag == 0.0) return 0.0;

  std::vector<std::array<int, 3>> cells;
  for (std::size_t i = 0; i < E.comp(0).size(); ++i)
    if (E.magnitude_at(i) > rel_threshold * maxmag) cells.push_back(g.unflat(i));

  if (cells.size() <= 4000) {
    double best = 0.0;
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        double d2 = 0.0;
        for (int d = 0; d < 3; ++d) {
          double dd = g.min_image((cells[a][d] - cells[b][d]) * g.spacing());
          d2 += dd * dd;
        }
        best = std::max(best, d2);
      }
    return std::sqrt(best);
  }
  // large support: per-axis min-image extents (circumference minus the
  // largest empty arc), combined as an upper envelope estimate
  double d2 = 0.0;
  for (int d = 0; d < 3; ++d) {
    std::vector<char> occ(static_cast<std::size_t>(g.n()), 0);
    for (const auto& c : cells) occ[static_cast<std::size_t>(c[d])] = 1;
    int gap = 0, run = 0;
    for (int pass = 0; pass < 2; ++pass)  // wraparound runs
      for (int i = 0; i < g.n(); ++i) {
        if (!occ[static_cast<std::size_t>(i)]) gap = std::max(gap, ++run);
        else run = 0;
      }
    double extent = std::min((g.n() - std::min(gap, g.n())) * g.spacing(), g.half_width());
    d2 += extent * extent;
  }
  return std::sqrt(d2);
}

}  // namespace nlm
