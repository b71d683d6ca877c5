#include "nlm/duality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlm/parallel.hpp"

namespace nlm {
namespace {

inline double symbol_radius(const Grid& g, std::size_t flat) {
  double k2 = 0.0;
  const int n = g.n();
  for (int d = g.dim() - 1; d >= 0; --d) {
    double k = g.wavenumber(static_cast<int>(flat % n));
    flat /= static_cast<std::size_t>(n);
    k2 += k * k;
  }
  return std::sqrt(k2);
}

// F^-1(sym * F(f)) for a real per-frequency symbol.
ScalarField apply_symbol(const std::vector<double>& sym, const ScalarField& f) {
  SpectralScalar fh = fft_forward(f);
  parallel_for(fh.size(), [&](std::size_t i) { fh[i] *= sym[i]; });
  return fft_inverse(fh);
}

}  // namespace

std::vector<double> SymbolSpec::sample(const Grid& grid) const {
  std::vector<double> m(grid.cell_count());
  if (form == Form::bessel) {
    if (s < 0.0) throw std::invalid_argument("SymbolSpec: bessel order must be >= 0");
    for (std::size_t i = 0; i < m.size(); ++i) {
      double k = symbol_radius(grid, i);
      m[i] = std::pow(1.0 + k * k, s);
    }
  } else {
    if (table.size() < 2) throw std::invalid_argument("SymbolSpec: need >= 2 table rows");
    for (std::size_t i = 0; i < m.size(); ++i) {
      double k = symbol_radius(grid, i);
      if (k <= table.front().first) {
        m[i] = table.front().second;
        continue;
      }
      if (k > table.back().first)
        throw std::invalid_argument("SymbolSpec: table does not cover the frequency range");
      auto hi = std::lower_bound(table.begin(), table.end(), k,
                                 [](const auto& e, double x) { return e.first < x; });
      auto lo = hi - 1;
      double t = (k - lo->first) / (hi->first - lo->first);
      m[i] = (1.0 - t) * lo->second + t * hi->second;
    }
  }
  for (double v : m)
    if (!(v > 0.0)) throw std::invalid_argument("SymbolSpec: symbol must be positive");
  return m;
}

PrimalResult primal_ground_state(const SymbolSpec& mspec, double r, const Grid& grid,
                                 const SolveOptions& opts) {
  if (!(r > 2.0)) throw std::invalid_argument("primal_ground_state: r must be > 2");
  std::vector<double> m = mspec.sample(grid);
  std::vector<double> minv(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) minv[i] = 1.0 / m[i];

  PrimalResult out{ScalarField(grid), 0.0, 0.0, false, 0};
  ScalarField& u = out.u;
  // gaussian bump start
  parallel_for(u.size(), [&](std::size_t i) {
    double rr = grid.min_image_radius(grid.unflat(i));
    double t = 2.0 * rr / grid.half_width();
    u[i] = std::exp(-t * t);
  });

  auto quadratic_form = [&](const ScalarField& w) {
    SpectralScalar wh = fft_forward(w);
    const double wgt = grid.cell_volume() / static_cast<double>(grid.cell_count());
    return wgt *
           parallel_sum(wh.size(), [&](std::size_t i) { return m[i] * std::norm(wh[i]); });
  };

  int it = 0;
  for (; it < opts.max_iter; ++it) {
    ScalarField nl(grid);
    parallel_for(nl.size(), [&](std::size_t i) {
      nl[i] = std::pow(std::abs(u[i]), r - 2.0) * u[i];
    });
    ScalarField w = apply_symbol(minv, nl);
    double qf = quadratic_form(w);
    double nr = grid.cell_volume() *
                parallel_sum(w.size(), [&](std::size_t i) { return std::pow(std::abs(w[i]), r); });
    if (!(qf > 0.0) || !(nr > 0.0)) break;
    double scale = std::pow(qf / nr, 1.0 / (r - 2.0));
    parallel_for(w.size(), [&](std::size_t i) { w[i] *= scale; });
    double d2 = parallel_sum(w.size(), [&](std::size_t i) {
      double d = w[i] - u[i];
      return d * d;
    });
    u = std::move(w);
    if (std::sqrt(d2 * grid.cell_volume()) <= opts.tol) {
      out.converged = true;
      ++it;
      break;
    }
  }
  out.iterations = it;

  double ur = grid.cell_volume() *
              parallel_sum(u.size(), [&](std::size_t i) { return std::pow(std::abs(u[i]), r); });
  out.I_value = (0.5 - 1.0 / r) * ur;
  {
    ScalarField pu = apply_symbol(m, u);
    double num = parallel_sum(u.size(), [&](std::size_t i) {
      double d = pu[i] - std::pow(std::abs(u[i]), r - 2.0) * u[i];
      return d * d;
    });
    double den = parallel_sum(pu.size(), [&](std::size_t i) { return pu[i] * pu[i]; });
    out.el_residual = den > 0.0 ? std::sqrt(num / den) : 0.0;
  }
  return out;
}

DualScalarResult dual_ground_state_scalar(const SymbolSpec& mspec, double r, const Grid& grid,
                                          const SolveOptions& opts) {
  if (!(r > 2.0)) throw std::invalid_argument("dual_ground_state_scalar: r must be > 2");
  const double rp = r / (r - 1.0);
  std::vector<double> m = mspec.sample(grid);
  std::vector<double> minv(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) minv[i] = 1.0 / m[i];

  DualScalarResult out{ScalarField(grid), 0.0, 0.0, false, 0};
  ScalarField& v = out.v;
  parallel_for(v.size(), [&](std::size_t i) {
    double rr = grid.min_image_radius(grid.unflat(i));
    double t = 2.0 * rr / grid.half_width();
    v[i] = std::exp(-t * t);
  });
  double nrm = lp_norm(v, rp);
  parallel_for(v.size(), [&](std::size_t i) { v[i] /= nrm; });

  const double expo = (2.0 - rp) / (rp - 1.0);
  int it = 0;
  for (; it < opts.max_iter; ++it) {
    ScalarField w = apply_symbol(minv, v);
    ScalarField step(grid);
    parallel_for(step.size(), [&](std::size_t i) {
      double mag = std::abs(w[i]);
      step[i] = mag > 0.0 ? std::pow(mag, expo) * w[i] : 0.0;
    });
    double sn = lp_norm(step, rp);
    parallel_for(step.size(), [&](std::size_t i) { step[i] /= sn; });
    double d2 = parallel_sum(step.size(), [&](std::size_t i) {
      double d = step[i] - v[i];
      return d * d;
    });
    v = std::move(step);
    if (std::sqrt(d2 * grid.cell_volume()) <= opts.tol) {
      out.converged = true;
      ++it;
      break;
    }
  }
  out.iterations = it;

  // Nehari scale: J'(tv)[tv] = 0 at t = (Q_v / ||v||^{r'})^{1/(r'-2)}
  double Qv = inner(apply_symbol(minv, v), v);
  double vn = lp_norm(v, rp);
  double t = std::pow(Qv / std::pow(vn, rp), 1.0 / (rp - 2.0));
  parallel_for(v.size(), [&](std::size_t i) { v[i] *= t; });

  double Qs = inner(apply_symbol(minv, v), v);
  out.J_value = (1.0 / rp - 0.5) * Qs;
  {
    ScalarField kv = apply_symbol(minv, v);
    double num = parallel_sum(v.size(), [&](std::size_t i) {
      double mag = std::abs(v[i]);
      double lhs = mag > 0.0 ? std::pow(mag, rp - 2.0) * v[i] : 0.0;
      double d = lhs - kv[i];
      return d * d;
    });
    double den = parallel_sum(kv.size(), [&](std::size_t i) { return kv[i] * kv[i]; });
    out.dual_residual = den > 0.0 ? std::sqrt(num / den) : 0.0;
  }
  return out;
}

DualityCheck duality_correspondence_check(const PrimalResult& primal,
                                          const DualScalarResult& dual, const SymbolSpec& m,
                                          double r) {
  (void)m;
  const Grid& g = primal.u.grid();
  if (g != dual.v.grid())
    throw std::invalid_argument("duality_correspondence_check: grid mismatch");
  const double rp = r / (r - 1.0);

  ScalarField w(g);
  parallel_for(w.size(), [&](std::size_t i) {
    w[i] = std::pow(std::abs(primal.u[i]), r - 2.0) * primal.u[i];
  });

  // translation/sign alignment by maximizing circular cross-correlation
  SpectralScalar vh = fft_forward(dual.v);
  SpectralScalar wh = fft_forward(w);
  SpectralScalar prod(g);
  parallel_for(prod.size(), [&](std::size_t i) { prod[i] = vh[i] * std::conj(wh[i]); });
  ScalarField corr = fft_inverse(prod);
  std::size_t best = 0;
  for (std::size_t i = 1; i < corr.size(); ++i)
    if (std::abs(corr[i]) > std::abs(corr[best])) best = i;
  int sign = corr[best] >= 0.0 ? 1 : -1;
  auto shift = g.unflat(best);

  // aligned w: w_shift(x) = sign * w(x - shift)
  ScalarField wal(g);
  const int n = g.n();
  parallel_for(wal.size(), [&](std::size_t i) {
    auto idx = g.unflat(i);
    std::array<int, 3> src{0, 0, 0};
    for (int d = 0; d < g.dim(); ++d) src[d] = ((idx[d] - shift[d]) % n + n) % n;
    wal[i] = sign * w[g.flat(src)];
  });

  DualityCheck out;
  out.shift = shift;
  out.sign = sign;
  ScalarField diff(g);
  parallel_for(diff.size(), [&](std::size_t i) { diff[i] = dual.v[i] - wal[i]; });
  out.map_residual = lp_norm(diff, rp) / lp_norm(dual.v, rp);
  out.energy_gap = std::abs(primal.I_value - dual.J_value) / std::abs(primal.I_value);
  return out;
}

}  // namespace nlm
