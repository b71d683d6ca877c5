#include "nlm/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "nlm/parallel.hpp"

namespace nlm {
namespace {

// Wavenumber vector of a flat spectral index (components beyond dim are 0).
inline void wavevec(const Grid& g, std::size_t flat, double k[3]) {
  k[0] = k[1] = k[2] = 0.0;
  const int n = g.n();
  for (int d = g.dim() - 1; d >= 0; --d) {
    k[d] = g.wavenumber(static_cast<int>(flat % n));
    flat /= static_cast<std::size_t>(n);
  }
}

}  // namespace

double integrate(const ScalarField& f) {
  return f.grid().cell_volume() * parallel_sum(f.size(), [&](std::size_t i) { return f[i]; });
}

double inner(const ScalarField& f, const ScalarField& g) {
  if (f.grid() != g.grid()) throw std::invalid_argument("inner: grid mismatch");
  return f.grid().cell_volume() *
         parallel_sum(f.size(), [&](std::size_t i) { return f[i] * g[i]; });
}

double inner(const VectorField& f, const VectorField& g) {
  if (f.grid() != g.grid()) throw std::invalid_argument("inner: grid mismatch");
  return f.grid().cell_volume() * parallel_sum(f.comp(0).size(), [&](std::size_t i) {
           return f.comp(0)[i] * g.comp(0)[i] + f.comp(1)[i] * g.comp(1)[i] +
                  f.comp(2)[i] * g.comp(2)[i];
         });
}

double lp_norm(const ScalarField& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  double s = parallel_sum(f.size(), [&](std::size_t i) { return std::pow(std::abs(f[i]), p); });
  return std::pow(f.grid().cell_volume() * s, 1.0 / p);
}

double lp_norm(const VectorField& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  double s = parallel_sum(f.comp(0).size(),
                          [&](std::size_t i) { return std::pow(f.magnitude_at(i), p); });
  return std::pow(f.grid().cell_volume() * s, 1.0 / p);
}

double spectral_inner(const SpectralScalar& f, const SpectralScalar& g) {
  if (f.grid() != g.grid()) throw std::invalid_argument("spectral_inner: grid mismatch");
  const double w = f.grid().cell_volume() / static_cast<double>(f.grid().cell_count());
  return w * parallel_sum(f.size(), [&](std::size_t i) {
           return f[i].real() * g[i].real() + f[i].imag() * g[i].imag();
         });
}

VectorField gradient(const ScalarField& phi) {
  const Grid& g = phi.grid();
  if (g.dim() != 3) throw std::invalid_argument("gradient: dim-3 grid required (use derivative)");
  SpectralScalar ph = fft_forward(phi);
  SpectralVector out(g);
  parallel_for(ph.size(), [&](std::size_t i) {
    double k[3];
    wavevec(g, i, k);
    std::complex<double> iv(-ph[i].imag(), ph[i].real());  // i*phi-hat
    out.comp(0)[i] = iv * k[0];
    out.comp(1)[i] = iv * k[1];
    out.comp(2)[i] = iv * k[2];
  });
  return fft_inverse(out);
}

ScalarField derivative(const ScalarField& f, int axis) {
  const Grid& g = f.grid();
  if (axis < 0 || axis >= g.dim()) throw std::invalid_argument("derivative: bad axis");
  SpectralScalar fh = fft_forward(f);
  parallel_for(fh.size(), [&](std::size_t i) {
    double k[3];
    wavevec(g, i, k);
    std::complex<double> iv(-fh[i].imag(), fh[i].real());
    fh[i] = iv * k[axis];
  });
  return fft_inverse(fh);
}

ScalarField divergence(const VectorField& E) {
  const Grid& g = E.grid();
  SpectralVector eh = fft_forward(E);
  SpectralScalar out(g);
  parallel_for(out.size(), [&](std::size_t i) {
    double k[3];
    wavevec(g, i, k);
    std::complex<double> s = eh.comp(0)[i] * k[0] + eh.comp(1)[i] * k[1] + eh.comp(2)[i] * k[2];
    out[i] = std::complex<double>(-s.imag(), s.real());  // i*s
  });
  return fft_inverse(out);
}

SpectralVector curl_hat(const SpectralVector& E) {
  const Grid& g = E.grid();
  SpectralVector out(g);
  parallel_for(E.comp(0).size(), [&](std::size_t i) {
    double k[3];
    wavevec(g, i, k);
    std::complex<double> ex = E.comp(0)[i], ey = E.comp(1)[i], ez = E.comp(2)[i];
    std::complex<double> cx = ez * k[1] - ey * k[2];
    std::complex<double> cy = ex * k[2] - ez * k[0];
    std::complex<double> cz = ey * k[0] - ex * k[1];
    out.comp(0)[i] = std::complex<double>(-cx.imag(), cx.real());
    out.comp(1)[i] = std::complex<double>(-cy.imag(), cy.real());
    out.comp(2)[i] = std::complex<double>(-cz.imag(), cz.real());
  });
  return out;
}

VectorField curl(const VectorField& E) { return fft_inverse(curl_hat(fft_forward(E))); }

VectorField curl_curl(const VectorField& E) {
  return fft_inverse(curl_hat(curl_hat(fft_forward(E))));
}

std::pair<VectorField, VectorField> helmholtz_project(const VectorField& E) {
  const Grid& g = E.grid();
  SpectralVector eh = fft_forward(E);
  SpectralVector sol(g), irr(g);
  parallel_for(eh.comp(0).size(), [&](std::size_t i) {
    double k[3];
    wavevec(g, i, k);
    double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    std::complex<double> ex = eh.comp(0)[i], ey = eh.comp(1)[i], ez = eh.comp(2)[i];
    if (k2 > 0.0) {
      std::complex<double> dot = (ex * k[0] + ey * k[1] + ez * k[2]) / k2;
      irr.comp(0)[i] = dot * k[0];
      irr.comp(1)[i] = dot * k[1];
      irr.comp(2)[i] = dot * k[2];
      sol.comp(0)[i] = ex - irr.comp(0)[i];
      sol.comp(1)[i] = ey - irr.comp(1)[i];
      sol.comp(2)[i] = ez - irr.comp(2)[i];
    } else {
      // R(0) := 0, constants belong to the solenoidal part
      sol.comp(0)[i] = ex;
      sol.comp(1)[i] = ey;
      sol.comp(2)[i] = ez;
    }
  });
  return {fft_inverse(sol), fft_inverse(irr)};
}

VectorField project_irrotational(const VectorField& E) {
  return helmholtz_project(E).second;
}

double curl_norm_rel(const VectorField& E) {
  VectorField c = curl(E);
  double cn = std::sqrt(inner(c, c));
  double en = std::sqrt(inner(E, E));
  return en > 0.0 ? cn / en : 0.0;
}

}  // namespace nlm
