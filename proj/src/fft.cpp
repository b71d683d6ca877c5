#include "nlm/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "nlm/parallel.hpp"

namespace nlm {
namespace {

// Plan cache keyed by (dim, n). Plans are created once under a lock
// (the FFTW planner is not thread-safe) with FFTW_ESTIMATE, which picks the
// algorithm deterministically, and FFTW_UNALIGNED so fftw_execute_dft may run
// on any caller buffer. fftw_execute_dft itself is thread-safe.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

PlanPair& plans_for(const Grid& g) {
  static std::map<std::pair<int, int>, PlanPair> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(g.dim(), g.n());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<std::complex<double>> buf(g.cell_count());
  auto* b = reinterpret_cast<fftw_complex*>(buf.data());
  int n = g.n();
  int dims[3] = {n, n, n};
  PlanPair p;
  p.fwd = fftw_plan_dft(g.dim(), dims, b, b, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft(g.dim(), dims, b, b, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(key, p).first->second;
}

}  // namespace

SpectralScalar fft_forward(const ScalarField& f) {
  const Grid& g = f.grid();
  SpectralScalar out(g);
  const std::size_t count = g.cell_count();
  parallel_for(count, [&](std::size_t i) { out[i] = {f[i], 0.0}; });
  auto& p = plans_for(g);
  auto* b = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(p.fwd, b, b);
  return out;
}

ScalarField fft_inverse(const SpectralScalar& s) {
  const Grid& g = s.grid();
  std::vector<std::complex<double>> buf(s.data(), s.data() + s.size());
  auto& p = plans_for(g);
  auto* b = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_execute_dft(p.bwd, b, b);
  ScalarField out(g);
  const double scale = 1.0 / static_cast<double>(g.cell_count());
  parallel_for(out.size(), [&](std::size_t i) { out[i] = buf[i].real() * scale; });
  return out;
}

SpectralVector fft_forward(const VectorField& f) {
  SpectralVector out(f.grid());
  for (int c = 0; c < 3; ++c) out.comp(c) = fft_forward(f.comp(c));
  return out;
}

VectorField fft_inverse(const SpectralVector& s) {
  return VectorField(fft_inverse(s.comp(0)), fft_inverse(s.comp(1)), fft_inverse(s.comp(2)));
}

}  // namespace nlm
