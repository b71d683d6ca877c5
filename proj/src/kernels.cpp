#include "nlm/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "nlm/parallel.hpp"

namespace nlm {

double KernelSpec::value_at(double r) const {
  r = std::abs(r);
  switch (kind) {
    case KernelKind::gaussian:
      return amplitude * std::exp(-r * r);
    case KernelKind::exponential:
      return amplitude * std::exp(-r);
    case KernelKind::ball:
      return r < radius ? amplitude : 0.0;
    case KernelKind::custom_radial: {
      if (table.empty()) throw std::invalid_argument("custom_radial kernel: empty table");
      if (r <= table.front().first) return amplitude * table.front().second;
      if (r > table.back().first)
        throw std::invalid_argument("custom_radial kernel: table does not cover radius");
      auto hi = std::lower_bound(table.begin(), table.end(), r,
                                 [](const auto& e, double x) { return e.first < x; });
      auto lo = hi - 1;
      double t = (r - lo->first) / (hi->first - lo->first);
      return amplitude * ((1.0 - t) * lo->second + t * hi->second);
    }
  }
  return 0.0;
}

KernelSpec KernelSpec::gaussian(double a) { return {KernelKind::gaussian, a, 0.0, {}}; }
KernelSpec KernelSpec::exponential(double a) { return {KernelKind::exponential, a, 0.0, {}}; }
KernelSpec KernelSpec::ball(double R, double a) {
  if (!(R > 0.0)) throw std::invalid_argument("ball kernel: radius must be positive");
  return {KernelKind::ball, a, R, {}};
}
KernelSpec KernelSpec::custom(std::vector<std::pair<double, double>> table) {
  KernelSpec s{KernelKind::custom_radial, 1.0, 0.0, std::move(table)};
  if (s.table.size() < 2) throw std::invalid_argument("custom_radial kernel: need >= 2 samples");
  for (std::size_t i = 1; i < s.table.size(); ++i)
    if (!(s.table[i].first > s.table[i - 1].first))
      throw std::invalid_argument("custom_radial kernel: radii must increase");
  return s;
}

KernelSpec KernelSpec::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  double a = j.value("amplitude", 1.0);
  if (!(a > 0.0)) throw std::invalid_argument("kernel: amplitude must be positive");
  if (kind == "gaussian") return gaussian(a);
  if (kind == "exponential") return exponential(a);
  if (kind == "ball") return ball(j.at("radius").get<double>(), a);
  if (kind == "custom_radial") {
    std::vector<std::pair<double, double>> table;
    for (const auto& row : j.at("table")) table.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
    KernelSpec s = custom(std::move(table));
    s.amplitude = a;
    return s;
  }
  throw std::invalid_argument("kernel: unknown kind '" + kind + "'");
}

nlohmann::json KernelSpec::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case KernelKind::gaussian: j["kind"] = "gaussian"; break;
    case KernelKind::exponential: j["kind"] = "exponential"; break;
    case KernelKind::ball: j["kind"] = "ball"; j["radius"] = radius; break;
    case KernelKind::custom_radial: {
      j["kind"] = "custom_radial";
      nlohmann::json t = nlohmann::json::array();
      for (const auto& [r, v] : table) t.push_back({r, v});
      j["table"] = t;
      break;
    }
  }
  j["amplitude"] = amplitude;
  return j;
}

double kernel_plateau_radius(const KernelSpec& spec) {
  switch (spec.kind) {
    case KernelKind::gaussian:
    case KernelKind::exponential:
      return 0.0;
    case KernelKind::ball:
      return spec.radius;
    case KernelKind::custom_radial: {
      double v0 = spec.table.front().second;
      double delta = 0.0;
      for (const auto& [r, v] : spec.table) {
        if (std::abs(v - v0) > 1e-12) break;
        delta = r;
      }
      return delta;
    }
  }
  return 0.0;
}

ScalarField sample_kernel(const KernelSpec& spec, const Grid& grid) {
  if (spec.kind == KernelKind::custom_radial) {
    double needed = std::sqrt(static_cast<double>(grid.dim())) * grid.half_width();
    if (spec.table.back().first < needed)
      throw std::invalid_argument("custom_radial kernel: table must cover [0, sqrt(dim)*L]");
  }
  ScalarField out(grid);
  parallel_for(out.size(), [&](std::size_t i) {
    out[i] = spec.value_at(grid.min_image_radius(grid.unflat(i)));
  });
  return out;
}

namespace {

// Roll so the origin cell (index n/2 per axis) moves to index 0.
ScalarField roll_origin_to_zero(const ScalarField& f) {
  const Grid& g = f.grid();
  const int n = g.n();
  ScalarField out(g);
  parallel_for(out.size(), [&](std::size_t i) {
    auto idx = g.unflat(i);
    std::array<int, 3> src{0, 0, 0};
    for (int d = 0; d < g.dim(); ++d) src[d] = (idx[d] + n / 2) % n;
    out[i] = f[g.flat(src)];
  });
  return out;
}

}  // namespace

std::vector<double> kernel_symbol(const ScalarField& kernel_field) {
  SpectralScalar kh = fft_forward(roll_origin_to_zero(kernel_field));
  const double vol = kernel_field.grid().cell_volume();
  std::vector<double> sym(kh.size());
  // radial kernels give even displacement samples, so the DFT is real
  parallel_for(sym.size(), [&](std::size_t i) { sym[i] = vol * kh[i].real(); });
  return sym;
}

ScalarField convolve(const ScalarField& kernel_field, const ScalarField& f) {
  if (kernel_field.grid() != f.grid()) throw std::invalid_argument("convolve: grid mismatch");
  std::vector<double> sym = kernel_symbol(kernel_field);
  SpectralScalar fh = fft_forward(f);
  parallel_for(fh.size(), [&](std::size_t i) { fh[i] *= sym[i]; });
  return fft_inverse(fh);
}

SampledKernel::SampledKernel(const KernelSpec& spec, const Grid& grid)
    : spec_(spec), field_(sample_kernel(spec, grid)), symbol_(kernel_symbol(field_)) {}

ScalarField SampledKernel::convolve(const ScalarField& f) const {
  if (f.grid() != grid()) throw std::invalid_argument("SampledKernel::convolve: grid mismatch");
  SpectralScalar fh = fft_forward(f);
  parallel_for(fh.size(), [&](std::size_t i) { fh[i] *= symbol_[i]; });
  return fft_inverse(fh);
}

TensorMultiplier TensorMultiplier::isotropic(const Grid& grid, double c) {
  TensorMultiplier m(grid);
  std::fill(m.iso_.begin(), m.iso_.end(), c);
  return m;
}

namespace {

inline void wavevec3(const Grid& g, std::size_t flat, double k[3]) {
  const int n = g.n();
  k[2] = g.wavenumber(static_cast<int>(flat % n));
  flat /= static_cast<std::size_t>(n);
  k[1] = g.wavenumber(static_cast<int>(flat % n));
  flat /= static_cast<std::size_t>(n);
  k[0] = g.wavenumber(static_cast<int>(flat % n));
}

}  // namespace

std::array<double, 9> TensorMultiplier::matrix_at(std::size_t flat) const {
  double k[3];
  wavevec3(grid_, flat, k);
  double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
  std::array<double, 9> m{};
  for (int a = 0; a < 3; ++a) m[static_cast<std::size_t>(4 * a)] = iso_[flat];
  if (k2 > 0.0) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        m[static_cast<std::size_t>(3 * a + b)] += ridge_[flat] * k[a] * k[b] / k2;
  }
  return m;
}

SpectralVector TensorMultiplier::apply(const SpectralVector& U) const {
  if (U.grid() != grid_) throw std::invalid_argument("TensorMultiplier::apply: grid mismatch");
  SpectralVector out(grid_);
  parallel_for(U.comp(0).size(), [&](std::size_t i) {
    double k[3];
    wavevec3(grid_, i, k);
    double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    std::complex<double> ux = U.comp(0)[i], uy = U.comp(1)[i], uz = U.comp(2)[i];
    std::complex<double> rx{0, 0}, ry{0, 0}, rz{0, 0};
    if (k2 > 0.0) {
      std::complex<double> dot = (ux * k[0] + uy * k[1] + uz * k[2]) / k2;
      rx = dot * k[0];
      ry = dot * k[1];
      rz = dot * k[2];
    }
    out.comp(0)[i] = iso_[i] * ux + ridge_[i] * rx;
    out.comp(1)[i] = iso_[i] * uy + ridge_[i] * ry;
    out.comp(2)[i] = iso_[i] * uz + ridge_[i] * rz;
  });
  return out;
}

VectorField TensorMultiplier::apply(const VectorField& U) const {
  return fft_inverse(apply(fft_forward(U)));
}

TensorMultiplier dual_multiplier(const KernelSpec& spec, const Grid& grid) {
  if (grid.dim() != 3) throw std::invalid_argument("dual_multiplier: dim-3 grid required");
  std::vector<double> khat = kernel_symbol(sample_kernel(spec, grid));
  TensorMultiplier m(grid);
  parallel_for(khat.size(), [&](std::size_t i) {
    double k[3];
    wavevec3(grid, i, k);
    double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    m.iso_[i] = khat[i] / (k2 + 1.0);
    m.ridge_[i] = khat[i] - m.iso_[i];
  });
  return m;
}

}  // namespace nlm
