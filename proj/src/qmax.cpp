#include "nlm/qmax.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlm/parallel.hpp"

namespace nlm {

std::string to_string(CCClass c) {
  switch (c) {
    case CCClass::compact: return "compact";
    case CCClass::vanishing: return "vanishing";
    case CCClass::dichotomy: return "dichotomy";
    case CCClass::undetermined: return "undetermined";
  }
  return "undetermined";
}

void MaximizeOptions::validate() const {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("MaximizeOptions: p must be in (1,2)");
  if (!(relaxation > 0.0 && relaxation <= 1.0))
    throw std::invalid_argument("MaximizeOptions: relaxation must be in (0,1]");
  if (max_iter < 1) throw std::invalid_argument("MaximizeOptions: max_iter must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("MaximizeOptions: tol must be positive");
}

ScalarField gaussian_bump(const Grid& grid) {
  ScalarField f(grid);
  const double L = grid.half_width();
  parallel_for(f.size(), [&](std::size_t i) {
    double r = grid.min_image_radius(grid.unflat(i));
    double u = 2.0 * r / L;
    f[i] = std::exp(-u * u);
  });
  return f;
}

namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

ScalarField random_field(const Grid& grid, std::uint64_t seed) {
  ScalarField f(grid);
  std::uint64_t s = seed;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double u = static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
    f[i] = 2.0 * u - 1.0;
  }
  return f;
}

double q_form(const SampledKernel& K, const ScalarField& f) {
  return inner(K.convolve(f), f);
}

double q_form(const TensorMultiplier& M, const VectorField& U) {
  return inner(M.apply(U), U);
}

std::array<int, 3> recenter(ScalarField& f, double p) {
  const Grid& g = f.grid();
  ScalarField mass(g);
  parallel_for(mass.size(), [&](std::size_t i) { mass[i] = std::pow(std::abs(f[i]), p); });
  ScalarField c = SampledKernel(KernelSpec::ball(g.half_width() / 4.0), g).convolve(mass);
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] > c[best]) best = i;
  auto idx = g.unflat(best);
  const int n = g.n();
  std::array<int, 3> shift{0, 0, 0};
  for (int d = 0; d < g.dim(); ++d) shift[d] = (idx[d] - n / 2 + n) % n;
  bool trivial = true;
  for (int d = 0; d < g.dim(); ++d) trivial = trivial && shift[d] == 0;
  if (!trivial) {
    ScalarField out(g);
    parallel_for(out.size(), [&](std::size_t i) {
      auto id = g.unflat(i);
      std::array<int, 3> src{0, 0, 0};
      for (int d = 0; d < g.dim(); ++d) src[d] = (id[d] + shift[d]) % n;
      out[i] = f[g.flat(src)];
    });
    f = std::move(out);
  }
  return shift;
}

namespace {

// f <- f / ||f||_p; returns the norm.
double normalize_p(ScalarField& f, double p) {
  double nrm = lp_norm(f, p);
  if (nrm > 0.0) {
    double inv = 1.0 / nrm;
    parallel_for(f.size(), [&](std::size_t i) { f[i] *= inv; });
  }
  return nrm;
}

double normalize_p(VectorField& f, double p) {
  double nrm = lp_norm(f, p);
  if (nrm > 0.0) {
    double inv = 1.0 / nrm;
    for (int c = 0; c < 3; ++c)
      parallel_for(f.comp(c).size(), [&](std::size_t i) { f.comp(c)[i] *= inv; });
  }
  return nrm;
}

constexpr double kMinRelaxation = 1.0 / 64.0;

}  // namespace

std::pair<ScalarField, MaximizerReport> maximize_scalar_Q(const SampledKernel& K,
                                                          const MaximizeOptions& opts,
                                                          const ScalarField* init_field) {
  opts.validate();
  const Grid& g = K.grid();
  const double p = opts.p;
  const double expo = 1.0 / (p - 1.0);

  ScalarField f(g);
  switch (opts.init) {
    case MaximizeOptions::Init::gaussian_bump: f = gaussian_bump(g); break;
    case MaximizeOptions::Init::random: f = random_field(g, opts.seed); break;
    case MaximizeOptions::Init::provided:
      if (!init_field) throw std::invalid_argument("maximize_scalar_Q: init field missing");
      f = *init_field;
      break;
  }
  normalize_p(f, p);

  MaximizerReport rep;
  double Q = q_form(K, f);
  if (Q <= 0.0) {
    f = gaussian_bump(g);
    normalize_p(f, p);
    Q = q_form(K, f);
    if (Q <= 0.0) {
      rep.q_value = Q;
      return {f, rep};  // converged=false: no positive starting value
    }
  }
  if (opts.record_history) rep.q_history.push_back(Q);

  int it = 0;
  for (; it < opts.max_iter; ++it) {
    ScalarField conv = K.convolve(f);
    ScalarField step(g);
    parallel_for(step.size(), [&](std::size_t i) {
      double v = conv[i];
      step[i] = v > 0.0 ? std::pow(v, expo) : 0.0;
    });
    if (opts.symmetrize) {
      rep.recenter_shift = recenter(step, p);
      step = schwarz_rearrange(step);
    }
    normalize_p(step, p);

    double alpha = opts.relaxation;
    bool accepted = false;
    ScalarField trial(g);
    double Qtrial = 0.0;
    while (alpha >= kMinRelaxation) {
      if (alpha == 1.0) {
        trial = step;
      } else {
        parallel_for(trial.size(),
                     [&](std::size_t i) { trial[i] = (1.0 - alpha) * f[i] + alpha * step[i]; });
        normalize_p(trial, p);
      }
      Qtrial = q_form(K, trial);
      if (Qtrial >= Q) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;  // ascent safeguard exhausted

    double s = parallel_sum(f.size(), [&](std::size_t i) {
      return std::pow(std::abs(trial[i] - f[i]), p);
    });
    double dist = std::pow(g.cell_volume() * s, 1.0 / p);
    f = std::move(trial);
    Q = Qtrial;
    if (opts.record_history) rep.q_history.push_back(Q);
    if (dist <= opts.tol) {
      rep.converged = true;
      ++it;
      break;
    }
  }

  rep.iterations = it;
  rep.q_value = Q;
  {
    ScalarField conv = K.convolve(f);
    double lambda = Q;
    double num = parallel_sum(f.size(), [&](std::size_t i) {
      double d = lambda * std::pow(std::max(f[i], 0.0), p - 1.0) - conv[i];
      return d * d;
    });
    double den = parallel_sum(conv.size(), [&](std::size_t i) { return conv[i] * conv[i]; });
    rep.el_residual = den > 0.0 ? std::sqrt(num / den) : 0.0;
  }
  rep.cc_class = concentration_diagnostics(f, p).cls;
  return {f, rep};
}

std::pair<VectorField, MaximizerReport> maximize_vector_Q(const TensorMultiplier& M,
                                                          const MaximizeOptions& opts,
                                                          const VectorField* init_field) {
  opts.validate();
  const Grid& g = M.grid();
  const double rp = opts.p;
  const double expo = (2.0 - rp) / (rp - 1.0);

  VectorField U(g);
  switch (opts.init) {
    case MaximizeOptions::Init::gaussian_bump: {
      ScalarField b = gaussian_bump(g);
      for (int c = 0; c < 3; ++c) U.comp(c) = b;
      break;
    }
    case MaximizeOptions::Init::random:
      for (int c = 0; c < 3; ++c)
        U.comp(c) = random_field(g, opts.seed + static_cast<std::uint64_t>(c) * 0x51ed270b);
      break;
    case MaximizeOptions::Init::provided:
      if (!init_field) throw std::invalid_argument("maximize_vector_Q: init field missing");
      U = *init_field;
      break;
  }
  normalize_p(U, rp);

  MaximizerReport rep;
  double Q = q_form(M, U);
  if (Q <= 0.0) {
    ScalarField b = gaussian_bump(g);
    for (int c = 0; c < 3; ++c) U.comp(c) = b;
    normalize_p(U, rp);
    Q = q_form(M, U);
    if (Q <= 0.0) {
      rep.q_value = Q;
      return {U, rep};
    }
  }
  if (opts.record_history) rep.q_history.push_back(Q);

  int it = 0;
  for (; it < opts.max_iter; ++it) {
    VectorField W = M.apply(U);
    VectorField step(g);
    parallel_for(W.comp(0).size(), [&](std::size_t i) {
      double mag = W.magnitude_at(i);
      double scale = mag > 0.0 ? std::pow(mag, expo) : 0.0;
      step.comp(0)[i] = scale * W.comp(0)[i];
      step.comp(1)[i] = scale * W.comp(1)[i];
      step.comp(2)[i] = scale * W.comp(2)[i];
    });
    normalize_p(step, rp);

    double alpha = opts.relaxation;
    bool accepted = false;
    VectorField trial(g);
    double Qtrial = 0.0;
    while (alpha >= kMinRelaxation) {
      if (alpha == 1.0) {
        trial = step;
      } else {
        for (int c = 0; c < 3; ++c)
          parallel_for(trial.comp(c).size(), [&](std::size_t i) {
            trial.comp(c)[i] = (1.0 - alpha) * U.comp(c)[i] + alpha * step.comp(c)[i];
          });
        normalize_p(trial, rp);
      }
      Qtrial = q_form(M, trial);
      if (Qtrial >= Q) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;

    double s = parallel_sum(trial.comp(0).size(), [&](std::size_t i) {
      double dx = trial.comp(0)[i] - U.comp(0)[i];
      double dy = trial.comp(1)[i] - U.comp(1)[i];
      double dz = trial.comp(2)[i] - U.comp(2)[i];
      return std::pow(std::sqrt(dx * dx + dy * dy + dz * dz), rp);
    });
    double dist = std::pow(g.cell_volume() * s, 1.0 / rp);
    U = std::move(trial);
    Q = Qtrial;
    if (opts.record_history) rep.q_history.push_back(Q);
    if (dist <= opts.tol) {
      rep.converged = true;
      ++it;
      break;
    }
  }

  rep.iterations = it;
  rep.q_value = Q;
  {
    VectorField W = M.apply(U);
    double num = parallel_sum(U.comp(0).size(), [&](std::size_t i) {
      double mag = U.magnitude_at(i);
      double scale = mag > 0.0 ? Q * std::pow(mag, rp - 2.0) : 0.0;
      double dx = scale * U.comp(0)[i] - W.comp(0)[i];
      double dy = scale * U.comp(1)[i] - W.comp(1)[i];
      double dz = scale * U.comp(2)[i] - W.comp(2)[i];
      return dx * dx + dy * dy + dz * dz;
    });
    double den = parallel_sum(W.comp(0).size(), [&](std::size_t i) {
      double x = W.comp(0)[i], y = W.comp(1)[i], z = W.comp(2)[i];
      return x * x + y * y + z * z;
    });
    rep.el_residual = den > 0.0 ? std::sqrt(num / den) : 0.0;
  }
  return {U, rep};
}

ConcentrationReport concentration_diagnostics(const ScalarField& f, double p,
                                              std::vector<double> radii, double eps_cc) {
  const Grid& g = f.grid();
  const double L = g.half_width();
  if (radii.empty()) {
    for (int i = 0; i < 8; ++i) radii.push_back(L / 8.0 + (L / 2.0 - L / 8.0) * i / 7.0);
  }
  std::sort(radii.begin(), radii.end());

  ScalarField mass(g);
  parallel_for(mass.size(), [&](std::size_t i) { mass[i] = std::pow(std::abs(f[i]), p); });
  SpectralScalar mh = fft_forward(mass);

  ConcentrationReport rep;
  std::size_t best_cell = 0;
  for (double R : radii) {
    std::vector<double> sym = kernel_symbol(sample_kernel(KernelSpec::ball(R), g));
    SpectralScalar prod(g);
    parallel_for(prod.size(), [&](std::size_t i) { prod[i] = mh[i] * sym[i]; });
    ScalarField c = fft_inverse(prod);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] > c[arg]) arg = i;
    rep.profile.emplace_back(R, c[arg]);
    best_cell = arg;
  }
  rep.best_center = g.unflat(best_cell);

  // classification per the trichotomy, checked in order
  bool compact = false;
  for (const auto& [R, C] : rep.profile)
    if (R <= L / 2.0 + 1e-12 && C >= 1.0 - eps_cc) compact = true;
  if (compact) {
    rep.cls = CCClass::compact;
    return rep;
  }
  double cq = 0.0, dq = 1e300;
  for (const auto& [R, C] : rep.profile) {
    double d = std::abs(R - L / 4.0);
    if (d < dq) {
      dq = d;
      cq = C;
    }
  }
  if (cq <= eps_cc) {
    rep.cls = CCClass::vanishing;
    return rep;
  }
  bool all_mid = true;
  double lo = 1e300, hi = -1e300;
  int plateau_count = 0;
  double plateau_sum = 0.0;
  for (const auto& [R, C] : rep.profile) {
    if (R < L / 8.0 - 1e-12 || R > L / 2.0 + 1e-12) continue;
    if (!(C > eps_cc && C < 1.0 - eps_cc)) all_mid = false;
    if (R >= L / 4.0 - 1e-12) {
      lo = std::min(lo, C);
      hi = std::max(hi, C);
      plateau_sum += C;
      ++plateau_count;
    }
  }
  if (all_mid && plateau_count > 0 && hi - lo <= 0.05) {
    rep.cls = CCClass::dichotomy;
    rep.lambda = plateau_sum / plateau_count;
    return rep;
  }
  rep.cls = CCClass::undetermined;
  return rep;
}

}  // namespace nlm
