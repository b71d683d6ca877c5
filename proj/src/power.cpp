#include "nlm/power.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlm/parallel.hpp"

namespace nlm {
namespace {

// (K*|E|^q)|E|^{q-2}E with the zero-extension convention at E = 0.
VectorField nonlinear_image(const VectorField& E, const SampledKernel& K, double q) {
  const Grid& g = E.grid();
  ScalarField magq(g);
  parallel_for(magq.size(), [&](std::size_t i) { magq[i] = std::pow(E.magnitude_at(i), q); });
  ScalarField conv = K.convolve(magq);
  VectorField out(g);
  parallel_for(out.comp(0).size(), [&](std::size_t i) {
    double m = E.magnitude_at(i);
    double w = m > 0.0 ? conv[i] * std::pow(m, q - 2.0) : 0.0;
    out.comp(0)[i] = w * E.comp(0)[i];
    out.comp(1)[i] = w * E.comp(1)[i];
    out.comp(2)[i] = w * E.comp(2)[i];
  });
  return out;
}

double l2_norm_v(const VectorField& E) { return std::sqrt(inner(E, E)); }

// Sample Phi(|x|) from a radial integrand table: Phi(r) = int_0^r v(s) ds by
// prefix trapezoid sums, linearly interpolated at the cell radii.
ScalarField radial_potential_field(const Grid& g, const std::vector<double>& r_nodes,
                                   const std::vector<double>& v_nodes) {
  std::vector<double> prefix(r_nodes.size(), 0.0);
  for (std::size_t i = 1; i < r_nodes.size(); ++i)
    prefix[i] = prefix[i - 1] +
                0.5 * (v_nodes[i] + v_nodes[i - 1]) * (r_nodes[i] - r_nodes[i - 1]);
  ScalarField phi(g);
  parallel_for(phi.size(), [&](std::size_t i) {
    double r = g.min_image_radius(g.unflat(i));
    if (r <= r_nodes.front()) {
      phi[i] = v_nodes.front() * r;  // constant integrand below the first node
      return;
    }
    if (r >= r_nodes.back()) {
      phi[i] = prefix.back();
      return;
    }
    auto hi = std::lower_bound(r_nodes.begin(), r_nodes.end(), r);
    std::size_t k = static_cast<std::size_t>(hi - r_nodes.begin());
    double r0 = r_nodes[k - 1], r1 = r_nodes[k];
    double t = (r - r0) / (r1 - r0);
    double v = (1.0 - t) * v_nodes[k - 1] + t * v_nodes[k];
    phi[i] = prefix[k - 1] + 0.5 * (v_nodes[k - 1] + v) * (r - r0);
  });
  return phi;
}

}  // namespace

IqEnergy iq_energy(const VectorField& E, const SampledKernel& K, double q) {
  if (!(q > 1.0)) throw std::invalid_argument("iq_energy: q must be > 1");
  if (E.grid() != K.grid()) throw std::invalid_argument("iq_energy: grid mismatch");
  const Grid& g = E.grid();
  VectorField c = curl(E);
  IqEnergy out;
  out.I_L = inner(c, c) + inner(E, E);
  ScalarField magq(g);
  parallel_for(magq.size(), [&](std::size_t i) { magq[i] = std::pow(E.magnitude_at(i), q); });
  out.I_NL = inner(K.convolve(magq), magq);
  out.I_q = 0.5 * out.I_L - out.I_NL / (2.0 * q);
  return out;
}

double residual_q(const VectorField& E, const SampledKernel& K, double q) {
  if (!(inner(E, E) > 0.0)) throw std::invalid_argument("residual_q: zero field");
  VectorField cc = curl_curl(E);
  VectorField nl = nonlinear_image(E, K, q);
  double num = 0.0, den = 0.0;
  for (int c = 0; c < 3; ++c) {
    num += parallel_sum(cc.comp(c).size(), [&](std::size_t i) {
      double d = cc.comp(c)[i] + E.comp(c)[i] - nl.comp(c)[i];
      return d * d;
    });
    den += parallel_sum(cc.comp(c).size(), [&](std::size_t i) {
      double d = cc.comp(c)[i] + E.comp(c)[i];
      return d * d;
    });
  }
  return std::sqrt(num / den);
}

std::pair<VectorField, PowerGroundStateReport> ground_state_q(const SampledKernel& K, double q,
                                                              const GroundStateOptions& opts) {
  if (!(q > 1.0 && q < 2.0)) throw std::invalid_argument("ground_state_q: q must be in (1,2)");
  const Grid& g = K.grid();
  if (g.dim() != 3) throw std::invalid_argument("ground_state_q: dim-3 grid required");

  PowerGroundStateReport rep;
  rep.q = q;
  rep.p = 2.0 / q;

  MaximizeOptions mo = opts.maximize;
  mo.p = 2.0 / q;
  mo.symmetrize = true;
  auto [f0, mrep] = maximize_scalar_Q(K, mo);
  if (!mrep.converged && mrep.q_value <= 0.0)
    throw std::runtime_error("ground_state_q: maximizer failed to produce a positive Q");
  rep.max_Q = mrep.q_value;
  rep.maximizer_iterations = mrep.iterations;
  rep.el_residual = mrep.el_residual;
  rep.converged = mrep.converged;

  // construction identities: I_L = ||f0||_p^p = 1, I_NL = max_Q
  rep.t_star = std::pow(rep.max_Q, -1.0 / (2.0 * q - 2.0));
  rep.energy = 0.5 * rep.t_star * rep.t_star -
               std::pow(rep.t_star, 2.0 * q) * rep.max_Q / (2.0 * q);
  rep.predicted_energy = (q - 1.0) / (2.0 * q) * std::pow(rep.max_Q, -1.0 / (q - 1.0));

  // literal assembly: shell-averaged radial profile of f0^{1/q}, trapezoid
  // potential, spectral gradient
  const double shell_w = g.spacing() * std::sqrt(3.0);
  double rmax = 0.0;
  for (std::size_t i = 0; i < f0.size(); ++i)
    rmax = std::max(rmax, g.min_image_radius(g.unflat(i)));
  std::size_t nshell = static_cast<std::size_t>(rmax / shell_w) + 2;
  std::vector<double> ssum(nshell, 0.0), scnt(nshell, 0.0);
  for (std::size_t i = 0; i < f0.size(); ++i) {
    auto s = static_cast<std::size_t>(g.min_image_radius(g.unflat(i)) / shell_w);
    ssum[s] += f0[i];
    scnt[s] += 1.0;
  }
  std::vector<double> r_nodes, v_nodes;
  for (std::size_t s = 0; s < nshell; ++s)
    if (scnt[s] > 0.0) {
      r_nodes.push_back((static_cast<double>(s) + 0.5) * shell_w);
      v_nodes.push_back(std::pow(std::max(ssum[s] / scnt[s], 0.0), 1.0 / q));
    }
  VectorField E = gradient(radial_potential_field(g, r_nodes, v_nodes));

  // refinement: safeguarded fixed point inside the irrotational subspace;
  // curl stays exactly zero, the residual's irrotational part is driven out
  E = project_irrotational(E);
  double nrm = l2_norm_v(E);
  for (int c = 0; c < 3; ++c)
    parallel_for(E.comp(c).size(), [&](std::size_t i) { E.comp(c)[i] /= nrm; });
  int rit = 0;
  for (; rit < opts.refine_iters; ++rit) {
    VectorField W = project_irrotational(nonlinear_image(E, K, q));
    double wn = l2_norm_v(W);
    if (!(wn > 0.0)) break;
    double delta2 = 0.0;
    for (int c = 0; c < 3; ++c)
      delta2 += parallel_sum(W.comp(c).size(), [&](std::size_t i) {
        double d = W.comp(c)[i] / wn - E.comp(c)[i];
        return d * d;
      });
    for (int c = 0; c < 3; ++c)
      parallel_for(W.comp(c).size(), [&](std::size_t i) { E.comp(c)[i] = W.comp(c)[i] / wn; });
    if (std::sqrt(delta2 * g.cell_volume()) < opts.refine_tol) {
      ++rit;
      break;
    }
  }
  rep.refine_iterations = rit;

  // grid Nehari scaling and honest grid energies
  IqEnergy base = iq_energy(E, K, q);
  double t_grid = std::pow(base.I_L / base.I_NL, 1.0 / (2.0 * q - 2.0));
  for (int c = 0; c < 3; ++c)
    parallel_for(E.comp(c).size(), [&](std::size_t i) { E.comp(c)[i] *= t_grid; });
  IqEnergy at_nehari = iq_energy(E, K, q);
  rep.grid_I_L = at_nehari.I_L;
  rep.grid_I_NL = at_nehari.I_NL;
  rep.grid_energy = at_nehari.I_q;
  rep.weak_residual = residual_q(E, K, q);
  rep.curl_norm_rel = curl_norm_rel(E);
  return {std::move(E), rep};
}

std::vector<BlowupRow> supercritical_blowup_demo(double q, double eps,
                                                 const std::vector<int>& n_list,
                                                 const SampledKernel& K) {
  if (!(q > 2.0)) throw std::invalid_argument("supercritical_blowup_demo: q must be > 2");
  const Grid& g = K.grid();
  if (g.dim() != 3) throw std::invalid_argument("supercritical_blowup_demo: dim-3 grid required");
  if (!(eps > 0.0 && eps < g.half_width()))
    throw std::invalid_argument("supercritical_blowup_demo: need 0 < eps < L");

  const double h = g.spacing();
  const double rc = h;           // first-cell cap
  const double sigma = 2.0 * h;  // cut mollification width

  std::vector<BlowupRow> rows;
  for (int nn : n_list) {
    if (nn < 1) throw std::invalid_argument("supercritical_blowup_demo: n must be >= 1");
    double beta = (3.0 / q) * (1.0 - 1.0 / nn);
    // fine radial table of the capped, mollified profile
    double rmax = std::sqrt(3.0) * g.half_width() + h;
    std::size_t m = 4096;
    std::vector<double> r_nodes(m), v_nodes(m);
    for (std::size_t i = 0; i < m; ++i) {
      double r = rmax * static_cast<double>(i) / static_cast<double>(m - 1);
      double amp = std::pow(std::max(r, rc), -beta);
      double cut = 1.0;
      double u = (r - (eps - sigma)) / sigma;
      if (u >= 1.0) cut = 0.0;
      else if (u > 0.0) cut = 1.0 - ((6.0 * u - 15.0) * u + 10.0) * u * u * u;
      r_nodes[i] = r;
      v_nodes[i] = amp * cut;
    }
    VectorField E = gradient(radial_potential_field(g, r_nodes, v_nodes));
    IqEnergy en = iq_energy(E, K, q);
    BlowupRow row;
    row.n = nn;
    row.I_L = en.I_L;
    row.I_NL = en.I_NL;
    row.nehari_level =
        (q - 1.0) / (2.0 * q) * std::pow(std::pow(en.I_L, q) / en.I_NL, 1.0 / (q - 1.0));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nlm
