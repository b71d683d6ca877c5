#pragma once

#include <utility>

#include "nlm/fft.hpp"

namespace nlm {

/// Rectangle-rule quadrature: cell_volume * sum of samples.
double integrate(const ScalarField& f);

/// Pointwise product integral cell_volume * sum f*g.
double inner(const ScalarField& f, const ScalarField& g);
double inner(const VectorField& f, const VectorField& g);

/// L^p norm (p >= 1). Vector fields use the pointwise Euclidean magnitude.
double lp_norm(const ScalarField& f, double p);
double lp_norm(const VectorField& f, double p);

/// Spectral inner product (1/N) sum conj(fhat) ghat * cell_volume; equals
/// inner(f, g) by Parseval.
double spectral_inner(const SpectralScalar& f, const SpectralScalar& g);

/// Exact derivatives of the trigonometric interpolant.
VectorField gradient(const ScalarField& phi);            // dim 3
ScalarField derivative(const ScalarField& f, int axis);  // any dim (the dim-1/2 gradient)
ScalarField divergence(const VectorField& E);
VectorField curl(const VectorField& E);
VectorField curl_curl(const VectorField& E);

/// In-place spectral filters used by the solvers.
SpectralVector curl_hat(const SpectralVector& E);

/// Helmholtz split: first = solenoidal (div-free) part Pi E, second =
/// irrotational (curl-free) remainder. The zero mode goes to the solenoidal
/// part (R(0) := 0).
std::pair<VectorField, VectorField> helmholtz_project(const VectorField& E);

/// Projection onto the irrotational subspace, R(xi) E-hat, with R(0) := 0.
VectorField project_irrotational(const VectorField& E);

/// ||curl E||_2 / ||E||_2.
double curl_norm_rel(const VectorField& E);

}  // namespace nlm
