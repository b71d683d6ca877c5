#pragma once

#include "nlm/field.hpp"

namespace nlm {

/// Unnormalized forward DFT of the samples.
SpectralScalar fft_forward(const ScalarField& f);
SpectralVector fft_forward(const VectorField& f);

/// Inverse DFT with 1/N normalization; imaginary parts are dropped (inputs
/// produced by real-field calculus are conjugate-symmetric up to round-off).
ScalarField fft_inverse(const SpectralScalar& s);
VectorField fft_inverse(const SpectralVector& s);

}  // namespace nlm
