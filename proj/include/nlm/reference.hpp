#pragma once

#include "nlm/kernels.hpp"

namespace nlm {
namespace ref {

/// Serial reference implementations of the data-parallel kernels. Kept simple
/// and loop-ordered; the unit tests use them as oracles and nlm_bench compares
/// them against the OpenMP paths.

double integrate(const ScalarField& f);
double lp_norm(const ScalarField& f, double p);

/// Direct O(N^2) periodic convolution of the origin-centred sampled kernel
/// with f (the dense oracle for the FFT route).
ScalarField convolve_direct(const ScalarField& kernel_field, const ScalarField& f);

/// Q(f) = int (K*f) f by the dense double sum.
double q_form_direct(const ScalarField& kernel_field, const ScalarField& f);

}  // namespace ref
}  // namespace nlm
