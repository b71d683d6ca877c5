#pragma once

#include <string>

#include "nlm/field.hpp"

namespace nlm {

/// Writes <name>.f64 (flat little-endian doubles, row-major cell order) and
/// <name>.json sidecar {dim, n, L, component, name} into dir.
void dump_scalar(const std::string& dir, const std::string& name, const ScalarField& f,
                 int component = 0);

/// One file per component: <name>.<c>.f64 + sidecars, c in {0,1,2}.
void dump_vector(const std::string& dir, const std::string& name, const VectorField& f);

/// Reads a dump written by dump_scalar (sidecar first, then the payload).
ScalarField load_scalar(const std::string& dir, const std::string& name);

}  // namespace nlm
