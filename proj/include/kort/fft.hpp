#pragma once

#include "kort/field.hpp"

namespace kort {

/// Change of representation by the unitary DFT pair (see ScalarField docs).
/// Idempotent when the field already has the target representation. The
/// physical representation is real: when converting spectral -> physical the
/// rounding-level imaginary residue is dropped.
ScalarField convert(const ScalarField& f, Representation target);
VectorField convert(const VectorField& f, Representation target);
TensorField convert(const TensorField& f, Representation target);

} // namespace kort
