#pragma once

#include "unexp/linalg.hpp"

namespace unexp {

// Frozen expected values for the normalized symbolic conditions matrices of
// the multiplicity-3 problem (N = 3: 10 x 8, N = 5: 21 x 24), in the
// parameter variables a0..aN. Rows are defined up to a scalar factor, so
// comparisons should use rows_proportional.
PolyMatrix reference_interpolation_matrix(unsigned N, FieldHandle field);

// True when the matrices have equal shape and each row pair differs by a
// nonzero scalar factor only.
bool rows_proportional(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace unexp
