#pragma once

#include "sudiag/closure.hpp"

namespace sudiag {

// Whether, scanning the parts left to right while accumulating their union
// U, every integer interval [min part, max part] lies inside U plus the part
// itself.  Faces surviving the Tonks projection are exactly those whose
// factors (in display order) both satisfy this.
bool isDerivedConsecutive(const OrderedPartition& p);

// The associahedron diagonal: the permutahedron diagonal restricted to the
// faces whose left factor and display-order right factor are both derived
// consecutive, coefficients unchanged.
Diagonal diagonalOfAssociahedron(int n, int threads = 1);

}  // namespace sudiag
