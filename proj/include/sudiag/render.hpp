#pragma once

#include <string>

#include "sudiag/closure.hpp"
#include "sudiag/face.hpp"

namespace sudiag {

// Display text of one partition: elements comma-separated, parts joined by
// "|", e.g. "1,2|3,4|5".
std::string renderPartition(const OrderedPartition& p);

// "leftxright" with the second factor reversed into display order, e.g.
// "1,2|3,4|5x2|1,4|3,5".
std::string renderFace(const Face& f);

// renderFace with all commas dropped ("12|34|5x2|14|35"); readable only
// while labels are single digits.
std::string renderFaceShort(const Face& f);

// Sign prefix plus renderFace: "+" and "-" for the unit coefficients, "a."
// for any other nonzero a, and the empty string for zero.
std::string renderSignedFace(int coeff, const Face& f);
std::string renderSignedFace(const SignedFace& sf);

// Matrix picture of a face: one row per rightInternal part (internal order),
// one column per left part; each cell holds the first common element of the
// two parts, or "." when they are disjoint.  Every row ends in a newline.
std::string renderMatrix(const Face& f);

// All nonzero terms in canonical order, one renderSignedFace per line.
std::string renderDiagonal(const Diagonal& d);

}  // namespace sudiag
