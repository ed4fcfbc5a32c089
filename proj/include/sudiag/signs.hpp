#pragma once

#include "sudiag/face.hpp"
#include "sudiag/permutation.hpp"

namespace sudiag {

// (-1)^(number of even-length cycles); equal to the classical parity.
int permutationSign(const Permutation& pi);

// Right-most partition sign of a display-order partition q with parts
// q_1..q_r: (-1)^epsilon times the sign of the concatenated permutation,
// where epsilon = sum over i = 1..r-1 of i * |q_i|.  The caller is
// responsible for any reversal (cornerSign feeds it reverse(rightInternal)).
int rightmostSign(const OrderedPartition& q);

// Order-reversing sign: (-1)^((sum of |part|^2 - total element count) / 2).
// The exponent is integral because |U|^2 - |U| is always even.
int orderReversingSign(const OrderedPartition& p);

// The composite corner sign of a face with r = rightInternal part count:
//   (-1)^(r(r-1)/2) * orderReversingSign(left) * rightmostSign(reversed right).
SignedFace cornerSign(const Face& f);

}  // namespace sudiag
