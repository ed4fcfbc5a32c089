#pragma once

#include <optional>
#include <vector>

#include "sudiag/face.hpp"

namespace sudiag {

// Whether the set m may be shifted out of its part in f's left factor into
// the following part.  All of these must hold, checked in order:
//   (a) m lies inside exactly one left part pi_j;
//   (b) a successor part pi_{j+1} exists;
//   (c) m is a proper subset of pi_j;
//   (d) min(m) > max(pi_{j+1});
//   (e) with k the index of the first rightInternal part (internal order)
//       containing min(m), pi_{j+1} is disjoint from the union of the
//       rightInternal parts from k onward.
// Malformed candidates simply yield false.
bool isAdmissible(const SignedFace& f, Part m);

// Executes the shift of m if admissible, else returns absent.  Elements move
// one at a time in ascending order from pi_j to pi_{j+1}; each element e
// flips the sign by -(-1)^(|{x in source : x > e}| + |{y in target : y < e}|)
// with both cuts taken on the parts as they stand at that moment.
std::optional<SignedFace> applyShift(const SignedFace& f, Part m);

// All admissible shift candidates at left part index i: every nonempty
// subset of {x in pi_i : x > max(pi_{i+1})} passing isAdmissible.  Empty
// when i has no successor part.  Only such subsets can be admissible, so
// nothing else is tested.
std::vector<Part> admissibleSubsetsAt(int i, const SignedFace& f);

// Swaps the two factors, sign untouched; an involution.  Down-moves are
// right-moves conjugated with this.
SignedFace twist(const SignedFace& f);

}  // namespace sudiag
