#pragma once

#include <string>
#include <vector>

#include "sudiag/closure.hpp"

namespace sudiag {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  int n = 0;
  std::size_t permutahedronTerms = 0;
  std::size_t associahedronTerms = 0;
  std::vector<VerifyCheck> checks;

  bool allPass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Recomputes the diagonals for n and audits them:
//   factors-partition     both factors of every term partition {1..n}
//   part-count-sum        |left parts| + |rightInternal parts| = n + 1
//   unit-coefficients     every coefficient is -1 or +1
//   projection-subset     every associahedron term appears in the
//                         permutahedron diagonal with the same coefficient
//   admissibility-oracle  replays the closure schedule and compares
//                         isAdmissible against a definition-literal oracle on
//                         every subset candidate, also confirming applyShift
//                         presence matches and the replay reproduces
//                         derivedFaces exactly
//   seed-uniqueness       no face is derived from two distinct seeds
//   matrix-cells          informational: counts row/column part pairs with
//                         more than one common element (never gates)
VerifyReport verifyDiagonal(int n, int threads = 1);

// Admissibility checked directly from the definition on plain sequences,
// independent of the bitmask engine.  leftParts and rightInternalParts are
// the two factors (the latter in internal order), m the candidate set.
bool admissibleByDefinition(const std::vector<std::vector<int>>& leftParts,
                            const std::vector<std::vector<int>>& rightInternalParts,
                            const std::vector<int>& m);

}  // namespace sudiag
