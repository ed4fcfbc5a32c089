#include "sudiag/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "sudiag/moves.hpp"
#include "sudiag/projection.hpp"
#include "sudiag/runs.hpp"

namespace sudiag {

namespace {

bool vectorContains(const std::vector<int>& xs, int v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

struct ReplayStats {
  std::uint64_t candidates = 0;
  std::uint64_t oracleDisagreements = 0;
  std::uint64_t presenceMismatches = 0;
};

// Mirrors one closure sweep while testing every nonempty subset of the
// active part — a superset of the candidates the engine enumerates — against
// the definition-literal oracle.  Admissible shifts are appended in the same
// descending-submask order the engine uses, so the finished work list must
// equal derivedFaces(seed) entry for entry.
void auditSweep(std::vector<SignedFace>& work, ReplayStats& stats) {
  if (work.empty()) return;
  const int parts = work.front().face.left.partCount();
  for (int i = 0; i + 2 <= parts; ++i) {
    for (std::size_t pos = 0; pos < work.size(); ++pos) {
      const SignedFace current = work[pos];
      const auto leftVec = current.face.left.toVectors();
      const auto rightVec = current.face.rightInternal.toVectors();
      const std::uint16_t whole = current.face.left.part(i).mask();
      for (std::uint16_t sub = whole; sub != 0;
           sub = static_cast<std::uint16_t>((sub - 1) & whole)) {
        const Part m = Part::fromMask(sub);
        ++stats.candidates;
        const bool engine = isAdmissible(current, m);
        const bool oracle = admissibleByDefinition(leftVec, rightVec, m.toVector());
        if (engine != oracle) ++stats.oracleDisagreements;
        const auto moved = applyShift(current, m);
        if (moved.has_value() != engine) ++stats.presenceMismatches;
        if (moved) work.push_back(*moved);
      }
    }
  }
}

}  // namespace

bool admissibleByDefinition(const std::vector<std::vector<int>>& leftParts,
                            const std::vector<std::vector<int>>& rightInternalParts,
                            const std::vector<int>& m) {
  if (m.empty()) return false;

  // (a) m lies inside exactly one part
  int j = -1;
  for (std::size_t idx = 0; idx < leftParts.size(); ++idx) {
    bool any = false;
    bool all = true;
    for (int e : m) {
      const bool inPart = vectorContains(leftParts[idx], e);
      any = any || inPart;
      all = all && inPart;
    }
    if (!any) continue;
    if (!all || j >= 0) return false;
    j = static_cast<int>(idx);
  }
  if (j < 0) return false;

  // (b) a successor part exists
  if (j + 1 >= static_cast<int>(leftParts.size())) return false;

  // (c) m is a proper subset of its part
  if (m.size() >= leftParts[static_cast<std::size_t>(j)].size()) return false;

  // (d) min(m) exceeds all of the successor part
  const int minM = *std::min_element(m.begin(), m.end());
  const auto& next = leftParts[static_cast<std::size_t>(j + 1)];
  if (minM <= *std::max_element(next.begin(), next.end())) return false;

  // (e) the successor part avoids every rightInternal part from the first
  // one containing min(m) onward
  int k = -1;
  for (std::size_t idx = 0; idx < rightInternalParts.size(); ++idx) {
    if (vectorContains(rightInternalParts[idx], minM)) {
      k = static_cast<int>(idx);
      break;
    }
  }
  if (k < 0) return false;
  for (std::size_t t = static_cast<std::size_t>(k); t < rightInternalParts.size(); ++t)
    for (int y : rightInternalParts[t])
      if (vectorContains(next, y)) return false;
  return true;
}

VerifyReport verifyDiagonal(int n, int threads) {
  VerifyReport report;
  report.n = n;

  const Diagonal perm = diagonalOfPermutahedron(n, threads);
  const Diagonal assoc = diagonalOfAssociahedron(n, threads);
  report.permutahedronTerms = perm.termCount();
  report.associahedronTerms = assoc.termCount();

  const auto addCheck = [&report](std::string name, bool pass, std::string detail) {
    report.checks.push_back(VerifyCheck{std::move(name), pass, std::move(detail)});
  };
  const auto outOf = [&perm](std::uint64_t bad) {
    return std::to_string(bad) + " violations in " + std::to_string(perm.termCount()) +
           " terms";
  };

  std::uint64_t badPartition = 0;
  std::uint64_t badCountSum = 0;
  std::uint64_t badCoeff = 0;
  std::uint64_t multiCells = 0;
  for (const auto& [face, coeff] : perm.terms()) {
    if (!face.left.isPartitionOf(n) || !face.rightInternal.isPartitionOf(n))
      ++badPartition;
    if (face.left.partCount() + face.rightInternal.partCount() != n + 1) ++badCountSum;
    if (coeff != 1 && coeff != -1) ++badCoeff;
    for (int row = 0; row < face.rightInternal.partCount(); ++row)
      for (int col = 0; col < face.left.partCount(); ++col)
        if (face.rightInternal.part(row).intersectWith(face.left.part(col)).size() > 1)
          ++multiCells;
  }
  addCheck("factors-partition", badPartition == 0, outOf(badPartition));
  addCheck("part-count-sum", badCountSum == 0, outOf(badCountSum));
  addCheck("unit-coefficients", badCoeff == 0, outOf(badCoeff));

  std::uint64_t projectionMismatches = 0;
  for (const auto& [face, coeff] : assoc.terms())
    if (perm.coefficient(face) != coeff) ++projectionMismatches;
  addCheck("projection-subset", projectionMismatches == 0,
           std::to_string(projectionMismatches) + " mismatches in " +
               std::to_string(assoc.termCount()) + " projected terms");

  // Replay every seed's closure with the oracle riding along.
  ReplayStats stats;
  std::uint64_t replayDivergences = 0;
  std::uint64_t crossSeedFaces = 0;
  std::string replayError;
  try {
    std::unordered_map<Face, std::size_t, FaceHash> firstOwner;
    Diagonal replayTotal;
    PermutationStream seeds(n);
    std::size_t seedIndex = 0;
    while (auto p = seeds.next()) {
      const SignedFace seed = buildStepFace(*p);
      std::vector<SignedFace> work{seed};
      auditSweep(work, stats);
      for (auto& f : work) f = twist(f);
      auditSweep(work, stats);
      for (auto& f : work) f = twist(f);
      if (work != derivedFaces(seed)) ++replayDivergences;

      const Diagonal seedDiagonal = accumulateDiagonal(work);
      for (const auto& [face, coeff] : seedDiagonal.terms()) {
        const auto [it, inserted] = firstOwner.emplace(face, seedIndex);
        if (!inserted && it->second != seedIndex) ++crossSeedFaces;
      }
      replayTotal.mergeFrom(seedDiagonal);
      ++seedIndex;
    }
    if (!(replayTotal == perm)) ++replayDivergences;
  } catch (const std::exception& e) {
    replayError = e.what();
  }

  const bool oracleOk = replayError.empty() && stats.oracleDisagreements == 0 &&
                        stats.presenceMismatches == 0 && replayDivergences == 0;
  std::string oracleDetail;
  if (!replayError.empty()) {
    oracleDetail = "replay aborted: " + replayError;
  } else {
    oracleDetail = std::to_string(stats.candidates) + " candidates, " +
                   std::to_string(stats.oracleDisagreements) + " oracle disagreements, " +
                   std::to_string(stats.presenceMismatches) + " presence mismatches, " +
                   std::to_string(replayDivergences) + " replay divergences";
  }
  addCheck("admissibility-oracle", oracleOk, std::move(oracleDetail));
  addCheck("seed-uniqueness", replayError.empty() && crossSeedFaces == 0,
           std::to_string(crossSeedFaces) + " faces derived from two seeds");
  addCheck("matrix-cells", true,
           std::to_string(multiCells) + " multi-element intersections (informational)");
  return report;
}

}  // namespace sudiag
