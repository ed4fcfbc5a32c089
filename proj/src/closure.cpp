#include "sudiag/closure.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sudiag/errors.hpp"
#include "sudiag/moves.hpp"
#include "sudiag/render.hpp"
#include "sudiag/runs.hpp"

namespace sudiag {

namespace {

// One sweep of right-moves: for each left part index i in order, every face
// on the work list (including faces appended while processing i) contributes
// all its admissible shifts at i.  Shifts never change part counts, so the
// index bound from the first face covers the whole list.
void closeUnderShifts(std::vector<SignedFace>& work) {
  if (work.empty()) return;
  const int parts = work.front().face.left.partCount();
  for (int i = 0; i + 2 <= parts; ++i) {
    for (std::size_t pos = 0; pos < work.size(); ++pos) {
      const SignedFace current = work[pos];  // copy: push_back may reallocate
      const Part here = current.face.left.part(i);
      const Part next = current.face.left.part(i + 1);
      const std::uint16_t large = here.above(next.max()).mask();
      for (std::uint16_t sub = large; sub != 0;
           sub = static_cast<std::uint16_t>((sub - 1) & large)) {
        if (auto moved = applyShift(current, Part::fromMask(sub)))
          work.push_back(*moved);
      }
    }
  }
}

void twistAll(std::vector<SignedFace>& work) {
  for (auto& f : work) f = twist(f);
}

// Right-moves first, then down-moves as the twist-conjugated sweep seeded
// with everything accumulated so far.
void closeTwoPhase(std::vector<SignedFace>& work) {
  closeUnderShifts(work);
  twistAll(work);
  closeUnderShifts(work);
  twistAll(work);
}

void dedupeExact(std::vector<SignedFace>& faces) {
  std::sort(faces.begin(), faces.end(), [](const SignedFace& a, const SignedFace& b) {
    const int c = compareFaces(a.face, b.face);
    return c != 0 ? c < 0 : a.sign < b.sign;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

// 2(n+1)^(n-2), the a priori term count for n >= 2; used as a reserve hint.
std::size_t reserveHint(int n) {
  if (n < 2) return 2;
  std::uint64_t v = 2;
  for (int i = 0; i < n - 2; ++i) v *= static_cast<std::uint64_t>(n + 1);
  return static_cast<std::size_t>(std::min<std::uint64_t>(v, 1u << 25));
}

int resolveWorkerCount(int threads) {
  if (threads >= 1) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::vector<SignedFace> derivedFaces(const SignedFace& seed) {
  std::vector<SignedFace> work{seed};
  closeTwoPhase(work);
  return work;
}

Diagonal accumulateDiagonal(std::span<const SignedFace> faces) {
  std::vector<SignedFace> unique(faces.begin(), faces.end());
  dedupeExact(unique);
  Diagonal d;
  for (const auto& sf : unique) d.add(sf.face, sf.sign);
  return d;
}

Diagonal mergeDiagonals(Diagonal a, const Diagonal& b) {
  a.mergeFrom(b);
  return a;
}

std::vector<std::pair<Face, int>> canonicalTerms(const Diagonal& d) {
  std::vector<std::pair<Face, int>> out(d.terms().begin(), d.terms().end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return canonicalLess(a.first, b.first); });
  return out;
}

Diagonal diagonalOfPermutahedron(int n, int threads) {
  if (n < 1) throw std::invalid_argument("ground set size must be at least 1");
  if (n > kMaxN)
    throw SizeCapError("ground set size exceeds the supported bound of 12");

  const int workers = resolveWorkerCount(threads);
  PermutationStream stream(n);
  std::mutex gate;

  // Workers pull batches of seeds from the shared stream and fold each
  // seed's deduplicated derived faces into their own partial Diagonal.
  constexpr std::size_t kBatch = 64;
  auto runWorker = [&stream, &gate](Diagonal& into) {
    std::vector<Permutation> batch;
    std::vector<SignedFace> faces;
    for (;;) {
      batch.clear();
      {
        const std::scoped_lock lock(gate);
        while (batch.size() < kBatch) {
          auto p = stream.next();
          if (!p) break;
          batch.push_back(std::move(*p));
        }
      }
      if (batch.empty()) return;
      for (const auto& seed : batch) {
        faces.assign(1, buildStepFace(seed));
        closeTwoPhase(faces);
        dedupeExact(faces);
        for (const auto& sf : faces) into.add(sf.face, sf.sign);
      }
    }
  };

  Diagonal total;
  total.reserve(reserveHint(n));
  if (workers == 1) {
    runWorker(total);
  } else {
    std::vector<Diagonal> partials(static_cast<std::size_t>(workers));
    {
      std::vector<std::jthread> pool;
      pool.reserve(partials.size());
      for (auto& partial : partials)
        pool.emplace_back([&runWorker, &partial] { runWorker(partial); });
    }
    for (const auto& partial : partials) total.mergeFrom(partial);
  }

  for (const auto& [face, coeff] : total.terms()) {
    if (coeff != 1 && coeff != -1)
      throw std::logic_error("diagonal coefficient " + std::to_string(coeff) +
                             " outside {-1,+1} for face " + renderFace(face));
  }
  return total;
}

}  // namespace sudiag
