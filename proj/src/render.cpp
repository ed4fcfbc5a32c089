#include "sudiag/render.hpp"

namespace sudiag {

namespace {

void appendPartition(std::string& out, const OrderedPartition& p) {
  for (int i = 0; i < p.partCount(); ++i) {
    if (i > 0) out += '|';
    bool first = true;
    for (int v : p.part(i)) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(v);
    }
  }
}

}  // namespace

std::string renderPartition(const OrderedPartition& p) {
  std::string out;
  appendPartition(out, p);
  return out;
}

std::string renderFace(const Face& f) {
  std::string out;
  appendPartition(out, f.left);
  out += 'x';
  appendPartition(out, f.rightInternal.reversed());
  return out;
}

std::string renderFaceShort(const Face& f) {
  const std::string full = renderFace(f);
  std::string out;
  out.reserve(full.size());
  for (char c : full)
    if (c != ',') out += c;
  return out;
}

std::string renderSignedFace(int coeff, const Face& f) {
  if (coeff == 0) return "";
  std::string out;
  if (coeff == 1)
    out = "+";
  else if (coeff == -1)
    out = "-";
  else
    out = std::to_string(coeff) + ".";
  out += renderFace(f);
  return out;
}

std::string renderSignedFace(const SignedFace& sf) {
  return renderSignedFace(sf.sign, sf.face);
}

std::string renderMatrix(const Face& f) {
  std::string out;
  for (int row = 0; row < f.rightInternal.partCount(); ++row) {
    const Part rowPart = f.rightInternal.part(row);
    for (int col = 0; col < f.left.partCount(); ++col) {
      const Part common = rowPart.intersectWith(f.left.part(col));
      if (common.empty())
        out += '.';
      else
        out += std::to_string(common.min());
    }
    out += '\n';
  }
  return out;
}

std::string renderDiagonal(const Diagonal& d) {
  std::string out;
  for (const auto& [face, coeff] : canonicalTerms(d)) {
    if (coeff == 0) continue;
    out += renderSignedFace(coeff, face);
    out += '\n';
  }
  return out;
}

}  // namespace sudiag
