#include "sudiag/records.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "sudiag/render.hpp"

namespace sudiag {

namespace {

void appendJsonPartition(std::string& out, const OrderedPartition& p) {
  out += '[';
  for (int i = 0; i < p.partCount(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    bool first = true;
    for (int v : p.part(i)) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(v);
    }
    out += ']';
  }
  out += ']';
}

std::string jsonlRecord(int coeff, const Face& face) {
  std::string out = "{\"sign\":";
  out += std::to_string(coeff);
  out += ",\"left\":";
  appendJsonPartition(out, face.left);
  out += ",\"right\":";
  appendJsonPartition(out, face.rightInternal.reversed());
  out += '}';
  return out;
}

}  // namespace

std::optional<RecordFormat> parseRecordFormat(std::string_view name) {
  if (name == "text") return RecordFormat::Text;
  if (name == "short") return RecordFormat::Short;
  if (name == "matrix") return RecordFormat::Matrix;
  if (name == "jsonl") return RecordFormat::Jsonl;
  if (name == "tsv") return RecordFormat::Tsv;
  return std::nullopt;
}

void emitRecords(const Diagonal& d, RecordFormat format, std::ostream& out,
                 bool withSigns) {
  for (const auto& [face, coeff] : canonicalTerms(d)) {
    if (coeff == 0) continue;
    switch (format) {
      case RecordFormat::Text:
        out << (withSigns ? renderSignedFace(coeff, face) : renderFace(face)) << '\n';
        break;
      case RecordFormat::Short: {
        const std::string full =
            withSigns ? renderSignedFace(coeff, face) : renderFace(face);
        std::string line;
        line.reserve(full.size());
        for (char c : full)
          if (c != ',') line += c;
        out << line << '\n';
        break;
      }
      case RecordFormat::Matrix:
        out << renderMatrix(face);
        break;
      case RecordFormat::Jsonl:
        out << jsonlRecord(coeff, face) << '\n';
        break;
      case RecordFormat::Tsv:
        out << coeff << '\t' << renderPartition(face.left) << '\t'
            << renderPartition(face.rightInternal.reversed()) << '\n';
        break;
    }
  }
}

SignedFace parseJsonlRecord(std::string_view line) {
  const nlohmann::json record = nlohmann::json::parse(line);
  const int sign = record.at("sign").get<int>();
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("record sign must be -1 or +1");

  const auto readPartition = [](const nlohmann::json& parts) {
    return OrderedPartition::fromVectors(parts.get<std::vector<std::vector<int>>>());
  };
  const OrderedPartition left = readPartition(record.at("left"));
  const OrderedPartition rightDisplay = readPartition(record.at("right"));
  return SignedFace{static_cast<std::int8_t>(sign),
                    makeFace(left, rightDisplay.reversed())};
}

}  // namespace sudiag
