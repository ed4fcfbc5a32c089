#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "sudiag/closure.hpp"

namespace sudiag {

enum class RecordFormat { Text, Short, Matrix, Jsonl, Tsv };

// Maps a CLI format name ("text", "short", "matrix", "jsonl", "tsv") to the
// enum; absent for anything else.
std::optional<RecordFormat> parseRecordFormat(std::string_view name);

// Streams the nonzero terms of d in canonical order, one record at a time.
// Formats:
//   text    one signed face per line (renderFace when withSigns is false)
//   short   the comma-free rendering, one per line
//   matrix  the matrix picture of each face, rows newline-terminated,
//           faces concatenated without separators
//   jsonl   {"sign":s,"left":[[...]],"right":[[...]]} per line, "right" in
//           display order, no whitespace
//   tsv     sign, left and display-order right in partition text form,
//           tab-separated
// withSigns only affects text and short.
void emitRecords(const Diagonal& d, RecordFormat format, std::ostream& out,
                 bool withSigns = true);

// Parses one jsonl record back into a signed face, validating the face
// invariants and the unit sign.  Throws std::invalid_argument (or the JSON
// parser's error) on malformed input.
SignedFace parseJsonlRecord(std::string_view line);

}  // namespace sudiag
