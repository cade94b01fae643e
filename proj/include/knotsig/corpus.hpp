#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotsig/certify.hpp"
#include "knotsig/seifert.hpp"

namespace knotsig {

enum class CorpusFormat { Json, Jsonl, Csv };

// Throws Error{UnknownFormat}.
CorpusFormat corpus_format_from_string(std::string_view s);

struct CorpusEntry {
  std::string name;
  RawMatrix seifert;
  bool assume_irreducible = true;
  bool assume_m0_prime = false;
  bool assume_homology_sphere = true;

  KnotMetadata metadata() const { return {assume_irreducible, assume_homology_sphere, assume_m0_prime}; }
};

// One input row: either a well-formed entry or an error naming the row.
struct CorpusRecord {
  std::size_t index = 0;  // 0-based position in the file
  std::string name;
  std::optional<CorpusEntry> entry;
  std::string error;
};

// JSON: top-level array of entry objects. JSONL: one object per non-blank line.
// CSV: name, row-major entries..., size (one matrix per line; an optional
// header line starting with "name" is skipped).
//
// Malformed rows (bad fields, non-square or odd-size matrices) become error
// records. Throws Error{FileNotFound | UnknownFormat}, or Error{ParseError} when
// a JSON document as a whole cannot be read.
std::vector<CorpusRecord> parse_corpus(const std::filesystem::path& path, CorpusFormat format);
std::vector<CorpusRecord> parse_corpus_text(std::string_view text, CorpusFormat format);

// Turns parsed records into certificates; rows that failed to parse become
// InvalidInput certificates.
std::vector<BatchRecord> certify_corpus(const std::vector<CorpusRecord>& records,
                                        const CertifyOptions& opts = {}, unsigned threads = 1);

}  // namespace knotsig
