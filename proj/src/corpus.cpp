#include "knotsig/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "knotsig/error.hpp"

namespace knotsig {

using nlohmann::json;

CorpusFormat corpus_format_from_string(std::string_view s) {
  if (s == "json") return CorpusFormat::Json;
  if (s == "jsonl") return CorpusFormat::Jsonl;
  if (s == "csv") return CorpusFormat::Csv;
  throw Error(ErrorCode::UnknownFormat, "'" + std::string(s) + "' (expected json, jsonl or csv)");
}

namespace {

Integer parse_integer(const std::string& s) {
  std::string t = s;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  std::size_t start = 0;
  while (start < t.size() && std::isspace(static_cast<unsigned char>(t[start]))) ++start;
  t = t.substr(start);
  std::size_t digits = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (digits == t.size()) throw std::invalid_argument("'" + s + "' is not an integer");
  for (std::size_t i = digits; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
      throw std::invalid_argument("'" + s + "' is not an integer");
    }
  }
  if (t[0] == '+') t = t.substr(1);
  return Integer(t);
}

Integer json_integer(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<unsigned long long>()))
                                   : Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw std::invalid_argument("matrix entry " + j.dump() + " is not an integer");
}

// Square and even; symplectic validity is left to certification.
void check_shape(const RawMatrix& m) {
  const std::size_t n = m.rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m.rows[i].size() != n) {
      throw Error(ErrorCode::NonSquare, "matrix row " + std::to_string(i) + " has " +
                                            std::to_string(m.rows[i].size()) + " entries, expected " +
                                            std::to_string(n));
    }
  }
  if (n % 2 != 0) throw Error(ErrorCode::OddSize, "matrix size " + std::to_string(n) + " is odd");
}

CorpusEntry entry_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("entry is not a JSON object");
  CorpusEntry e;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw std::invalid_argument("'name' is not a string");
    e.name = j["name"].get<std::string>();
  }
  if (!j.contains("seifert")) throw std::invalid_argument("missing 'seifert'");
  const json& m = j["seifert"];
  if (!m.is_array()) throw std::invalid_argument("'seifert' is not an array");
  for (const auto& row : m) {
    if (!row.is_array()) throw std::invalid_argument("'seifert' row is not an array");
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(json_integer(x));
    e.seifert.rows.push_back(std::move(r));
  }
  auto flag = [&](const char* key, bool& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_boolean()) throw std::invalid_argument(std::string("'") + key + "' is not a boolean");
    out = j[key].get<bool>();
  };
  flag("assume_irreducible", e.assume_irreducible);
  flag("assume_m0_prime", e.assume_m0_prime);
  flag("assume_homology_sphere", e.assume_homology_sphere);
  return e;
}

std::string row_label(std::size_t index, const std::string& name) {
  std::string s = "row " + std::to_string(index + 1);
  if (!name.empty()) s += " (" + name + ")";
  return s;
}

CorpusRecord record_from_json(std::size_t index, const json& j) {
  CorpusRecord rec;
  rec.index = index;
  if (j.is_object() && j.contains("name") && j["name"].is_string()) rec.name = j["name"].get<std::string>();
  try {
    CorpusEntry e = entry_from_json(j);
    check_shape(e.seifert);
    if (e.name.empty()) e.name = rec.name = "row " + std::to_string(index + 1);
    rec.entry = std::move(e);
  } catch (const std::exception& ex) {
    rec.error = row_label(index, rec.name) + ": " + ex.what();
  }
  return rec;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::vector<CorpusRecord> parse_csv(std::string_view text) {
  std::vector<CorpusRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    auto fields = split_csv_line(line);
    if (first) {
      first = false;
      if (!fields.empty() && fields[0] == "name") continue;
    }
    CorpusRecord rec;
    rec.index = out.size();
    rec.name = fields[0];
    try {
      if (fields.size() < 2) throw std::invalid_argument("missing size column");
      const Integer size = parse_integer(fields.back());
      if (size < 0 || size > 1000) throw std::invalid_argument("size " + size.get_str() + " out of range");
      const std::size_t n = size.get_ui();
      const std::size_t given = fields.size() - 2;
      if (given != n * n) {
        throw Error(ErrorCode::NonSquare, std::to_string(given) + " entries given for size " +
                                              std::to_string(n));
      }
      CorpusEntry e;
      e.name = rec.name;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> row;
        for (std::size_t k = 0; k < n; ++k) row.push_back(parse_integer(fields[1 + i * n + k]));
        e.seifert.rows.push_back(std::move(row));
      }
      check_shape(e.seifert);
      if (e.name.empty()) e.name = rec.name = "row " + std::to_string(rec.index + 1);
      rec.entry = std::move(e);
    } catch (const std::exception& ex) {
      rec.error = row_label(rec.index, rec.name) + ": " + ex.what();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::vector<CorpusRecord> parse_corpus_text(std::string_view text, CorpusFormat format) {
  std::vector<CorpusRecord> out;
  switch (format) {
    case CorpusFormat::Json: {
      json doc;
      try {
        doc = json::parse(text);
      } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
      }
      if (!doc.is_array()) throw Error(ErrorCode::ParseError, "top-level JSON value must be an array");
      for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(record_from_json(i, doc[i]));
      return out;
    }
    case CorpusFormat::Jsonl: {
      std::istringstream in{std::string(text)};
      std::string line;
      while (std::getline(in, line)) {
        if (is_blank(line)) continue;
        const std::size_t index = out.size();
        json j;
        try {
          j = json::parse(line);
        } catch (const json::parse_error& e) {
          CorpusRecord rec;
          rec.index = index;
          rec.error = row_label(index, "") + ": " + e.what();
          out.push_back(std::move(rec));
          continue;
        }
        out.push_back(record_from_json(index, j));
      }
      return out;
    }
    case CorpusFormat::Csv:
      return parse_csv(text);
  }
  throw Error(ErrorCode::UnknownFormat, "unsupported corpus format");
}

std::vector<CorpusRecord> parse_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus_text(buf.str(), format);
}

std::vector<BatchRecord> certify_corpus(const std::vector<CorpusRecord>& records, const CertifyOptions& opts,
                                        unsigned threads) {
  std::vector<BatchInput> inputs;
  std::vector<std::size_t> slot;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].entry) {
      const auto& e = *records[i].entry;
      inputs.push_back({e.name, e.seifert, e.metadata()});
      slot.push_back(i);
    }
  }
  std::vector<BatchRecord> done = certify_batch(inputs, opts, threads);
  std::vector<BatchRecord> out(records.size());
  for (std::size_t k = 0; k < slot.size(); ++k) out[slot[k]] = std::move(done[k]);
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].entry) continue;
    out[i].name = records[i].name;
    out[i].certificate = invalid_input_certificate(records[i].name, KnotMetadata{}, records[i].error);
  }
  return out;
}

}  // namespace knotsig
