#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "knotsig/certify.hpp"

namespace knotsig {

enum class ReportFormat { Table, Json };

nlohmann::json to_json(const Certificate& c);
// Throws Error{ParseError}.
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BatchRecord& r);
BatchRecord batch_record_from_json(const nlohmann::json& j);

// Table: one row per record in input order (header only for an empty list).
// Json: array of certificate objects, pretty-printed with a trailing newline.
std::string emit_report(const std::vector<BatchRecord>& records, ReportFormat format);

// Inverse of emit_report(..., Json). Throws Error{ParseError}.
std::vector<BatchRecord> parse_report_json(std::string_view text);

// Exact decimal rendering of a rational, rounded half away from zero.
std::string decimal(const Rational& q, int digits);

}  // namespace knotsig
