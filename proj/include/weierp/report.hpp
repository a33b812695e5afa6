#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "weierp/decision.hpp"

namespace weierp {

enum class OutputFormat { Text, Jsonl, Csv };

std::optional<OutputFormat> parse_format(const std::string& name);

// "2,3,4,5,6,7"
std::string join_pivots(const std::vector<long>& pivots);
std::vector<long> split_pivots(const std::string& s);

// one CSV record: level,weight,genus,t,pivots,verdict,methods,agreement,status,error
// (pivots and methods are quoted; status is "ok" or "error")
std::string record_to_csv(const BatchRecord& rec);
std::string csv_header();

// same fields as a JSON object on one line
std::string record_to_json(const BatchRecord& rec);

// parse a structured record back (format auto-detected per line); used for
// idempotent re-runs and round-trip checks
std::optional<BatchRecord> parse_record_line(const std::string& line);

// (level, weight) cells already present in a results file
std::set<std::pair<long, long>> recorded_cells(const std::filesystem::path& file);

// human-readable report; verbose adds the reduced rows in the
// "-f1^2 + f0*f2 = -2*q^5 + ..." presentation
std::string render_text_report(const DecideOutcome& outcome, bool verbose);

}  // namespace weierp
