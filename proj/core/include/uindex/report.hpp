#pragma once

#include "uindex/metrics.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace uindex {

enum class ReportFormat { table, csv, json };

/// Parses "table" | "csv" | "json"; throws ValidationError otherwise.
ReportFormat parse_report_format(std::string_view s);

/// Scorecard rows for every author, sorted by descending u_index with ties
/// broken by author_key.
std::vector<AuthorMetrics> build_report(const Corpus& c);

/// Writes rows sorted by descending u_index (ties by author_key).
/// Table mode rounds reals half-up to one decimal; csv and json emit full
/// precision (shortest round-trip form). Output is deterministic.
void write_report(std::vector<AuthorMetrics> rows, ReportFormat format, std::ostream& out);

std::string report_to_string(const std::vector<AuthorMetrics>& rows, ReportFormat format);

/// Inverse of the json writer: parse(write(rows)) == rows, bit-exact on
/// the real-valued fields.
std::vector<AuthorMetrics> parse_report_json(const std::string& text);

/// Sort key for the `rank` command.
enum class RankMetric { u, u10, h, i10, g, e, citations };

/// Parses "u" | "u10" | "h" | "i10" | "g" | "e" | "citations".
RankMetric parse_rank_metric(std::string_view s);

/// Value of one metric on a scorecard, as a double for uniform ordering.
double metric_value(const AuthorMetrics& m, RankMetric metric);

/// Rows sorted by the chosen metric, descending, ties by author_key.
std::vector<AuthorMetrics> rank_by(std::vector<AuthorMetrics> rows, RankMetric metric);

} // namespace uindex
