#include "uindex/report.hpp"

#include "uindex/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace uindex {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shortest decimal form that parses back to the identical double.
std::string full_precision(double x) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, r.ptr);
}

void sort_rows(std::vector<AuthorMetrics>& rows) {
    std::sort(rows.begin(), rows.end(), [](const AuthorMetrics& a, const AuthorMetrics& b) {
        if (a.u_index != b.u_index) return a.u_index > b.u_index;
        return a.author_key < b.author_key;
    });
}

constexpr const char* kCsvHeader =
    "author_key,paper_count,total_citations,independent_total,self_total,"
    "u_index,u10_index,h_index,i10_index,g_index,e_index";

void write_csv(const std::vector<AuthorMetrics>& rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& m : rows) {
        out << m.author_key << ',' << m.paper_count << ',' << m.total_citations << ','
            << m.independent_total << ',' << m.self_total << ',' << full_precision(m.u_index)
            << ',' << full_precision(m.u10_index) << ',' << m.h_index << ',' << m.i10_index
            << ',' << m.g_index << ',' << full_precision(m.e_index) << '\n';
    }
}

ordered_json row_to_json(const AuthorMetrics& m) {
    return ordered_json{
        {"author_key", m.author_key},
        {"paper_count", m.paper_count},
        {"total_citations", m.total_citations},
        {"independent_total", m.independent_total},
        {"self_total", m.self_total},
        {"u_index", m.u_index},
        {"u10_index", m.u10_index},
        {"h_index", m.h_index},
        {"i10_index", m.i10_index},
        {"g_index", m.g_index},
        {"e_index", m.e_index},
    };
}

void write_json(const std::vector<AuthorMetrics>& rows, std::ostream& out) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : rows) arr.push_back(row_to_json(m));
    out << arr.dump(2) << '\n';
}

void write_table(const std::vector<AuthorMetrics>& rows, std::ostream& out) {
    const std::vector<std::string> header{"author",  "papers", "cites", "I",  "S", "u",
                                          "u10",     "h",      "i10",   "g",  "e"};
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& m : rows) {
        cells.push_back({m.author_key, std::to_string(m.paper_count),
                         std::to_string(m.total_citations), std::to_string(m.independent_total),
                         std::to_string(m.self_total), format1(m.u_index), format1(m.u10_index),
                         std::to_string(m.h_index), std::to_string(m.i10_index),
                         std::to_string(m.g_index), format1(m.e_index)});
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t col = 0; col < header.size(); ++col) {
        width[col] = header[col].size();
        for (const auto& row : cells) width[col] = std::max(width[col], row[col].size());
    }
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t col = 0; col < row.size(); ++col) {
            if (col) out << "  ";
            // author column left-aligned, numbers right-aligned
            out << (col == 0 ? std::left : std::right) << std::setw(static_cast<int>(width[col]))
                << row[col];
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : cells) emit(row);
}

} // namespace

ReportFormat parse_report_format(std::string_view s) {
    if (s == "table") return ReportFormat::table;
    if (s == "csv") return ReportFormat::csv;
    if (s == "json") return ReportFormat::json;
    throw ValidationError("unknown report format \"" + std::string(s) +
                          "\" (expected table, csv or json)");
}

std::vector<AuthorMetrics> build_report(const Corpus& c) {
    auto rows = all_author_metrics(c);
    sort_rows(rows);
    return rows;
}

void write_report(std::vector<AuthorMetrics> rows, ReportFormat format, std::ostream& out) {
    sort_rows(rows);
    switch (format) {
    case ReportFormat::table: write_table(rows, out); break;
    case ReportFormat::csv: write_csv(rows, out); break;
    case ReportFormat::json: write_json(rows, out); break;
    }
}

std::string report_to_string(const std::vector<AuthorMetrics>& rows, ReportFormat format) {
    std::ostringstream os;
    write_report(rows, format, os);
    return os.str();
}

std::vector<AuthorMetrics> parse_report_json(const std::string& text) {
    ordered_json arr;
    try {
        arr = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("report is not valid json: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("report json must be an array of rows");
    std::vector<AuthorMetrics> rows;
    rows.reserve(arr.size());
    for (const auto& j : arr) {
        AuthorMetrics m;
        m.author_key = j.at("author_key").get<std::string>();
        m.paper_count = j.at("paper_count").get<int>();
        m.total_citations = j.at("total_citations").get<int>();
        m.independent_total = j.at("independent_total").get<int>();
        m.self_total = j.at("self_total").get<int>();
        m.u_index = j.at("u_index").get<double>();
        m.u10_index = j.at("u10_index").get<double>();
        m.h_index = j.at("h_index").get<int>();
        m.i10_index = j.at("i10_index").get<int>();
        m.g_index = j.at("g_index").get<int>();
        m.e_index = j.at("e_index").get<double>();
        rows.push_back(std::move(m));
    }
    return rows;
}

RankMetric parse_rank_metric(std::string_view s) {
    if (s == "u") return RankMetric::u;
    if (s == "u10") return RankMetric::u10;
    if (s == "h") return RankMetric::h;
    if (s == "i10") return RankMetric::i10;
    if (s == "g") return RankMetric::g;
    if (s == "e") return RankMetric::e;
    if (s == "citations") return RankMetric::citations;
    throw ValidationError("unknown metric \"" + std::string(s) +
                          "\" (expected u, u10, h, i10, g, e or citations)");
}

double metric_value(const AuthorMetrics& m, RankMetric metric) {
    switch (metric) {
    case RankMetric::u: return m.u_index;
    case RankMetric::u10: return m.u10_index;
    case RankMetric::h: return m.h_index;
    case RankMetric::i10: return m.i10_index;
    case RankMetric::g: return m.g_index;
    case RankMetric::e: return m.e_index;
    case RankMetric::citations: return m.total_citations;
    }
    return 0.0;
}

std::vector<AuthorMetrics> rank_by(std::vector<AuthorMetrics> rows, RankMetric metric) {
    std::sort(rows.begin(), rows.end(), [&](const AuthorMetrics& a, const AuthorMetrics& b) {
        const double va = metric_value(a, metric);
        const double vb = metric_value(b, metric);
        if (va != vb) return va > vb;
        return a.author_key < b.author_key;
    });
    return rows;
}

} // namespace uindex
