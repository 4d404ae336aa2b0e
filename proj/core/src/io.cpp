#include "uindex/io.hpp"

#include "uindex/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace uindex {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string at(const std::string& source, int line) {
    return source + ":" + std::to_string(line);
}

// Strips one trailing '\r' so CRLF input parses like LF input.
void chomp_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

Paper paper_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": record is not an object");
    if (!j.contains("id") || !j["id"].is_string()) {
        throw ParseError(where + ": missing string field \"id\"");
    }
    if (!j.contains("title") || !j["title"].is_string()) {
        throw ParseError(where + ": missing string field \"title\"");
    }
    if (!j.contains("year") || !j["year"].is_number_integer()) {
        throw ParseError(where + ": missing integer field \"year\"");
    }
    if (!j.contains("authors") || !j["authors"].is_array()) {
        throw ParseError(where + ": missing array field \"authors\"");
    }

    Paper p;
    p.id = j["id"].get<std::string>();
    p.title = j["title"].get<std::string>();
    p.year = j["year"].get<int>();
    if (trim(p.id).empty()) throw ValidationError(where + ": empty paper id");
    if (p.id.find_first_of(",\r\n") != std::string::npos) {
        throw ValidationError(where + ": paper id \"" + p.id +
                              "\" contains a reserved character (comma or newline)");
    }

    for (const auto& a : j["authors"]) {
        if (!a.is_object() || !a.contains("name") || !a["name"].is_string()) {
            throw ParseError(where + ": author entry needs a string \"name\"");
        }
        AuthorRef ref;
        ref.display_name = a["name"].get<std::string>();
        if (trim(ref.display_name).empty()) {
            throw ValidationError(where + ": author with empty name in paper \"" + p.id + "\"");
        }
        if (a.contains("pid") && a["pid"].is_string() && !a["pid"].get<std::string>().empty()) {
            ref.persistent_id = a["pid"].get<std::string>();
        }
        p.authors.push_back(std::move(ref));
    }
    if (p.authors.empty()) {
        throw ValidationError(where + ": paper \"" + p.id + "\" has an empty author list");
    }
    return p;
}

ordered_json paper_to_json(const Paper& p) {
    ordered_json authors = ordered_json::array();
    for (const auto& a : p.authors) {
        ordered_json ja{{"name", a.display_name}};
        if (a.has_persistent_id()) ja["pid"] = *a.persistent_id;
        authors.push_back(std::move(ja));
    }
    return ordered_json{{"id", p.id}, {"title", p.title}, {"year", p.year},
                        {"authors", std::move(authors)}};
}

// Splits one csv row; no quoting, ids are plain tokens.
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string_view rest{line};
    while (true) {
        const auto comma = rest.find(',');
        fields.emplace_back(trim(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return fields;
}

} // namespace

PapersParse parse_papers(std::istream& in, const std::string& source, ParseMode mode) {
    PapersParse result;
    std::set<std::string> seen_ids;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        chomp_cr(line);
        if (trim(line).empty()) continue;
        try {
            ordered_json j = ordered_json::parse(line, nullptr, true);
            Paper p = paper_from_json(j, at(source, line_no));
            if (!seen_ids.insert(p.id).second) {
                throw ValidationError(at(source, line_no) + ": duplicate paper id \"" + p.id +
                                      "\"");
            }
            result.papers.push_back(std::move(p));
        } catch (const ordered_json::parse_error& e) {
            const std::string msg = at(source, line_no) + ": invalid record: " + e.what();
            if (mode == ParseMode::strict) throw ParseError(msg);
            result.errors.push_back(msg);
        } catch (const Error& e) {
            if (mode == ParseMode::strict) throw;
            result.errors.emplace_back(e.what());
        }
    }
    return result;
}

CitationsParse parse_citations(std::istream& in, const std::string& source, ParseMode mode) {
    CitationsParse result;
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    int line_no = 0;
    bool header_skipped = false;
    while (std::getline(in, line)) {
        ++line_no;
        chomp_cr(line);
        if (trim(line).empty()) continue;
        if (!header_skipped) {
            header_skipped = true;
            continue;
        }
        try {
            const auto fields = split_fields(line);
            if (fields.size() != 2) {
                throw ParseError(at(source, line_no) + ": expected 2 fields, got " +
                                 std::to_string(fields.size()));
            }
            if (fields[0].empty() || fields[1].empty()) {
                throw ParseError(at(source, line_no) + ": empty paper id");
            }
            if (fields[0] == fields[1]) {
                throw ValidationError(at(source, line_no) + ": paper \"" + fields[0] +
                                      "\" cites itself");
            }
            if (!seen.emplace(fields[0], fields[1]).second) {
                result.warnings.push_back(at(source, line_no) + ": duplicate edge " + fields[0] +
                                          " -> " + fields[1] + " ignored");
                continue;
            }
            result.edges.push_back({fields[0], fields[1]});
        } catch (const Error& e) {
            if (mode == ParseMode::strict) throw;
            result.errors.emplace_back(e.what());
        }
    }
    return result;
}

Corpus load_corpus(const std::filesystem::path& papers_path,
                   const std::filesystem::path& citations_path) {
    std::ifstream pf(papers_path);
    if (!pf) throw IoError("cannot open papers file: " + papers_path.string());
    std::ifstream cf(citations_path);
    if (!cf) throw IoError("cannot open citations file: " + citations_path.string());

    auto papers = parse_papers(pf, papers_path.filename().string(), ParseMode::strict);
    auto cites = parse_citations(cf, citations_path.filename().string(), ParseMode::strict);

    Corpus corpus(std::move(papers.papers), std::move(cites.edges));
    const auto violations = corpus_validate(corpus);
    if (!violations.empty()) {
        std::string msg = "corpus validation failed (" + std::to_string(violations.size()) +
                          " violation(s)):";
        for (const auto& v : violations) msg += "\n  " + to_string(v);
        throw ValidationError(msg);
    }
    return corpus;
}

void write_papers(const std::vector<Paper>& papers, std::ostream& out) {
    for (const auto& p : papers) {
        out << paper_to_json(p).dump() << '\n';
    }
}

void write_citations(const std::vector<CitationEdge>& edges, std::ostream& out) {
    out << "citing_id,cited_id\n";
    for (const auto& e : edges) {
        if (e.citing_id.find_first_of(",\r\n") != std::string::npos ||
            e.cited_id.find_first_of(",\r\n") != std::string::npos) {
            throw ValidationError("edge " + e.citing_id + " -> " + e.cited_id +
                                  " has an id with a reserved character; not serializable");
        }
        out << e.citing_id << ',' << e.cited_id << '\n';
    }
}

std::string papers_to_string(const std::vector<Paper>& papers) {
    std::ostringstream os;
    write_papers(papers, os);
    return os.str();
}

std::string citations_to_string(const std::vector<CitationEdge>& edges) {
    std::ostringstream os;
    write_citations(edges, os);
    return os.str();
}

} // namespace uindex
