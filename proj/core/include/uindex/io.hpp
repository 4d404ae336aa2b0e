#pragma once

#include "uindex/corpus.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace uindex {

enum class ParseMode {
    strict,  // throw on the first error
    lenient, // collect every error, return what parsed
};

struct PapersParse {
    std::vector<Paper> papers;
    std::vector<std::string> errors; // empty in strict mode (it throws instead)
};

struct CitationsParse {
    std::vector<CitationEdge> edges; // deduplicated, first occurrence kept
    std::vector<std::string> errors;
    std::vector<std::string> warnings; // duplicate rows land here, never in errors
};

/// Parses line-delimited paper records:
///   {"id": "...", "title": "...", "year": 2011, "authors": [{"name": "...", "pid": "..."}]}
/// one object per line, blank lines ignored. Enforces unique ids, nonempty
/// author lists and nonempty author names. Error messages carry
/// `source:line`.
PapersParse parse_papers(std::istream& in, const std::string& source,
                         ParseMode mode = ParseMode::strict);

/// Parses two-column delimited text "citing_id,cited_id" with a header row.
/// Repeated pairs are collapsed with a warning; rows where citing = cited
/// are errors.
CitationsParse parse_citations(std::istream& in, const std::string& source,
                               ParseMode mode = ParseMode::strict);

/// Reads both files strictly, builds the corpus and validates it.
/// Any violation (dangling edges included) is a hard ValidationError.
Corpus load_corpus(const std::filesystem::path& papers_path,
                   const std::filesystem::path& citations_path);

/// Canonical serialization, the inverse of the parsers: load after write
/// reproduces the corpus byte-identically on re-serialization.
void write_papers(const std::vector<Paper>& papers, std::ostream& out);
void write_citations(const std::vector<CitationEdge>& edges, std::ostream& out);

std::string papers_to_string(const std::vector<Paper>& papers);
std::string citations_to_string(const std::vector<CitationEdge>& edges);

} // namespace uindex
