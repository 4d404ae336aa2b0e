#pragma once

#include "uindex/corpus.hpp"

#include <chrono>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uindex {

/// Settings for one harvest run against an OpenAlex-style works endpoint.
struct HarvestConfig {
    std::string base_url;                 // e.g. "https://api.example.org" or ".../v1"
    std::string author_id;                // persistent author identifier
    int max_works = 100;                  // cap on the author's own works
    double rate_limit = 10.0;             // max requests per second, > 0
    std::filesystem::path cache_dir;      // empty disables caching
    double timeout_seconds = 30.0;

    /// Throws ValidationError on out-of-range fields or an unparseable URL.
    void validate() const;
};

/// One cached HTTP response body, byte-identical to what the server sent.
struct CachedResponse {
    std::string request_key; // hash of method + url
    std::string body;
    std::chrono::system_clock::time_point fetched_at;
};

/// Write-through response cache keyed by request hash. Bodies are stored
/// verbatim in `<dir>/<key>.body` with a small `.meta` sidecar. Safe for
/// concurrent readers; writes are serialized.
class ResponseCache {
public:
    explicit ResponseCache(std::filesystem::path dir);

    static std::string request_key(const std::string& method, const std::string& url);

    std::optional<CachedResponse> lookup(const std::string& method, const std::string& url) const;
    CachedResponse store(const std::string& method, const std::string& url, std::string body);

private:
    std::filesystem::path dir_;
    mutable std::mutex write_mutex_;
};

/// Blocks callers so that request starts never exceed the configured
/// per-second rate. Thread-safe.
class RateLimiter {
public:
    explicit RateLimiter(double per_second);
    void acquire();

private:
    std::mutex mutex_;
    std::chrono::steady_clock::time_point next_slot_;
    std::chrono::nanoseconds interval_;
};

struct HarvestResult {
    std::vector<Paper> papers;       // author works (by descending citations), then citing works
    std::vector<CitationEdge> edges; // citing work -> author work
    std::vector<std::string> warnings;
};

/// Fetches the author's works (up to max_works, ordered by descending
/// citation count) and, for each, the works citing it, mapping everything
/// into corpus types. Citing works without author data are dropped with a
/// warning. All responses go through the cache; with a warm cache no
/// request leaves the machine.
///
/// Throws FetchError (network failure after 3 attempts with exponential
/// backoff), DecodeError (malformed body) or NotFoundError (author id with
/// no works).
HarvestResult fetch_author_works(const HarvestConfig& cfg);

/// Writes `papers.jsonl` and `citations.csv` under out_dir in the ingest
/// formats; load_corpus over the returned paths reproduces the input
/// exactly.
std::pair<std::filesystem::path, std::filesystem::path>
export_corpus(const std::vector<Paper>& papers, const std::vector<CitationEdge>& edges,
              const std::filesystem::path& out_dir);

} // namespace uindex
