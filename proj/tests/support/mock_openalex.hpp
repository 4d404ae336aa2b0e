#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

struct MockWork {
    std::string id;
    std::string title;
    int year = 2020;
    // (display_name, author id or "" for none)
    std::vector<std::pair<std::string, std::string>> authors;
    // ids of works this work cites
    std::vector<std::string> cites;
    int cited_by_count = 0; // filled by finalize()
};

// In-process OpenAlex-style works endpoint:
//   GET /works?filter=author.id:<id>|cites:<id>&per-page=<n>&page=<n>
// Responses are {"meta": {"count": n}, "results": [work...]}.
class MockOpenAlex {
public:
    MockOpenAlex();
    ~MockOpenAlex();

    void add_work(MockWork w);
    void finalize(); // computes cited_by_count and starts serving

    std::string base_url() const; // http://127.0.0.1:<port>
    int port() const;

    int request_count() const;
    std::vector<std::chrono::steady_clock::time_point> request_times() const;
    void reset_counters();

    // The next n requests answer with this HTTP status and no useful body.
    void fail_next(int n, int status = 500);
    // Every /works request answers with this raw body until cleared.
    void set_raw_body(std::string body);
    void clear_raw_body();

    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace testsupport
