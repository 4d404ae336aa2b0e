#include "uindex/harvest.hpp"

#include "uindex/errors.hpp"
#include "uindex/io.hpp"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace uindex {

namespace {

using nlohmann::json;

constexpr int kPerPage = 25;
constexpr int kAttempts = 3;
constexpr auto kBackoffBase = std::chrono::milliseconds(100);

struct SplitUrl {
    std::string host_port; // "http://127.0.0.1:8080"
    std::string prefix;    // path part, "" or "/v1"
};

SplitUrl split_base_url(const std::string& base) {
    const auto scheme_end = base.find("://");
    if (scheme_end == std::string::npos) {
        throw ValidationError("base_url needs a scheme: " + base);
    }
    const std::string scheme = base.substr(0, scheme_end);
    if (scheme != "http" && scheme != "https") {
        throw ValidationError("unsupported scheme \"" + scheme + "\" in base_url: " + base);
    }
    const auto path_start = base.find('/', scheme_end + 3);
    if (path_start == scheme_end + 3) {
        throw ValidationError("base_url has an empty host: " + base);
    }
    SplitUrl out;
    if (path_start == std::string::npos) {
        out.host_port = base;
    } else {
        out.host_port = base.substr(0, path_start);
        out.prefix = base.substr(path_start);
        while (!out.prefix.empty() && out.prefix.back() == '/') out.prefix.pop_back();
    }
    if (out.host_port.size() <= scheme_end + 3) {
        throw ValidationError("base_url has an empty host: " + base);
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct MappedWork {
    Paper paper;
    long long cited_by = 0;
};

// Maps one OpenAlex-style work object. Returns nullopt (with a warning)
// when the work carries no usable author data.
std::optional<MappedWork> map_work(const json& w, const std::string& request_key,
                                   std::vector<std::string>& warnings) {
    if (!w.is_object() || !w.contains("id") || !w["id"].is_string()) {
        throw DecodeError("work record without string id (request " + request_key + ")");
    }
    MappedWork out;
    out.paper.id = w["id"].get<std::string>();
    if (w.contains("title") && w["title"].is_string()) {
        out.paper.title = w["title"].get<std::string>();
    } else if (w.contains("display_name") && w["display_name"].is_string()) {
        out.paper.title = w["display_name"].get<std::string>();
    }
    if (w.contains("publication_year") && w["publication_year"].is_number_integer()) {
        out.paper.year = w["publication_year"].get<int>();
    }
    if (w.contains("cited_by_count") && w["cited_by_count"].is_number_integer()) {
        out.cited_by = w["cited_by_count"].get<long long>();
    }
    if (w.contains("authorships") && w["authorships"].is_array()) {
        for (const auto& as : w["authorships"]) {
            if (!as.is_object() || !as.contains("author") || !as["author"].is_object()) continue;
            const auto& au = as["author"];
            AuthorRef ref;
            if (au.contains("display_name") && au["display_name"].is_string()) {
                ref.display_name = au["display_name"].get<std::string>();
            }
            if (trim(ref.display_name).empty()) continue;
            if (au.contains("id") && au["id"].is_string() && !au["id"].get<std::string>().empty()) {
                ref.persistent_id = au["id"].get<std::string>();
            }
            out.paper.authors.push_back(std::move(ref));
        }
    }
    if (out.paper.authors.empty()) {
        warnings.push_back("work " + out.paper.id +
                           " has no author data; dropped from the corpus");
        return std::nullopt;
    }
    return out;
}

class ApiClient {
public:
    ApiClient(const HarvestConfig& cfg, std::optional<ResponseCache>& cache)
        : split_(split_base_url(cfg.base_url)), cache_(cache), limiter_(cfg.rate_limit),
          http_(split_.host_port) {
        const auto timeout =
            std::chrono::milliseconds(static_cast<long>(cfg.timeout_seconds * 1000.0));
        http_.set_connection_timeout(timeout);
        http_.set_read_timeout(timeout);
        http_.set_follow_location(true);
    }

    // GET {base_url}{path_query}, through the cache, parsed as json.
    // Returns the body plus the request key for error reporting.
    std::pair<json, std::string> get_json(const std::string& path_query) {
        const std::string url = split_.host_port + split_.prefix + path_query;
        const std::string key = ResponseCache::request_key("GET", url);
        std::optional<std::string> body;
        if (cache_) {
            if (auto hit = cache_->lookup("GET", url)) body = std::move(hit->body);
        }
        if (!body) {
            body = fetch(path_query, url);
            if (cache_) cache_->store("GET", url, *body);
        }
        json parsed = json::parse(*body, nullptr, false);
        if (parsed.is_discarded()) {
            throw DecodeError("response body is not valid json (request " + key + ", url " +
                              url + ")");
        }
        return {std::move(parsed), key};
    }

private:
    std::string fetch(const std::string& path_query, const std::string& url) {
        std::string last_error;
        for (int attempt = 0; attempt < kAttempts; ++attempt) {
            if (attempt > 0) std::this_thread::sleep_for(kBackoffBase * (1 << (attempt - 1)));
            limiter_.acquire();
            httplib::Result res = http_.Get(split_.prefix + path_query);
            if (!res) {
                last_error = "transport error: " + httplib::to_string(res.error());
                continue;
            }
            if (res->status == 404) {
                throw NotFoundError("resource not found (404): " + url);
            }
            if (res->status >= 500) {
                last_error = "server error: status " + std::to_string(res->status);
                continue;
            }
            if (res->status >= 400) {
                throw FetchError("request rejected with status " + std::to_string(res->status) +
                                 ": " + url);
            }
            return res->body;
        }
        throw FetchError("giving up on " + url + " after " + std::to_string(kAttempts) +
                         " attempts (" + last_error + ")");
    }

    SplitUrl split_;
    std::optional<ResponseCache>& cache_;
    RateLimiter limiter_;
    httplib::Client http_;
};

} // namespace

void HarvestConfig::validate() const {
    split_base_url(base_url);
    if (trim(author_id).empty()) throw ValidationError("author_id must be nonempty");
    if (max_works < 1) {
        throw ValidationError("max_works must be >= 1, got " + std::to_string(max_works));
    }
    if (!(rate_limit > 0.0) || !std::isfinite(rate_limit)) {
        throw ValidationError("rate_limit must be a positive number of requests per second");
    }
    if (!(timeout_seconds > 0.0)) {
        throw ValidationError("timeout_seconds must be positive");
    }
}

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string ResponseCache::request_key(const std::string& method, const std::string& url) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(method + " " + url)));
    return buf;
}

std::optional<CachedResponse> ResponseCache::lookup(const std::string& method,
                                                    const std::string& url) const {
    const std::string key = request_key(method, url);
    const auto body_path = dir_ / (key + ".body");
    const auto meta_path = dir_ / (key + ".meta");
    if (!std::filesystem::exists(body_path) || !std::filesystem::exists(meta_path)) {
        return std::nullopt;
    }
    CachedResponse out;
    out.request_key = key;
    out.body = read_file(body_path);
    const json meta = json::parse(read_file(meta_path), nullptr, false);
    if (meta.is_object() && meta.contains("fetched_at")) {
        out.fetched_at = std::chrono::system_clock::time_point(
            std::chrono::seconds(meta["fetched_at"].get<long long>()));
    }
    return out;
}

CachedResponse ResponseCache::store(const std::string& method, const std::string& url,
                                    std::string body) {
    std::lock_guard lock(write_mutex_);
    CachedResponse out;
    out.request_key = request_key(method, url);
    out.fetched_at = std::chrono::system_clock::now();
    out.body = std::move(body);

    const auto body_path = dir_ / (out.request_key + ".body");
    const auto meta_path = dir_ / (out.request_key + ".meta");
    {
        std::ofstream bf(body_path, std::ios::binary | std::ios::trunc);
        bf << out.body;
        if (!bf) throw IoError("cannot write cache file: " + body_path.string());
    }
    const json meta{
        {"url", url},
        {"method", method},
        {"fetched_at",
         std::chrono::duration_cast<std::chrono::seconds>(out.fetched_at.time_since_epoch())
             .count()},
    };
    std::ofstream mf(meta_path, std::ios::binary | std::ios::trunc);
    mf << meta.dump(2) << '\n';
    if (!mf) throw IoError("cannot write cache file: " + meta_path.string());
    return out;
}

RateLimiter::RateLimiter(double per_second)
    : next_slot_(std::chrono::steady_clock::now()),
      // 5% headroom so wakeup latency cannot squeeze consecutive starts
      // closer together than 1/per_second.
      interval_(std::chrono::nanoseconds(
          static_cast<long long>(1.05e9 / (per_second > 0.0 ? per_second : 1.0)))) {}

void RateLimiter::acquire() {
    std::unique_lock lock(mutex_);
    const auto now = std::chrono::steady_clock::now();
    if (next_slot_ < now) next_slot_ = now;
    const auto my_slot = next_slot_;
    next_slot_ += interval_;
    lock.unlock();
    std::this_thread::sleep_until(my_slot);
}

HarvestResult fetch_author_works(const HarvestConfig& cfg) {
    cfg.validate();

    std::optional<ResponseCache> cache;
    if (!cfg.cache_dir.empty()) cache.emplace(cfg.cache_dir);
    ApiClient client(cfg, cache);
    HarvestResult result;

    auto fetch_pages = [&](const std::string& filter, const std::string& extra,
                           long long limit) {
        std::vector<MappedWork> works;
        for (int page = 1;; ++page) {
            const std::string pq = "/works?filter=" + filter + extra +
                                   "&per-page=" + std::to_string(kPerPage) +
                                   "&page=" + std::to_string(page);
            auto [j, key] = client.get_json(pq);
            if (!j.is_object() || !j.contains("results") || !j["results"].is_array()) {
                throw DecodeError("response without a results array (request " + key + ")");
            }
            const auto& results = j["results"];
            for (const auto& w : results) {
                if (auto mapped = map_work(w, key, result.warnings)) {
                    works.push_back(std::move(*mapped));
                    if (limit > 0 && static_cast<long long>(works.size()) >= limit) return works;
                }
            }
            if (static_cast<int>(results.size()) < kPerPage) return works;
        }
    };

    auto own = fetch_pages("author.id:" + cfg.author_id, "&sort=cited_by_count:desc",
                           cfg.max_works);
    if (own.empty()) {
        throw NotFoundError("author id \"" + cfg.author_id + "\" has no works at " +
                            cfg.base_url);
    }
    std::stable_sort(own.begin(), own.end(), [](const MappedWork& a, const MappedWork& b) {
        if (a.cited_by != b.cited_by) return a.cited_by > b.cited_by;
        return a.paper.id < b.paper.id;
    });

    std::set<std::string> known_ids;
    for (const auto& w : own) {
        if (known_ids.insert(w.paper.id).second) result.papers.push_back(w.paper);
    }

    std::set<std::pair<std::string, std::string>> edge_set;
    std::vector<Paper> citing_papers;
    const std::size_t own_count = result.papers.size();
    for (std::size_t i = 0; i < own_count; ++i) {
        const std::string cited_id = result.papers[i].id;
        for (auto& citing : fetch_pages("cites:" + cited_id, "", -1)) {
            if (citing.paper.id == cited_id) {
                result.warnings.push_back("work " + cited_id +
                                          " reports itself as a citer; edge dropped");
                continue;
            }
            if (!edge_set.emplace(citing.paper.id, cited_id).second) continue;
            result.edges.push_back({citing.paper.id, cited_id});
            if (known_ids.insert(citing.paper.id).second) {
                citing_papers.push_back(std::move(citing.paper));
            }
        }
    }
    result.papers.insert(result.papers.end(), std::make_move_iterator(citing_papers.begin()),
                         std::make_move_iterator(citing_papers.end()));
    return result;
}

std::pair<std::filesystem::path, std::filesystem::path>
export_corpus(const std::vector<Paper>& papers, const std::vector<CitationEdge>& edges,
              const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string() + ": " +
                          ec.message());

    const auto papers_path = out_dir / "papers.jsonl";
    const auto citations_path = out_dir / "citations.csv";
    {
        std::ofstream pf(papers_path, std::ios::binary | std::ios::trunc);
        if (!pf) throw IoError("cannot write " + papers_path.string());
        write_papers(papers, pf);
        if (!pf) throw IoError("write failed: " + papers_path.string());
    }
    {
        std::ofstream cf(citations_path, std::ios::binary | std::ios::trunc);
        if (!cf) throw IoError("cannot write " + citations_path.string());
        write_citations(edges, cf);
        if (!cf) throw IoError("write failed: " + citations_path.string());
    }
    return {papers_path, citations_path};
}

} // namespace uindex
