#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "agentscan/catalog.hpp"
#include "agentscan/commitscan.hpp"
#include "agentscan/evidence.hpp"

namespace agentscan {

// ---- Search queries ----------------------------------------------------------

enum class ArtifactType { Code, Commits, PullRequests, Issues };

struct SearchQuery {
    std::string query_string;
    ArtifactType artifact_type = ArtifactType::Code;

    friend bool operator==(const SearchQuery&, const SearchQuery&) = default;
};

class MinerError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotSearchableError : public MinerError {
  public:
    using MinerError::MinerError;
};

class AuthError : public MinerError {
  public:
    using MinerError::MinerError;
};

class RateLimitError : public MinerError {
  public:
    RateLimitError(const std::string& msg, std::int64_t reset_at)
        : MinerError(msg), reset_at_(reset_at) {}
    std::int64_t reset_at() const { return reset_at_; }

  private:
    std::int64_t reset_at_ = 0;
};

class QueryError : public MinerError {
  public:
    using MinerError::MinerError;
};

class NotFoundError : public MinerError {
  public:
    using MinerError::MinerError;
};

class PartialResultError : public MinerError {
  public:
    PartialResultError(const std::string& msg, int last_complete_page)
        : MinerError(msg), last_complete_page_(last_complete_page) {}
    // Number of the last page that was fetched completely (0 = none).
    int last_complete_page() const { return last_complete_page_; }

  private:
    int last_complete_page_ = 0;
};

namespace detail {

inline std::string regex_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() * 2);
    for (char c : s) {
        bool plain = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                     c == '_';
        if (!plain) out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace detail

// Builds the web search query for a rule. The strings reproduce the query
// grammar used by GitHub's search UI per category; file-path queries are
// regular expressions anchored at a directory boundary.
inline SearchQuery build_search_query(const HeuristicRule& rule) {
    switch (rule.category) {
        case Category::FilePath: {
            std::string q = "path:/(?:^|\\/)(" + detail::regex_escape(rule.pattern);
            q += rule.pattern_kind == PatternKind::PathName ? ")$/" : ")/";
            return {q, ArtifactType::Code};
        }
        case Category::CommitCoAuthor:
            return {"Co-authored-by:\"" + rule.pattern + "\"", ArtifactType::Commits};
        case Category::CommitAuthor:
            return {"author:\"" + rule.pattern + "\"", ArtifactType::Commits};
        case Category::BranchPrefix:
            return {"head:" + rule.pattern + " type:pr", ArtifactType::PullRequests};
        case Category::PrLabel:
            return {"label:" + rule.pattern + " type:pr", ArtifactType::PullRequests};
        case Category::UserName:
            throw NotSearchableError("user_name rule '" + rule.rule_id +
                                     "' is matched locally against fetched records, not searched");
    }
    throw MinerError("unhandled category");
}

// ---- HTTP boundary --------------------------------------------------------------

struct HttpRequest {
    std::string method = "GET";
    std::string url;
    std::vector<std::pair<std::string, std::string>> headers;
};

struct HttpResponse {
    int status = 0;
    std::vector<std::pair<std::string, std::string>> headers;
    std::string body;

    std::string header(std::string_view name) const {
        for (const auto& [k, v] : headers)
            if (ieq(k, name)) return v;
        return {};
    }
};

class HttpTransport {
  public:
    virtual ~HttpTransport() = default;
    virtual HttpResponse send(const HttpRequest& request) = 0;
};

// In-memory transport for tests: responses keyed by "<METHOD> <url>".
class ScriptedTransport : public HttpTransport {
  public:
    void add(const std::string& method, const std::string& url, HttpResponse response) {
        responses_[method + " " + url] = std::move(response);
    }
    void add_json(const std::string& url, int status, const std::string& body,
                  std::vector<std::pair<std::string, std::string>> headers = {}) {
        headers.emplace_back("Content-Type", "application/json");
        add("GET", url, HttpResponse{status, std::move(headers), body});
    }

    HttpResponse send(const HttpRequest& request) override {
        requests.push_back(request);
        auto it = responses_.find(request.method + " " + request.url);
        if (it == responses_.end())
            throw MinerError("no scripted response for " + request.method + " " + request.url);
        return it->second;
    }

    std::vector<HttpRequest> requests;

  private:
    std::map<std::string, HttpResponse> responses_;
};

// Replays responses recorded on disk: one file per request, named by the
// 64-bit FNV-1a hash of "<METHOD> <url>", containing status line, headers,
// a blank line, then the body.
class RecordedTransport : public HttpTransport {
  public:
    explicit RecordedTransport(std::filesystem::path dir) : dir_(std::move(dir)) {}

    static std::filesystem::path fixture_path(const std::filesystem::path& dir,
                                              const std::string& method, const std::string& url) {
        return dir / (hex64(fnv1a64(method + " " + url)) + ".http");
    }

    static void write_fixture(const std::filesystem::path& dir, const std::string& method,
                              const std::string& url, const HttpResponse& response) {
        std::filesystem::create_directories(dir);
        std::ofstream out(fixture_path(dir, method, url), std::ios::binary);
        out << "HTTP/1.1 " << response.status << " " << reason_phrase(response.status) << "\n";
        for (const auto& [k, v] : response.headers) out << k << ": " << v << "\n";
        out << "\n" << response.body;
    }

    HttpResponse send(const HttpRequest& request) override {
        auto path = fixture_path(dir_, request.method, request.url);
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw MinerError("no recorded response for " + request.method + " " + request.url +
                             " (expected " + path.string() + ")");
        HttpResponse resp;
        std::string line;
        if (!std::getline(in, line)) throw MinerError("empty fixture " + path.string());
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // Status line: "HTTP/1.1 <code> <reason>"
        size_t sp = line.find(' ');
        if (sp == std::string::npos) throw MinerError("bad status line in " + path.string());
        resp.status = std::atoi(line.c_str() + sp + 1);
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) break;
            size_t colon = line.find(':');
            if (colon == std::string::npos) continue;
            resp.headers.emplace_back(line.substr(0, colon),
                                      std::string(trim(std::string_view(line).substr(colon + 1))));
        }
        std::ostringstream body;
        body << in.rdbuf();
        resp.body = body.str();
        return resp;
    }

  private:
    static const char* reason_phrase(int status) {
        switch (status) {
            case 200: return "OK";
            case 401: return "Unauthorized";
            case 403: return "Forbidden";
            case 404: return "Not Found";
            case 422: return "Unprocessable Entity";
            case 429: return "Too Many Requests";
            default: return "Status";
        }
    }

    std::filesystem::path dir_;
};

// ---- Request pacing ----------------------------------------------------------------

struct RateBudget {
    long remaining = -1;               // -1 = unknown until the first response
    std::int64_t reset_at = 0;         // epoch seconds
    std::int64_t min_interval_ms = 0;  // minimum spacing between requests
};

class Clock {
  public:
    virtual ~Clock() = default;
    virtual std::int64_t now_ms() = 0;
    virtual void sleep_ms(std::int64_t ms) = 0;
};

class SystemClock : public Clock {
  public:
    std::int64_t now_ms() override {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::system_clock::now().time_since_epoch())
            .count();
    }
    void sleep_ms(std::int64_t ms) override {
        std::this_thread::sleep_for(std::chrono::milliseconds(ms));
    }
};

inline Clock& system_clock() {
    static SystemClock clock;
    return clock;
}

// Serializes requests: enforces min spacing and refuses to issue a request
// when the budget is exhausted before its reset time.
class RateLimiter {
  public:
    RateLimiter(RateBudget budget, Clock& clock) : budget_(budget), clock_(clock) {}

    void before_request() {
        std::int64_t now = clock_.now_ms();
        if (budget_.remaining == 0 && now / 1000 < budget_.reset_at)
            throw RateLimitError("rate budget exhausted until " +
                                     format_iso_utc(budget_.reset_at),
                                 budget_.reset_at);
        if (budget_.min_interval_ms > 0 && last_request_ms_ >= 0) {
            std::int64_t wait = last_request_ms_ + budget_.min_interval_ms - now;
            if (wait > 0) clock_.sleep_ms(wait);
        }
        last_request_ms_ = clock_.now_ms();
    }

    void after_response(const HttpResponse& response) {
        std::string rem = response.header("X-RateLimit-Remaining");
        if (!rem.empty()) budget_.remaining = std::atol(rem.c_str());
        std::string reset = response.header("X-RateLimit-Reset");
        if (!reset.empty()) budget_.reset_at = std::atoll(reset.c_str());
    }

    const RateBudget& budget() const { return budget_; }

  private:
    RateBudget budget_;
    Clock& clock_;
    std::int64_t last_request_ms_ = -1;
};

// ---- Pull-request records -------------------------------------------------------------

struct PrRecord {
    int number = 0;
    std::string head_branch;
    std::vector<std::string> labels;
    std::string author_login;
    bool is_draft = false;
    bool is_merged = false;
    bool is_closed = false;  // merged implies closed
    std::optional<std::int64_t> created_at;
    std::optional<std::int64_t> closed_at;
};

// Matches fetched PR records against branch, label, and user rules. Branch and
// label comparisons are case-insensitive, like the platform's search.
inline std::vector<EvidenceItem> match_pr_records(std::span<const PrRecord> prs,
                                                  const Catalog& catalog) {
    std::vector<EvidenceItem> out;
    std::set<std::tuple<std::string, std::string, std::string>> seen;
    for (const PrRecord& pr : prs) {
        std::vector<ActiveRule> rules =
            pr.created_at ? rules_active_at(catalog, date_from_unix_seconds(*pr.created_at))
                          : open_window_rules(catalog);
        std::string locator = std::to_string(pr.number);
        auto emit = [&](const ActiveRule& ar) {
            if (seen.emplace(ar.agent->id, ar.rule->rule_id, locator).second)
                out.push_back(
                    {ar.agent->id, ar.rule->rule_id, ar.rule->category, locator, pr.created_at});
        };
        for (const ActiveRule& ar : rules) {
            switch (ar.rule->category) {
                case Category::BranchPrefix:
                    if (istarts_with(pr.head_branch, ar.rule->pattern)) emit(ar);
                    break;
                case Category::PrLabel:
                    for (const std::string& label : pr.labels)
                        if (ieq(label, ar.rule->pattern)) {
                            emit(ar);
                            break;
                        }
                    break;
                case Category::UserName:
                    if (detail::field_matches(pr.author_login, *ar.rule)) emit(ar);
                    break;
                default:
                    break;
            }
        }
    }
    return out;
}

// Word-boundary @login mentions, case preserved as written.
inline std::vector<std::string> extract_mentions(std::string_view text) {
    auto is_login_char = [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
               c == '-';
    };
    std::vector<std::string> out;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '@') continue;
        if (i > 0 && (is_login_char(text[i - 1]) || text[i - 1] == '@')) continue;
        size_t j = i + 1;
        while (j < text.size() && is_login_char(text[j])) ++j;
        if (j > i + 1) out.emplace_back(text.substr(i + 1, j - i - 1));
        i = j - 1;
    }
    return out;
}

// ---- GitHub REST client ------------------------------------------------------------------

inline std::string github_token_from_env() {
    if (const char* t = std::getenv("AGENTSCAN_GITHUB_TOKEN"); t && *t) return t;
    if (const char* t = std::getenv("GITHUB_TOKEN"); t && *t) return t;
    return {};
}

class GithubClient {
  public:
    explicit GithubClient(HttpTransport& transport, std::string token = {},
                          RateBudget budget = {}, Clock& clock = system_clock(),
                          std::string base_url = "https://api.github.com")
        : transport_(transport),
          token_(std::move(token)),
          limiter_(budget, clock),
          base_url_(std::move(base_url)) {}

    int per_page = 100;

    // Platform-reported total for a search query. The number is approximate by
    // nature and changes over time.
    long count_matches(const SearchQuery& query) {
        std::string endpoint;
        switch (query.artifact_type) {
            case ArtifactType::Code: endpoint = "/search/code"; break;
            case ArtifactType::Commits: endpoint = "/search/commits"; break;
            case ArtifactType::PullRequests:
            case ArtifactType::Issues: endpoint = "/search/issues"; break;
        }
        HttpResponse resp = get(base_url_ + endpoint + "?q=" + percent_encode(query.query_string));
        auto doc = parse_json(resp.body);
        if (!doc.contains("total_count") || !doc.at("total_count").is_number())
            throw MinerError("search response lacks total_count");
        return doc.at("total_count").get<long>();
    }

    struct PrFetchResult {
        std::vector<PrRecord> records;
        std::vector<EvidenceItem> evidence;
    };

    PrFetchResult fetch_pr_evidence(const std::string& repo, const Catalog& catalog) {
        PrFetchResult result;
        paginate("/repos/" + repo + "/pulls?state=all", [&](const nlohmann::json& item) {
            result.records.push_back(parse_pr(item));
        });
        result.evidence = match_pr_records(result.records, catalog);
        return result;
    }

    std::vector<EvidenceItem> fetch_issue_evidence(const std::string& repo,
                                                   const Catalog& catalog) {
        struct Issue {
            int number = 0;
            std::optional<std::int64_t> created_at;
            std::vector<std::string> logins;  // assignees, commenters, mentions
        };
        std::vector<Issue> issues;
        paginate("/repos/" + repo + "/issues?state=all", [&](const nlohmann::json& item) {
            if (item.contains("pull_request")) return;  // the issues listing includes PRs
            Issue issue;
            issue.number = item.value("number", 0);
            if (item.contains("created_at") && item.at("created_at").is_string())
                issue.created_at = parse_iso_utc(item.at("created_at").get<std::string>());
            if (item.contains("assignees") && item.at("assignees").is_array())
                for (const auto& a : item.at("assignees"))
                    if (a.contains("login")) issue.logins.push_back(a.at("login").get<std::string>());
            if (item.contains("body") && item.at("body").is_string())
                for (auto& m : extract_mentions(item.at("body").get<std::string>()))
                    issue.logins.push_back(std::move(m));
            if (item.value("comments", 0) > 0) {
                paginate("/repos/" + repo + "/issues/" + std::to_string(issue.number) + "/comments",
                         [&](const nlohmann::json& c) {
                             if (c.contains("user") && c.at("user").contains("login"))
                                 issue.logins.push_back(c.at("user").at("login").get<std::string>());
                             if (c.contains("body") && c.at("body").is_string())
                                 for (auto& m : extract_mentions(c.at("body").get<std::string>()))
                                     issue.logins.push_back(std::move(m));
                         });
            }
            issues.push_back(std::move(issue));
        });

        std::vector<EvidenceItem> out;
        std::set<std::tuple<std::string, std::string, std::string>> seen;
        for (const Issue& issue : issues) {
            std::vector<ActiveRule> rules =
                issue.created_at
                    ? rules_active_at(catalog, date_from_unix_seconds(*issue.created_at))
                    : open_window_rules(catalog);
            std::string locator = std::to_string(issue.number);
            for (const ActiveRule& ar : rules) {
                if (ar.rule->category != Category::UserName) continue;
                for (const std::string& login : issue.logins) {
                    if (!detail::field_matches(login, *ar.rule)) continue;
                    if (seen.emplace(ar.agent->id, ar.rule->rule_id, locator).second)
                        out.push_back({ar.agent->id, ar.rule->rule_id, Category::UserName, locator,
                                       issue.created_at});
                    break;
                }
            }
        }
        return out;
    }

    const RateBudget& budget() const { return limiter_.budget(); }

  private:
    static nlohmann::json parse_json(const std::string& body) {
        try {
            return nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error& e) {
            throw MinerError(std::string("malformed JSON response: ") + e.what());
        }
    }

    static PrRecord parse_pr(const nlohmann::json& j) {
        PrRecord pr;
        pr.number = j.value("number", 0);
        if (j.contains("head") && j.at("head").contains("ref"))
            pr.head_branch = j.at("head").at("ref").get<std::string>();
        if (j.contains("labels") && j.at("labels").is_array())
            for (const auto& l : j.at("labels"))
                if (l.contains("name")) pr.labels.push_back(l.at("name").get<std::string>());
        if (j.contains("user") && j.at("user").is_object() && j.at("user").contains("login"))
            pr.author_login = j.at("user").at("login").get<std::string>();
        pr.is_draft = j.value("draft", false);
        pr.is_merged = j.contains("merged_at") && !j.at("merged_at").is_null();
        pr.is_closed = pr.is_merged || j.value("state", std::string()) == "closed";
        if (j.contains("created_at") && j.at("created_at").is_string())
            pr.created_at = parse_iso_utc(j.at("created_at").get<std::string>());
        if (j.contains("closed_at") && j.at("closed_at").is_string())
            pr.closed_at = parse_iso_utc(j.at("closed_at").get<std::string>());
        return pr;
    }

    HttpResponse get(const std::string& url) {
        limiter_.before_request();
        HttpRequest req;
        req.url = url;
        req.headers = {{"Accept", "application/vnd.github+json"},
                       {"User-Agent", "agentscan"},
                       {"X-GitHub-Api-Version", "2022-11-28"}};
        if (!token_.empty()) req.headers.emplace_back("Authorization", "Bearer " + token_);
        HttpResponse resp = transport_.send(req);
        limiter_.after_response(resp);
        check_status(resp, url);
        return resp;
    }

    void check_status(const HttpResponse& resp, const std::string& url) {
        if (resp.status == 200) return;
        if (resp.status == 401) throw AuthError("authentication failed (401) for " + url);
        if (resp.status == 403 || resp.status == 429) {
            std::int64_t reset = 0;
            std::string h = resp.header("X-RateLimit-Reset");
            if (!h.empty()) reset = std::atoll(h.c_str());
            throw RateLimitError("rate limited (" + std::to_string(resp.status) + ") for " + url,
                                 reset);
        }
        if (resp.status == 404) throw NotFoundError("not found (404): " + url);
        if (resp.status == 422) throw QueryError("unsupported query (422) for " + url);
        throw MinerError("HTTP " + std::to_string(resp.status) + " for " + url);
    }

    // Fetches numbered pages until a short page. Auth and rate-limit failures
    // keep their type (they are account-level conditions); any other failure
    // after the first successful page surfaces as a partial-result error with
    // the cursor of the last complete page.
    template <typename Fn>
    void paginate(const std::string& path_and_query, Fn&& per_item) {
        int page = 1;
        for (;;) {
            std::string url = base_url_ + path_and_query +
                              (path_and_query.find('?') == std::string::npos ? "?" : "&") +
                              "per_page=" + std::to_string(per_page) +
                              "&page=" + std::to_string(page);
            nlohmann::json doc;
            try {
                doc = parse_json(get(url).body);
            } catch (const AuthError&) {
                throw;
            } catch (const RateLimitError&) {
                throw;
            } catch (const MinerError&) {
                if (page > 1)
                    throw PartialResultError("pagination failed at page " + std::to_string(page),
                                             page - 1);
                throw;
            }
            if (!doc.is_array()) throw MinerError("expected a JSON array from " + url);
            for (const auto& item : doc) per_item(item);
            if (doc.size() < static_cast<size_t>(per_page)) break;
            ++page;
        }
    }

    HttpTransport& transport_;
    std::string token_;
    RateLimiter limiter_;
    std::string base_url_;
};

}  // namespace agentscan
