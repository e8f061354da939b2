#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "agentscan/builtin.hpp"
#include "agentscan/ghminer.hpp"

using namespace agentscan;

namespace {

const HeuristicRule& builtin_rule(const std::string& rule_id) {
    const HeuristicRule* r = builtin_catalog().find_rule(rule_id);
    REQUIRE(r != nullptr);
    return *r;
}

class FakeClock : public Clock {
  public:
    std::int64_t now = 1'000'000;
    std::int64_t now_ms() override { return now; }
    void sleep_ms(std::int64_t ms) override { now += ms; }
};

// Wraps another transport and records the fake-clock time of each request.
class TimestampingTransport : public HttpTransport {
  public:
    TimestampingTransport(HttpTransport& inner, FakeClock& clock)
        : inner_(inner), clock_(clock) {}
    HttpResponse send(const HttpRequest& request) override {
        times.push_back(clock_.now_ms());
        return inner_.send(request);
    }
    std::vector<std::int64_t> times;

  private:
    HttpTransport& inner_;
    FakeClock& clock_;
};

std::string pr_json(int number, const std::string& head, const std::string& login,
                    bool draft, bool merged, bool closed,
                    const std::vector<std::string>& labels = {}) {
    nlohmann::json j;
    j["number"] = number;
    j["head"] = {{"ref", head}};
    j["user"] = {{"login", login}};
    j["draft"] = draft;
    j["state"] = closed || merged ? "closed" : "open";
    j["merged_at"] = merged ? nlohmann::json("2025-10-02T10:00:00Z") : nlohmann::json(nullptr);
    j["created_at"] = "2025-10-01T00:00:00Z";
    j["closed_at"] = closed || merged ? nlohmann::json("2025-10-02T10:00:00Z")
                                      : nlohmann::json(nullptr);
    j["labels"] = nlohmann::json::array();
    for (const auto& l : labels) j["labels"].push_back({{"name", l}});
    return j.dump();
}

std::string pr_page(const std::vector<std::string>& prs) {
    std::string out = "[";
    for (size_t i = 0; i < prs.size(); ++i) {
        if (i) out += ",";
        out += prs[i];
    }
    return out + "]";
}

}  // namespace

TEST_CASE("build_search_query reproduces the published query strings") {
    struct Sample {
        const char* rule_id;
        const char* query;
        ArtifactType type;
    };
    const Sample samples[] = {
        {"generic:file:agents.md", R"(path:/(?:^|\/)(AGENTS\.md)$/)", ArtifactType::Code},
        {"claude-code:file:claude.md", R"(path:/(?:^|\/)(CLAUDE\.md)$/)", ArtifactType::Code},
        {"claude-code:file:.claude/", R"(path:/(?:^|\/)(\.claude\/)/)", ArtifactType::Code},
        {"cline:file:memory-bank/", R"(path:/(?:^|\/)(memory\-bank\/)/)", ArtifactType::Code},
        {"cline:file:memory_bank/", R"(path:/(?:^|\/)(memory_bank\/)/)", ArtifactType::Code},
        {"claude-code:file:.github/workflows/claude",
         R"(path:/(?:^|\/)(\.github\/workflows\/claude)/)", ArtifactType::Code},
        {"speckit:file:.specify/memory/constitution.md",
         R"(path:/(?:^|\/)(\.specify\/memory\/constitution\.md)$/)", ArtifactType::Code},
        {"aider:coauthor:aider@aider.chat", R"(Co-authored-by:"aider@aider.chat")",
         ArtifactType::Commits},
        {"claude-code:coauthor:noreply@anthropic.com",
         R"(Co-authored-by:"noreply@anthropic.com")", ArtifactType::Commits},
        {"gemini:coauthor:gemini-2.5-pro", R"(Co-authored-by:"Gemini 2.5 Pro")",
         ArtifactType::Commits},
        {"claude-code:author:claude", R"(author:"Claude")", ArtifactType::Commits},
        {"codex:branch:codex/", "head:codex/ type:pr", ArtifactType::PullRequests},
        {"claude-code:branch:claude/", "head:claude/ type:pr", ArtifactType::PullRequests},
        {"generic:label:ai-generated", "label:ai-generated type:pr", ArtifactType::PullRequests},
        {"codex:label:codex", "label:codex type:pr", ArtifactType::PullRequests},
    };
    for (const Sample& s : samples) {
        INFO(s.rule_id);
        SearchQuery q = build_search_query(builtin_rule(s.rule_id));
        CHECK(q.query_string == s.query);
        CHECK(q.artifact_type == s.type);
    }
}

TEST_CASE("build_search_query refuses user rules") {
    CHECK_THROWS_AS(build_search_query(builtin_rule("devin:user:devin-ai-integration")),
                    NotSearchableError);
}

TEST_CASE("build_search_query is total and deterministic over the builtin catalog") {
    for (const auto& agent : builtin_catalog().agents) {
        for (const auto& rule : agent.rules) {
            if (rule.category == Category::UserName) {
                CHECK_THROWS_AS(build_search_query(rule), NotSearchableError);
                continue;
            }
            SearchQuery a = build_search_query(rule);
            SearchQuery b = build_search_query(rule);
            CHECK_FALSE(a.query_string.empty());
            CHECK(a == b);
        }
    }
}

TEST_CASE("count_matches passes through the platform total") {
    ScriptedTransport transport;
    GithubClient client(transport);
    SearchQuery q = build_search_query(builtin_rule("generic:file:agents.md"));
    std::string url = "https://api.github.com/search/code?q=" + percent_encode(q.query_string);

    SECTION("non-zero count") {
        transport.add_json(url, 200, R"({"total_count": 37500, "items": []})");
        CHECK(client.count_matches(q) == 37500);
    }
    SECTION("zero count") {
        transport.add_json(url, 200, R"({"total_count": 0, "items": []})");
        CHECK(client.count_matches(q) == 0);
    }
    SECTION("commit queries hit the commits endpoint") {
        SearchQuery cq = build_search_query(builtin_rule("aider:coauthor:aider@aider.chat"));
        transport.add_json(
            "https://api.github.com/search/commits?q=" + percent_encode(cq.query_string), 200,
            R"({"total_count": 40800})");
        CHECK(client.count_matches(cq) == 40800);
    }
}

TEST_CASE("http status codes map to the documented errors") {
    ScriptedTransport transport;
    GithubClient client(transport);
    SearchQuery q = build_search_query(builtin_rule("generic:label:ai-generated"));
    std::string url = "https://api.github.com/search/issues?q=" + percent_encode(q.query_string);

    SECTION("403 carries the reset time and updates the budget") {
        transport.add_json(url, 403, R"({"message":"rate limited"})",
                           {{"X-RateLimit-Remaining", "0"}, {"X-RateLimit-Reset", "1760000123"}});
        try {
            client.count_matches(q);
            FAIL("expected RateLimitError");
        } catch (const RateLimitError& e) {
            CHECK(e.reset_at() == 1760000123);
        }
        CHECK(client.budget().remaining == 0);
        CHECK(client.budget().reset_at == 1760000123);
    }
    SECTION("401 is an auth error") {
        transport.add_json(url, 401, R"({"message":"bad credentials"})");
        CHECK_THROWS_AS(client.count_matches(q), AuthError);
    }
    SECTION("422 is an unsupported-query error") {
        transport.add_json(url, 422, R"({"message":"query too long"})");
        CHECK_THROWS_AS(client.count_matches(q), QueryError);
    }
}

TEST_CASE("an exhausted budget blocks requests before the reset time") {
    ScriptedTransport transport;
    FakeClock clock;
    RateBudget budget;
    budget.remaining = 0;
    budget.reset_at = clock.now / 1000 + 3600;
    GithubClient client(transport, "", budget, clock);
    SearchQuery q = build_search_query(builtin_rule("codex:label:codex"));
    CHECK_THROWS_AS(client.count_matches(q), RateLimitError);
    CHECK(transport.requests.empty());
}

TEST_CASE("min_interval_ms spaces out consecutive requests") {
    ScriptedTransport scripted;
    FakeClock clock;
    TimestampingTransport transport(scripted, clock);

    RateBudget budget;
    budget.min_interval_ms = 250;
    GithubClient client(transport, "", budget, clock);

    SearchQuery q = build_search_query(builtin_rule("codex:label:codex"));
    std::string url = "https://api.github.com/search/issues?q=" + percent_encode(q.query_string);
    scripted.add_json(url, 200, R"({"total_count": 1})");

    for (int i = 0; i < 5; ++i) client.count_matches(q);
    REQUIRE(transport.times.size() == 5);
    for (size_t i = 1; i < transport.times.size(); ++i)
        CHECK(transport.times[i] - transport.times[i - 1] >= 250);
}

TEST_CASE("fetch_pr_evidence pages through and matches branch, label, user rules") {
    const Catalog& catalog = builtin_catalog();
    std::vector<std::string> dataset = {
        pr_json(1, "codex/fix-null-deref", "someone", false, true, true),
        pr_json(2, "feature/plain", "human-dev", false, false, true),
        pr_json(3, "main-fix", "whoever", false, false, true, {"ai-generated"}),
        pr_json(4, "claude/add-tests", "copilot-swe-agent[bot]", true, false, false),
        pr_json(5, "docs", "another", false, true, true),
    };

    auto serve = [&](ScriptedTransport& t, int per_page) {
        int pages = (static_cast<int>(dataset.size()) + per_page - 1) / per_page;
        for (int p = 1; p <= pages + 1; ++p) {
            std::vector<std::string> page;
            for (int i = (p - 1) * per_page;
                 i < std::min<int>(p * per_page, static_cast<int>(dataset.size())); ++i)
                page.push_back(dataset[i]);
            t.add_json("https://api.github.com/repos/acme/widget/pulls?state=all&per_page=" +
                           std::to_string(per_page) + "&page=" + std::to_string(p),
                       200, pr_page(page));
        }
    };

    std::optional<GithubClient::PrFetchResult> reference;
    for (int per_page : {1, 2, 100}) {
        ScriptedTransport transport;
        serve(transport, per_page);
        GithubClient client(transport);
        client.per_page = per_page;
        auto result = client.fetch_pr_evidence("acme/widget", catalog);

        REQUIRE(result.records.size() == dataset.size());
        std::vector<int> numbers;
        for (const auto& pr : result.records) numbers.push_back(pr.number);
        std::sort(numbers.begin(), numbers.end());
        CHECK(numbers == std::vector<int>{1, 2, 3, 4, 5});

        if (!reference) {
            reference = result;

            std::set<std::tuple<std::string, std::string>> pairs;
            for (const auto& e : result.evidence) pairs.insert({e.agent_id, e.locator});
            CHECK(pairs == std::set<std::tuple<std::string, std::string>>{
                               {"codex", "1"},
                               {"generic", "3"},
                               {"claude-code", "4"},
                               {"copilot", "4"},  // author login, [bot] suffix normalized
                           });
        } else {
            // page size must not affect the fetched union
            auto key = [](const EvidenceItem& e) {
                return std::make_tuple(e.agent_id, e.rule_id, e.locator);
            };
            std::set<std::tuple<std::string, std::string, std::string>> a, b;
            for (const auto& e : reference->evidence) a.insert(key(e));
            for (const auto& e : result.evidence) b.insert(key(e));
            CHECK(a == b);
        }
    }
}

TEST_CASE("pr records preserve draft, merged, and closed state") {
    ScriptedTransport transport;
    transport.add_json("https://api.github.com/repos/o/r/pulls?state=all&per_page=100&page=1", 200,
                       pr_page({pr_json(9, "codex/x", "u", true, false, true)}));
    GithubClient client(transport);
    auto result = client.fetch_pr_evidence("o/r", builtin_catalog());
    REQUIRE(result.records.size() == 1);
    CHECK(result.records[0].is_draft);
    CHECK_FALSE(result.records[0].is_merged);
    CHECK(result.records[0].is_closed);
    REQUIRE(result.records[0].created_at.has_value());
    CHECK(format_iso_utc(*result.records[0].created_at) == "2025-10-01T00:00:00Z");
}

TEST_CASE("empty repositories yield empty fetch results") {
    ScriptedTransport transport;
    transport.add_json("https://api.github.com/repos/o/r/pulls?state=all&per_page=100&page=1", 200,
                       "[]");
    transport.add_json("https://api.github.com/repos/o/r/issues?state=all&per_page=100&page=1",
                       200, "[]");
    GithubClient client(transport);
    CHECK(client.fetch_pr_evidence("o/r", builtin_catalog()).records.empty());
    CHECK(client.fetch_issue_evidence("o/r", builtin_catalog()).empty());
}

TEST_CASE("pagination failure after a complete page is a partial-result error") {
    ScriptedTransport transport;
    std::vector<std::string> page1;
    for (int i = 0; i < 100; ++i)
        page1.push_back(pr_json(i + 1, "b" + std::to_string(i), "u", false, false, true));
    transport.add_json("https://api.github.com/repos/o/r/pulls?state=all&per_page=100&page=1", 200,
                       pr_page(page1));
    transport.add_json("https://api.github.com/repos/o/r/pulls?state=all&per_page=100&page=2", 500,
                       R"({"message":"boom"})");
    GithubClient client(transport);
    try {
        client.fetch_pr_evidence("o/r", builtin_catalog());
        FAIL("expected PartialResultError");
    } catch (const PartialResultError& e) {
        CHECK(e.last_complete_page() == 1);
    }
}

TEST_CASE("missing repositories raise not-found") {
    ScriptedTransport transport;
    transport.add_json("https://api.github.com/repos/o/gone/pulls?state=all&per_page=100&page=1",
                       404, R"({"message":"Not Found"})");
    GithubClient client(transport);
    CHECK_THROWS_AS(client.fetch_pr_evidence("o/gone", builtin_catalog()), NotFoundError);
}

TEST_CASE("fetch_issue_evidence matches assignees, commenters, and mentions") {
    const Catalog& catalog = builtin_catalog();
    ScriptedTransport transport;

    nlohmann::json issues = nlohmann::json::array();
    issues.push_back({{"number", 11},
                      {"created_at", "2025-09-01T00:00:00Z"},
                      {"assignees", nlohmann::json::array({{{"login", "devin-ai-integration"}}})},
                      {"body", "please fix"},
                      {"comments", 0}});
    issues.push_back({{"number", 12},
                      {"created_at", "2025-09-02T00:00:00Z"},
                      {"assignees", nlohmann::json::array()},
                      {"body", "cc @google-labs-jules please take a look"},
                      {"comments", 0}});
    issues.push_back({{"number", 13},
                      {"created_at", "2025-09-03T00:00:00Z"},
                      {"assignees", nlohmann::json::array()},
                      {"body", "email me at not-a-mention@google-labs-jules.example"},
                      {"comments", 1}});
    // a PR masquerading in the issues listing must be skipped
    issues.push_back({{"number", 14},
                      {"pull_request", {{"url", "x"}}},
                      {"body", "@devin-ai-integration"},
                      {"comments", 0}});

    transport.add_json("https://api.github.com/repos/o/r/issues?state=all&per_page=100&page=1",
                       200, issues.dump());
    nlohmann::json comments = nlohmann::json::array();
    comments.push_back({{"user", {{"login", "openhands-agent"}}}, {"body", "on it"}});
    transport.add_json(
        "https://api.github.com/repos/o/r/issues/13/comments?per_page=100&page=1", 200,
        comments.dump());

    GithubClient client(transport);
    auto evidence = client.fetch_issue_evidence("o/r", catalog);

    std::set<std::pair<std::string, std::string>> got;
    for (const auto& e : evidence) {
        CHECK(e.category == Category::UserName);
        got.insert({e.agent_id, e.locator});
    }
    CHECK(got == std::set<std::pair<std::string, std::string>>{
                     {"devin", "11"}, {"jules", "12"}, {"openhands", "13"}});
}

TEST_CASE("extract_mentions applies word boundaries") {
    auto m = extract_mentions("hi @alice and @bob-2, not user@host or a@@b");
    CHECK(m == std::vector<std::string>{"alice", "bob-2"});
    CHECK(extract_mentions("").empty());
    CHECK(extract_mentions("@lead").size() == 1);
}

TEST_CASE("recorded transport replays fixtures byte for byte") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("agentscan-rec-" + hex64(fnv1a64("t")) );
    fs::remove_all(dir);

    HttpResponse canned;
    canned.status = 200;
    canned.headers = {{"X-RateLimit-Remaining", "42"}, {"Content-Type", "application/json"}};
    canned.body = R"({"total_count": 37500})";
    std::string url = "https://api.github.com/search/code?q=test";
    RecordedTransport::write_fixture(dir, "GET", url, canned);

    RecordedTransport transport(dir);
    HttpRequest req;
    req.url = url;
    HttpResponse got = transport.send(req);
    CHECK(got.status == 200);
    CHECK(got.header("x-ratelimit-remaining") == "42");
    CHECK(got.body == canned.body);

    req.url = "https://api.github.com/other";
    CHECK_THROWS_AS(transport.send(req), MinerError);
    fs::remove_all(dir);
}
