#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "agentscan/builtin.hpp"
#include "agentscan/commitscan.hpp"

using namespace agentscan;

namespace {

CommitRecord make_commit(std::string hash, std::string message, std::int64_t ts = 1760000000,
                         Identity author = {"Dev", "dev@example.com"}) {
    CommitRecord c;
    c.hash = std::move(hash);
    c.author = std::move(author);
    c.committer = {"Dev", "dev@example.com"};
    c.timestamp = ts;
    c.message = std::move(message);
    return c;
}

std::string hash_of(int i) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%040x", i + 1);
    return buf;
}

std::vector<ActiveRule> builtin_rules() {
    return rules_active_at(builtin_catalog(), Date{2025, 10, 20});
}

std::set<std::string> agent_set(const std::vector<EvidenceItem>& evidence) {
    std::set<std::string> out;
    for (const auto& e : evidence) out.insert(e.agent_id);
    return out;
}

}  // namespace

TEST_CASE("parse_trailers finds the final trailer block") {
    auto ts = parse_trailers("Fix bug\n\nCo-authored-by: Claude <noreply@anthropic.com>");
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].key == "Co-authored-by");
    CHECK(ts[0].value == "Claude <noreply@anthropic.com>");

    CHECK(parse_trailers("").empty());
    CHECK(parse_trailers("just a subject line").empty());
}

TEST_CASE("parse_trailers keeps casing and order, matches case-insensitively downstream") {
    auto ts = parse_trailers("msg\n\nco-authored-by: aider <aider@aider.chat>\nGenerated-by: Claude");
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].key == "co-authored-by");
    CHECK(ts[0].value == "aider <aider@aider.chat>");
    CHECK(ts[1].key == "Generated-by");
    CHECK(ts[1].value == "Claude");
}

TEST_CASE("parse_trailers rejects paragraphs with non-trailer lines") {
    CHECK(parse_trailers("subject\n\nplain text\nCo-authored-by: X <x@y>").empty());
    CHECK(parse_trailers("subject\n\nKey with space: value").empty());
    // separate final paragraph that is all trailers still parses
    auto ts = parse_trailers("subject\n\nbody text here\n\nSigned-off-by: Dev <d@e>\n"
                             "Co-authored-by: aider <aider@aider.chat>\n");
    REQUIRE(ts.size() == 2);
    CHECK(ts[1].key == "Co-authored-by");
}

TEST_CASE("parse_trailers folds indented continuation lines") {
    auto ts = parse_trailers("s\n\nCo-authored-by: Some Agent\n  <agent@example.com>");
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].value == "Some Agent <agent@example.com>");
}

TEST_CASE("parse_trailers returns duplicate keys in order") {
    auto ts = parse_trailers("s\n\nCo-authored-by: A <a@x>\nCo-authored-by: B <b@x>");
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].value == "A <a@x>");
    CHECK(ts[1].value == "B <b@x>");
}

TEST_CASE("parse_coauthor splits name and email") {
    Identity id = parse_coauthor("Claude <noreply@anthropic.com>");
    CHECK(id.name == "Claude");
    CHECK(id.email == "noreply@anthropic.com");

    id = parse_coauthor("cursoragent@cursor.com");
    CHECK(id.name.empty());
    CHECK(id.email == "cursoragent@cursor.com");

    id = parse_coauthor("   ");
    CHECK(id.empty());

    id = parse_coauthor("<only@email.com>");
    CHECK(id.name.empty());
    CHECK(id.email == "only@email.com");

    id = parse_coauthor("Just A Name");
    CHECK(id.name == "Just A Name");
    CHECK(id.email.empty());

    id = parse_coauthor("  Padded Name <p@x.com>  ");
    CHECK(id.name == "Padded Name");
    CHECK(id.email == "p@x.com");
}

TEST_CASE("match_commit finds co-author, author, and trailer-style advertisements") {
    auto rules = builtin_rules();

    SECTION("aider co-author email") {
        auto ev = match_commit(
            make_commit(hash_of(1), "Fix\n\nCo-authored-by: aider <aider@aider.chat>"), rules);
        auto agents = agent_set(ev);
        CHECK(agents.count("aider") == 1);
        for (const auto& e : ev) CHECK(e.locator == hash_of(1));
    }

    SECTION("Claude as commit author") {
        auto ev = match_commit(make_commit(hash_of(2), "Refactor", 1760000000,
                                           {"Claude", "noreply@anthropic.com"}),
                               rules);
        bool author_rule = false;
        for (const auto& e : ev)
            if (e.agent_id == "claude-code" && e.category == Category::CommitAuthor)
                author_rule = true;
        CHECK(author_rule);
    }

    SECTION("merge commit with no trailers") {
        auto c = make_commit(hash_of(3), "Merge branch 'main' into dev");
        c.parents = {hash_of(1), hash_of(2)};
        CHECK(match_commit(c, rules).empty());
    }

    SECTION("Generated-by advertisement matched as a name-only identity") {
        auto ev = match_commit(make_commit(hash_of(4), "Add docs\n\nGenerated-by: aider"), rules);
        CHECK(agent_set(ev).count("aider") == 1);
    }

    SECTION("[bot] suffix is normalized for literal identities") {
        Catalog c;
        c.schema_version = 1;
        c.generated_on = Date{2025, 1, 1};
        AgentDescriptor devin;
        devin.id = "devin";
        devin.display_name = "Devin";
        devin.generic = true;  // lone-descriptor fixture
        HeuristicRule r;
        r.rule_id = "devin:coauthor:devin-ai-integration";
        r.category = Category::CommitCoAuthor;
        r.pattern_kind = PatternKind::Literal;
        r.pattern = "devin-ai-integration";
        devin.rules.push_back(r);
        c.agents.push_back(devin);

        auto local = rules_active_at(c, Date{2025, 6, 1});
        auto ev = match_commit(
            make_commit(hash_of(5),
                        "Fix\n\nCo-authored-by: devin-ai-integration[bot] <bot@devin.ai>"),
            local);
        REQUIRE(ev.size() == 1);
        CHECK(ev[0].rule_id == "devin:coauthor:devin-ai-integration");
    }

    SECTION("duplicate matches collapse to one evidence item per rule") {
        auto ev = match_commit(
            make_commit(hash_of(6), "X\n\nCo-authored-by: aider <aider@aider.chat>\n"
                                    "Co-authored-by: aider <aider@aider.chat>"),
            rules);
        std::set<std::string> rule_ids;
        for (const auto& e : ev) CHECK(rule_ids.insert(e.rule_id).second);
    }
}

TEST_CASE("lax mode greps the whole message for co-authored-by lines") {
    auto rules = builtin_rules();
    auto commit = make_commit(
        hash_of(7), "Subject\n\nCo-authored-by: aider <aider@aider.chat>\nregular prose line\n");
    CHECK(match_commit(commit, rules).empty());

    auto ev = match_commit(commit, rules, CommitMatchOptions{.lax = true});
    CHECK(agent_set(ev).count("aider") == 1);
}

TEST_CASE("identity matching is case-insensitive in both directions") {
    auto rules = builtin_rules();
    for (const char* value :
         {"AIDER <AIDER@AIDER.CHAT>", "Aider <Aider@Aider.Chat>", "aider <aider@aider.chat>"}) {
        auto ev = match_commit(make_commit(hash_of(8), std::string("s\n\nCO-AUTHORED-BY: ") + value),
                               rules);
        INFO(value);
        CHECK(agent_set(ev).count("aider") == 1);
    }
}

TEST_CASE("evidence is unaffected by body text outside the trailer block") {
    auto rules = builtin_rules();
    std::string tail = "Co-authored-by: cursor <cursoragent@cursor.com>";
    auto base = match_commit(make_commit(hash_of(9), "subject\n\n" + tail), rules);
    REQUIRE_FALSE(base.empty());

    for (const char* body : {"some prose", "Co-authored-by mention in prose",
                             "multi\nline\nbody", "trailing spaces   "}) {
        auto ev = match_commit(
            make_commit(hash_of(9), std::string("subject\n\n") + body + "\n\n" + tail), rules);
        std::set<std::string> base_rules, got_rules;
        for (const auto& e : base) base_rules.insert(e.rule_id);
        for (const auto& e : ev) got_rules.insert(e.rule_id);
        CHECK(base_rules == got_rules);
    }
}

TEST_CASE("scan_history aggregates counts, share, and first/last timestamps") {
    const Catalog& catalog = builtin_catalog();

    SECTION("no matches yields share 0") {
        std::vector<CommitRecord> commits;
        for (int i = 0; i < 10; ++i) commits.push_back(make_commit(hash_of(i), "plain commit"));
        auto s = scan_history(commits, catalog);
        CHECK(s.total_commits == 10);
        CHECK(s.agent_commit_count == 0);
        CHECK(s.agent_commit_share() == 0.0);
        CHECK(s.per_agent.empty());
    }

    SECTION("70 of 120 matching yields share 0.5833") {
        std::vector<CommitRecord> commits;
        for (int i = 0; i < 120; ++i) {
            std::string msg = i < 70 ? "m\n\nCo-authored-by: aider <aider@aider.chat>" : "plain";
            commits.push_back(make_commit(hash_of(i), msg));
        }
        auto s = scan_history(commits, catalog);
        CHECK(s.total_commits == 120);
        CHECK(s.agent_commit_count == 70);
        CHECK(std::round(s.agent_commit_share() * 10000.0) / 10000.0 == 0.5833);
    }

    SECTION("per-agent counts and timestamps on a planted fixture") {
        std::vector<CommitRecord> commits;
        std::int64_t base = 1760000000;
        for (int i = 0; i < 20; ++i) {
            std::string msg = "commit " + std::to_string(i);
            if (i == 2 || i == 7 || i == 11)
                msg += "\n\nCo-authored-by: aider <aider@aider.chat>";
            if (i == 4 || i == 15)
                msg += "\n\nCo-authored-by: Claude <noreply@anthropic.com>";
            commits.push_back(make_commit(hash_of(i), msg, base + i * 3600));
        }
        auto s = scan_history(commits, catalog);
        CHECK(s.total_commits == 20);
        CHECK(s.agent_commit_count == 5);
        REQUIRE(s.per_agent.count("aider") == 1);
        REQUIRE(s.per_agent.count("claude-code") == 1);
        CHECK(s.per_agent.at("aider").commit_count == 3);
        CHECK(s.per_agent.at("claude-code").commit_count == 2);
        // the aider plant matches two rules per commit (name and email)
        CHECK(s.per_agent.at("aider").evidence.size() == 6);
        CHECK(s.per_agent.at("claude-code").evidence.size() == 2);
        CHECK(s.per_agent.at("aider").first_seen == base + 2 * 3600);
        CHECK(s.per_agent.at("aider").last_seen == base + 11 * 3600);
        CHECK(s.per_agent.at("claude-code").first_seen == base + 4 * 3600);
        CHECK(s.per_agent.at("claude-code").last_seen == base + 15 * 3600);
    }
}

TEST_CASE("scan_history is order-independent and parallelism-invariant") {
    const Catalog& catalog = builtin_catalog();
    std::mt19937 rng(123);

    std::vector<CommitRecord> commits;
    for (int i = 0; i < 60; ++i) {
        std::string msg = "c" + std::to_string(i);
        if (i % 3 == 0) msg += "\n\nCo-authored-by: aider <aider@aider.chat>";
        if (i % 7 == 0) msg += "\n\nCo-authored-by: Claude <noreply@anthropic.com>";
        commits.push_back(make_commit(hash_of(i), msg, 1760000000 + (rng() % 100000)));
    }

    auto reference = scan_history(commits, catalog);
    for (int perm = 0; perm < 4; ++perm) {
        std::shuffle(commits.begin(), commits.end(), rng);
        CHECK(scan_history(commits, catalog) == reference);
    }
    for (int jobs : {2, 3, 8}) {
        ScanOptions opts;
        opts.jobs = jobs;
        CHECK(scan_history(commits, catalog, opts) == reference);
    }
}

TEST_CASE("share stays within [0,1] and moves the right way as commits arrive") {
    const Catalog& catalog = builtin_catalog();
    std::mt19937 rng(99);
    std::vector<CommitRecord> commits;

    double previous = 0.0;
    for (int i = 0; i < 200; ++i) {
        bool matching = rng() % 2 == 0;
        commits.push_back(make_commit(
            hash_of(i),
            matching ? "m\n\nCo-authored-by: aider <aider@aider.chat>" : "plain commit"));
        auto s = scan_history(commits, catalog);
        double share = s.agent_commit_share();
        CHECK(share >= 0.0);
        CHECK(share <= 1.0);
        if (matching)
            CHECK(share >= previous);
        else
            CHECK(share <= previous);
        previous = share;
    }
}

TEST_CASE("commits without a timestamp match open-window rules only") {
    Catalog c;
    c.schema_version = 1;
    c.generated_on = Date{2025, 1, 1};
    AgentDescriptor a;
    a.id = "windowed";
    a.display_name = "Windowed";
    a.generic = true;
    HeuristicRule open;
    open.rule_id = "w:coauthor:open";
    open.category = Category::CommitCoAuthor;
    open.pattern_kind = PatternKind::Literal;
    open.pattern = "agent@open.dev";
    a.rules.push_back(open);
    HeuristicRule windowed = open;
    windowed.rule_id = "w:coauthor:windowed";
    windowed.pattern = "agent@windowed.dev";
    windowed.valid_from = Date{2020, 1, 1};
    a.rules.push_back(windowed);
    c.agents.push_back(a);

    auto commit = make_commit(hash_of(1),
                              "s\n\nCo-authored-by: A <agent@open.dev>\n"
                              "Co-authored-by: B <agent@windowed.dev>",
                              /*ts=*/0);
    auto s = scan_history(std::vector<CommitRecord>{commit}, c);
    REQUIRE(s.per_agent.count("windowed") == 1);
    std::set<std::string> matched;
    for (const auto& e : s.per_agent.at("windowed").evidence) matched.insert(e.rule_id);
    CHECK(matched == std::set<std::string>{"w:coauthor:open"});
    CHECK_FALSE(s.per_agent.at("windowed").first_seen.has_value());
}
