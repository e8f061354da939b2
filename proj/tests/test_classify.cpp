#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "agentscan/builtin.hpp"
#include "agentscan/classify.hpp"

using namespace agentscan;

namespace {

EvidenceItem ev(std::string agent, std::string rule, Category cat, std::string locator,
                std::optional<std::int64_t> at = std::nullopt) {
    return {std::move(agent), std::move(rule), cat, std::move(locator), at};
}

CommitScanSummary summary_with(std::uint64_t total, std::uint64_t matched,
                               const std::string& agent = "aider") {
    CommitScanSummary s;
    s.total_commits = total;
    s.agent_commit_count = matched;
    for (std::uint64_t i = 0; i < matched; ++i) {
        char hash[48];
        std::snprintf(hash, sizeof(hash), "%040llx", static_cast<unsigned long long>(i + 1));
        s.per_agent[agent].evidence.push_back(
            ev(agent, agent + ":coauthor:x", Category::CommitCoAuthor, hash,
               1760000000 + static_cast<std::int64_t>(i)));
    }
    if (matched > 0) {
        s.per_agent[agent].first_seen = 1760000000;
        s.per_agent[agent].last_seen = 1760000000 + static_cast<std::int64_t>(matched) - 1;
    }
    return s;
}

PrRecord pr(int number, bool draft, bool merged, bool closed) {
    PrRecord p;
    p.number = number;
    p.is_draft = draft;
    p.is_merged = merged;
    p.is_closed = closed || merged;
    return p;
}

}  // namespace

TEST_CASE("classify_adoption applies the level ladder") {
    std::vector<EvidenceItem> none;
    std::vector<EvidenceItem> file = {ev("claude-code", "claude-code:file:claude.md",
                                         Category::FilePath, "CLAUDE.md")};
    std::vector<EvidenceItem> prs = {ev("codex", "codex:branch:codex/", Category::BranchPrefix,
                                        "7")};

    CHECK(classify_adoption(summary_with(10, 0), none, none, none) == AdoptionLevel::None);
    CHECK(classify_adoption(summary_with(10, 0), file, none, none) ==
          AdoptionLevel::ConfiguredOnly);
    CHECK(classify_adoption(summary_with(120, 70), file, none, none) == AdoptionLevel::Pervasive);
    CHECK(classify_adoption(summary_with(120, 30), file, none, none) ==
          AdoptionLevel::Experimental);
    CHECK(classify_adoption(summary_with(0, 0), none, prs, none) == AdoptionLevel::Experimental);
    // exactly half is not a majority
    CHECK(classify_adoption(summary_with(10, 5), none, none, none) == AdoptionLevel::Experimental);
    CHECK(classify_adoption(summary_with(10, 6), none, none, none) == AdoptionLevel::Pervasive);
}

TEST_CASE("merge_rate arithmetic and the draft effect") {
    SECTION("3 of 4 non-draft PRs merged") {
        std::vector<PrRecord> prs = {pr(1, false, true, true), pr(2, false, true, true),
                                     pr(3, false, true, true), pr(4, false, false, true)};
        auto rate = merge_rate(prs, false);
        REQUIRE(rate.has_value());
        CHECK(*rate == 0.75);
    }

    SECTION("unmerged drafts depress the rate until excluded") {
        std::vector<PrRecord> prs;
        for (int i = 1; i <= 6; ++i) prs.push_back(pr(i, false, true, true));
        for (int i = 7; i <= 10; ++i) prs.push_back(pr(i, true, false, true));
        auto with_drafts = merge_rate(prs, false);
        auto without_drafts = merge_rate(prs, true);
        REQUIRE(with_drafts.has_value());
        REQUIRE(without_drafts.has_value());
        CHECK(*with_drafts == 0.6);
        CHECK(*without_drafts == 1.0);
    }

    SECTION("open PRs are not considered") {
        std::vector<PrRecord> prs = {pr(1, false, false, false), pr(2, false, true, true)};
        auto rate = merge_rate(prs, false);
        REQUIRE(rate.has_value());
        CHECK(*rate == 1.0);
    }

    SECTION("no decided PRs -> undefined, serialized as null") {
        CHECK_FALSE(merge_rate({}, false).has_value());
        std::vector<PrRecord> open_only = {pr(1, false, false, false)};
        CHECK_FALSE(merge_rate(open_only, false).has_value());
        CHECK(merge_rate_to_json(merge_rate({}, false)) == "null");
        CHECK(merge_rate_to_json(0.6) == "0.6");
    }
}

TEST_CASE("build_report fuses evidence into per-agent counts") {
    ReportInputs in;
    in.repo_id = "fixtures/planted";
    in.scanned_at = 1760918400;
    in.catalog_version = 1;
    in.summary = summary_with(20, 3);
    in.file_evidence = {"fixtures/planted",
                        {ev("claude-code", "claude-code:file:claude.md", Category::FilePath,
                            "CLAUDE.md"),
                         ev("claude-code", "claude-code:file:.claude/", Category::FilePath,
                            ".claude/settings.json")}};
    in.pr_evidence = {"fixtures/planted",
                      {ev("codex", "codex:branch:codex/", Category::BranchPrefix, "7", 1760000500),
                       ev("codex", "codex:label:codex", Category::PrLabel, "7", 1760000500),
                       ev("copilot", "copilot:user:copilot-swe-agent", Category::UserName, "8")}};
    in.issue_evidence = {"fixtures/planted",
                         {ev("devin", "devin:user:devin-ai-integration", Category::UserName,
                             "3")}};
    in.observability.ignored_agent_files = {{".claude/", "claude-code:file:.claude/"}};

    AdoptionReport report = build_report(in);
    CHECK(report.adoption_level == AdoptionLevel::Experimental);
    CHECK(report.agent_commit_share == 0.15);
    CHECK(report.agents.at("aider").commits_coauthor == 3);
    CHECK(report.agents.at("claude-code").files == 2);
    CHECK(report.agents.at("codex").branches == 1);
    CHECK(report.agents.at("codex").labels == 1);
    CHECK(report.agents.at("copilot").users == 1);
    CHECK(report.agents.at("devin").issues == 1);
    CHECK(report.agents.at("codex").first_seen == 1760000500);
    CHECK(report.observability.ignored_agent_rules ==
          std::vector<std::string>{"claude-code:file:.claude/"});
    CHECK_FALSE(report.observability.files_without_commit_markers);
}

TEST_CASE("build_report flags file markers without commit markers") {
    ReportInputs in;
    in.repo_id = "r";
    in.summary = summary_with(10, 0);
    in.file_evidence = {"r", {ev("kiro", "kiro:file:.kiro/", Category::FilePath, ".kiro/specs")}};
    AdoptionReport report = build_report(in);
    CHECK(report.adoption_level == AdoptionLevel::ConfiguredOnly);
    CHECK(report.observability.files_without_commit_markers);
}

TEST_CASE("build_report rejects mismatched repositories") {
    ReportInputs in;
    in.repo_id = "repo-a";
    in.pr_evidence = {"repo-b", {}};
    CHECK_THROWS_AS(build_report(in), ReportConsistencyError);
}

TEST_CASE("report JSON uses the documented schema and round-trips") {
    ReportInputs in;
    in.repo_id = "acme/widget";
    in.scanned_at = 1760918400;
    in.summary = summary_with(120, 70);
    in.file_evidence = {"acme/widget",
                        {ev("claude-code", "claude-code:file:claude.md", Category::FilePath,
                            "CLAUDE.md")}};
    in.observability.ignored_agent_files = {{"CLAUDE.md", "claude-code:file:claude.md"}};
    AdoptionReport report = build_report(in);

    std::string json = render_report(report, OutputFormat::Json);
    auto doc = nlohmann::json::parse(json);

    const char* keys[] = {"repo_id",     "scanned_at", "catalog_version", "adoption_level",
                          "agent_commit_share", "agents",     "observability"};
    for (const char* k : keys) {
        INFO(k);
        CHECK(doc.contains(k));
    }
    CHECK(doc.size() == std::size(keys));
    CHECK(doc["adoption_level"] == "pervasive");
    CHECK(doc["agent_commit_share"] == 0.5833);
    CHECK(json.find("\"agent_commit_share\": 0.5833") != std::string::npos);
    CHECK(doc["scanned_at"] == "2025-10-20T00:00:00Z");
    const auto& agent = doc["agents"]["aider"];
    for (const char* k : {"files", "commits_coauthor", "commits_author", "branches", "labels",
                          "users", "issues", "first_seen", "last_seen"})
        CHECK(agent.contains(k));
    CHECK(doc["observability"]["ignored_agent_rules"][0] == "claude-code:file:claude.md");
    CHECK(doc["observability"].contains("files_without_commit_markers"));

    CHECK(parse_report(json) == report);
}

TEST_CASE("csv and text renderings carry the per-agent rows") {
    ReportInputs in;
    in.repo_id = "r";
    in.scanned_at = 1760918400;
    in.summary = summary_with(4, 2);
    AdoptionReport report = build_report(in);

    std::string csv = render_report(report, OutputFormat::Csv);
    CHECK(csv.starts_with("agent_id,files,commits_coauthor,"));
    CHECK(csv.find("aider,0,2,0,0,0,0,0,") != std::string::npos);

    std::string text = render_report(report, OutputFormat::Text);
    CHECK(text.find("adoption level:     experimental") != std::string::npos);
    CHECK(text.find("0.5000") != std::string::npos);
    CHECK(text.find("aider") != std::string::npos);
}

TEST_CASE("exclusion lists stay within the evidence locators") {
    std::string h1(40, 'a'), h2(40, 'b');
    std::vector<EvidenceItem> commit_ev = {
        ev("aider", "aider:coauthor:aider", Category::CommitCoAuthor, h2),
        ev("aider", "aider:coauthor:aider@aider.chat", Category::CommitCoAuthor, h2),
        ev("claude-code", "claude-code:author:claude", Category::CommitAuthor, h1),
    };
    std::vector<EvidenceItem> pr_ev = {
        ev("codex", "codex:branch:codex/", Category::BranchPrefix, "7"),
        ev("codex", "codex:label:codex", Category::PrLabel, "7"),
    };
    ExclusionList list =
        exclusion_list("r", commit_ev, pr_ev, builtin_catalog(), 1760918400);
    CHECK(list.commit_hashes == std::vector<std::string>{h1, h2});
    CHECK(list.pr_numbers == std::vector<long>{7});

    SECTION("json rendering") {
        std::string json = render_exclusion_list(list, OutputFormat::Json, ExclusionEmit::Both);
        auto doc = nlohmann::json::parse(json);
        CHECK(doc["commit_hashes"].size() == 2);
        CHECK(doc["pr_numbers"] == nlohmann::json::array({7}));
        CHECK(doc["generated_from"]["catalog_version"] == 1);
        CHECK(doc["generated_from"]["catalog_date"] == "2025-10-20");
    }
    SECTION("plain rendering honors the emit selection") {
        CHECK(render_exclusion_list(list, OutputFormat::Text, ExclusionEmit::Commits) ==
              h1 + "\n" + h2 + "\n");
        CHECK(render_exclusion_list(list, OutputFormat::Text, ExclusionEmit::Prs) == "7\n");
        CHECK(render_exclusion_list(list, OutputFormat::Text, ExclusionEmit::Both) ==
              h1 + "\n" + h2 + "\n7\n");
    }
    SECTION("empty evidence yields empty lists") {
        ExclusionList empty = exclusion_list("r", {}, {}, builtin_catalog(), 0);
        CHECK(empty.commit_hashes.empty());
        CHECK(empty.pr_numbers.empty());
    }
}

TEST_CASE("adoption level never decreases as evidence grows") {
    std::mt19937 rng(2025);
    for (int trial = 0; trial < 200; ++trial) {
        CommitScanSummary summary;
        summary.total_commits = 1 + rng() % 5;  // some unmatched history to start from
        std::vector<EvidenceItem> file, prs, issues;

        AdoptionLevel previous = classify_adoption(summary, file, prs, issues);
        CHECK(previous == AdoptionLevel::None);

        for (int step = 0; step < 40; ++step) {
            switch (rng() % 4) {
                case 0:
                    file.push_back(ev("kiro", "kiro:file:.kiro/", Category::FilePath,
                                      ".kiro/" + std::to_string(step)));
                    break;
                case 1: {
                    char hash[48];
                    std::snprintf(hash, sizeof(hash), "%040x", step + trial * 64);
                    CommitRecord c;
                    c.hash = hash;
                    c.timestamp = 1760000000;
                    summary.add_commit(c, {ev("aider", "aider:coauthor:aider",
                                              Category::CommitCoAuthor, hash, c.timestamp)});
                    break;
                }
                case 2:
                    prs.push_back(ev("codex", "codex:branch:codex/", Category::BranchPrefix,
                                     std::to_string(step)));
                    break;
                case 3:
                    issues.push_back(ev("devin", "devin:user:devin-ai-integration",
                                        Category::UserName, std::to_string(step)));
                    break;
            }
            AdoptionLevel level = classify_adoption(summary, file, prs, issues);
            CHECK(static_cast<int>(level) >= static_cast<int>(previous));
            previous = level;
        }
    }
}
