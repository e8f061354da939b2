#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "agentscan/catalog.hpp"
#include "agentscan/commitscan.hpp"
#include "agentscan/evidence.hpp"
#include "agentscan/ghminer.hpp"
#include "agentscan/treescan.hpp"

namespace agentscan {

// ---- Adoption levels ----------------------------------------------------------

enum class AdoptionLevel { None = 0, ConfiguredOnly = 1, Experimental = 2, Pervasive = 3 };

inline const char* to_string(AdoptionLevel level) {
    switch (level) {
        case AdoptionLevel::None: return "none";
        case AdoptionLevel::ConfiguredOnly: return "configured_only";
        case AdoptionLevel::Experimental: return "experimental";
        case AdoptionLevel::Pervasive: return "pervasive";
    }
    return "?";
}

inline std::optional<AdoptionLevel> adoption_level_from_string(std::string_view s) {
    if (s == "none") return AdoptionLevel::None;
    if (s == "configured_only") return AdoptionLevel::ConfiguredOnly;
    if (s == "experimental") return AdoptionLevel::Experimental;
    if (s == "pervasive") return AdoptionLevel::Pervasive;
    return std::nullopt;
}

// Share of agent-marked commits above which use counts as pervasive. "Majority"
// is the documented boundary; the strict > keeps exactly-half out.
inline constexpr double kPervasiveShareThreshold = 0.5;

// Fuses the evidence kinds into one level. File markers alone are weak
// evidence (the project may have configured an agent and never used it), so
// they classify as configured-only rather than experimental.
inline AdoptionLevel classify_adoption(const CommitScanSummary& summary,
                                       std::span<const EvidenceItem> file_evidence,
                                       std::span<const EvidenceItem> pr_evidence,
                                       std::span<const EvidenceItem> issue_evidence,
                                       double pervasive_threshold = kPervasiveShareThreshold) {
    bool any_commit = summary.agent_commit_count > 0;
    bool any_file = !file_evidence.empty();
    bool any_pr = !pr_evidence.empty();
    bool any_issue = !issue_evidence.empty();
    if (!any_commit && !any_file && !any_pr && !any_issue) return AdoptionLevel::None;
    if (any_file && !any_commit && !any_pr && !any_issue) return AdoptionLevel::ConfiguredOnly;
    if (summary.agent_commit_share() > pervasive_threshold) return AdoptionLevel::Pervasive;
    return AdoptionLevel::Experimental;
}

// ---- Merge rate ------------------------------------------------------------------

// merged / (closed-or-merged), optionally leaving draft PRs out of the
// denominator. Returns nullopt (not 0) when nothing has been decided yet.
inline std::optional<double> merge_rate(std::span<const PrRecord> prs, bool exclude_drafts) {
    std::uint64_t considered = 0, merged = 0;
    for (const PrRecord& pr : prs) {
        if (!pr.is_closed && !pr.is_merged) continue;
        if (exclude_drafts && pr.is_draft) continue;
        ++considered;
        if (pr.is_merged) ++merged;
    }
    if (considered == 0) return std::nullopt;
    return static_cast<double>(merged) / static_cast<double>(considered);
}

// An undefined rate must stay distinguishable from zero, hence null.
inline std::string merge_rate_to_json(std::optional<double> rate) {
    if (!rate) return "null";
    nlohmann::json j = std::round(*rate * 10000.0) / 10000.0;
    return j.dump();
}

// ---- Adoption report ----------------------------------------------------------------

struct AgentReportStats {
    std::uint64_t files = 0;
    std::uint64_t commits_coauthor = 0;
    std::uint64_t commits_author = 0;
    std::uint64_t branches = 0;
    std::uint64_t labels = 0;
    std::uint64_t users = 0;
    std::uint64_t issues = 0;
    std::optional<std::int64_t> first_seen;
    std::optional<std::int64_t> last_seen;

    friend bool operator==(const AgentReportStats&, const AgentReportStats&) = default;
};

struct ReportObservability {
    std::vector<std::string> ignored_agent_rules;
    bool files_without_commit_markers = false;

    friend bool operator==(const ReportObservability&, const ReportObservability&) = default;
};

struct AdoptionReport {
    std::string repo_id;
    std::int64_t scanned_at = 0;
    int catalog_version = 1;
    AdoptionLevel adoption_level = AdoptionLevel::None;
    double agent_commit_share = 0.0;  // stored already rounded to 4 decimals
    std::map<std::string, AgentReportStats> agents;
    ReportObservability observability;

    friend bool operator==(const AdoptionReport&, const AdoptionReport&) = default;
};

class ReportConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Evidence gathered for one repository; the repo_id guards against fusing
// streams from different repositories into one report.
struct EvidenceBundle {
    std::string repo_id;
    std::vector<EvidenceItem> items;
};

inline double round4(double v) { return std::round(v * 10000.0) / 10000.0; }

struct ReportInputs {
    std::string repo_id;
    std::int64_t scanned_at = 0;
    int catalog_version = 1;
    CommitScanSummary summary;
    EvidenceBundle file_evidence;
    EvidenceBundle pr_evidence;
    EvidenceBundle issue_evidence;
    ObservabilityFlags observability;
    double pervasive_threshold = kPervasiveShareThreshold;
};

inline AdoptionReport build_report(const ReportInputs& in) {
    auto check_repo = [&](const EvidenceBundle& bundle, const char* what) {
        if (!bundle.repo_id.empty() && bundle.repo_id != in.repo_id)
            throw ReportConsistencyError(std::string(what) + " evidence is for repo '" +
                                         bundle.repo_id + "', report is for '" + in.repo_id + "'");
    };
    check_repo(in.file_evidence, "file");
    check_repo(in.pr_evidence, "pull-request");
    check_repo(in.issue_evidence, "issue");

    AdoptionReport report;
    report.repo_id = in.repo_id;
    report.scanned_at = in.scanned_at;
    report.catalog_version = in.catalog_version;
    report.agent_commit_share = round4(in.summary.agent_commit_share());

    auto touch_seen = [](AgentReportStats& stats, std::optional<std::int64_t> at) {
        if (!at) return;
        if (!stats.first_seen || *at < *stats.first_seen) stats.first_seen = at;
        if (!stats.last_seen || *at > *stats.last_seen) stats.last_seen = at;
    };

    for (const auto& [agent_id, stats] : in.summary.per_agent) {
        AgentReportStats& out = report.agents[agent_id];
        for (const EvidenceItem& ev : stats.evidence) {
            if (ev.category == Category::CommitCoAuthor) ++out.commits_coauthor;
            if (ev.category == Category::CommitAuthor) ++out.commits_author;
            touch_seen(out, ev.observed_at);
        }
    }
    for (const EvidenceItem& ev : in.file_evidence.items) {
        AgentReportStats& out = report.agents[ev.agent_id];
        ++out.files;
        touch_seen(out, ev.observed_at);
    }
    for (const EvidenceItem& ev : in.pr_evidence.items) {
        AgentReportStats& out = report.agents[ev.agent_id];
        switch (ev.category) {
            case Category::BranchPrefix: ++out.branches; break;
            case Category::PrLabel: ++out.labels; break;
            case Category::UserName: ++out.users; break;
            default: break;
        }
        touch_seen(out, ev.observed_at);
    }
    for (const EvidenceItem& ev : in.issue_evidence.items) {
        AgentReportStats& out = report.agents[ev.agent_id];
        ++out.issues;
        touch_seen(out, ev.observed_at);
    }

    report.adoption_level =
        classify_adoption(in.summary, in.file_evidence.items, in.pr_evidence.items,
                          in.issue_evidence.items, in.pervasive_threshold);

    std::set<std::string> seen_rules;
    for (const IgnoredAgentFile& f : in.observability.ignored_agent_files)
        if (seen_rules.insert(f.rule_id).second)
            report.observability.ignored_agent_rules.push_back(f.rule_id);
    report.observability.files_without_commit_markers =
        !in.file_evidence.items.empty() && in.summary.agent_commit_count == 0;

    return report;
}

// ---- Exclusion lists ------------------------------------------------------------------

struct ExclusionList {
    std::string repo_id;
    std::vector<std::string> commit_hashes;  // sorted, unique
    std::vector<long> pr_numbers;            // sorted, unique
    int catalog_version = 1;
    Date catalog_date{};
    std::int64_t scanned_at = 0;
};

// Every entry comes straight from an evidence locator: commit-category
// evidence contributes hashes, PR-category evidence contributes numbers.
inline ExclusionList exclusion_list(const std::string& repo_id,
                                    std::span<const EvidenceItem> commit_evidence,
                                    std::span<const EvidenceItem> pr_evidence,
                                    const Catalog& catalog, std::int64_t scanned_at) {
    ExclusionList out;
    out.repo_id = repo_id;
    out.catalog_version = catalog.schema_version;
    out.catalog_date = catalog.generated_on;
    out.scanned_at = scanned_at;

    std::set<std::string> hashes;
    for (const EvidenceItem& ev : commit_evidence)
        if (ev.category == Category::CommitCoAuthor || ev.category == Category::CommitAuthor)
            hashes.insert(ev.locator);
    out.commit_hashes.assign(hashes.begin(), hashes.end());

    std::set<long> numbers;
    for (const EvidenceItem& ev : pr_evidence)
        if (ev.category == Category::BranchPrefix || ev.category == Category::PrLabel ||
            ev.category == Category::UserName)
            numbers.insert(std::atol(ev.locator.c_str()));
    out.pr_numbers.assign(numbers.begin(), numbers.end());
    return out;
}

// ---- Rendering --------------------------------------------------------------------------

enum class OutputFormat { Json, Csv, Text };

inline std::optional<OutputFormat> output_format_from_string(std::string_view s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    return std::nullopt;
}

namespace detail {

inline nlohmann::ordered_json seen_or_null(std::optional<std::int64_t> ts) {
    return ts ? nlohmann::ordered_json(format_iso_utc(*ts)) : nlohmann::ordered_json(nullptr);
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const AdoptionReport& report) {
    nlohmann::ordered_json doc;
    doc["repo_id"] = report.repo_id;
    doc["scanned_at"] = format_iso_utc(report.scanned_at);
    doc["catalog_version"] = report.catalog_version;
    doc["adoption_level"] = to_string(report.adoption_level);
    doc["agent_commit_share"] = round4(report.agent_commit_share);
    doc["agents"] = nlohmann::ordered_json::object();
    for (const auto& [agent_id, stats] : report.agents) {
        nlohmann::ordered_json ja;
        ja["files"] = stats.files;
        ja["commits_coauthor"] = stats.commits_coauthor;
        ja["commits_author"] = stats.commits_author;
        ja["branches"] = stats.branches;
        ja["labels"] = stats.labels;
        ja["users"] = stats.users;
        ja["issues"] = stats.issues;
        ja["first_seen"] = detail::seen_or_null(stats.first_seen);
        ja["last_seen"] = detail::seen_or_null(stats.last_seen);
        doc["agents"][agent_id] = std::move(ja);
    }
    doc["observability"] = {{"ignored_agent_rules", report.observability.ignored_agent_rules},
                            {"files_without_commit_markers",
                             report.observability.files_without_commit_markers}};
    return doc;
}

inline AdoptionReport parse_report(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    AdoptionReport report;
    report.repo_id = doc.at("repo_id").get<std::string>();
    auto ts = parse_iso_utc(doc.at("scanned_at").get<std::string>());
    if (!ts) throw std::runtime_error("bad scanned_at timestamp");
    report.scanned_at = *ts;
    report.catalog_version = doc.at("catalog_version").get<int>();
    auto level = adoption_level_from_string(doc.at("adoption_level").get<std::string>());
    if (!level) throw std::runtime_error("bad adoption_level");
    report.adoption_level = *level;
    report.agent_commit_share = doc.at("agent_commit_share").get<double>();
    for (const auto& [agent_id, ja] : doc.at("agents").items()) {
        AgentReportStats stats;
        stats.files = ja.at("files").get<std::uint64_t>();
        stats.commits_coauthor = ja.at("commits_coauthor").get<std::uint64_t>();
        stats.commits_author = ja.at("commits_author").get<std::uint64_t>();
        stats.branches = ja.at("branches").get<std::uint64_t>();
        stats.labels = ja.at("labels").get<std::uint64_t>();
        stats.users = ja.at("users").get<std::uint64_t>();
        stats.issues = ja.at("issues").get<std::uint64_t>();
        if (!ja.at("first_seen").is_null())
            stats.first_seen = parse_iso_utc(ja.at("first_seen").get<std::string>());
        if (!ja.at("last_seen").is_null())
            stats.last_seen = parse_iso_utc(ja.at("last_seen").get<std::string>());
        report.agents[agent_id] = stats;
    }
    const auto& obs = doc.at("observability");
    report.observability.ignored_agent_rules =
        obs.at("ignored_agent_rules").get<std::vector<std::string>>();
    report.observability.files_without_commit_markers =
        obs.at("files_without_commit_markers").get<bool>();
    return report;
}

inline std::string render_report(const AdoptionReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            return report_to_json(report).dump(2) + "\n";
        case OutputFormat::Csv: {
            std::string out =
                "agent_id,files,commits_coauthor,commits_author,branches,labels,users,issues,"
                "first_seen,last_seen\n";
            for (const auto& [agent_id, s] : report.agents) {
                out += agent_id;
                for (std::uint64_t v : {s.files, s.commits_coauthor, s.commits_author, s.branches,
                                        s.labels, s.users, s.issues})
                    out += "," + std::to_string(v);
                out += ",";
                if (s.first_seen) out += format_iso_utc(*s.first_seen);
                out += ",";
                if (s.last_seen) out += format_iso_utc(*s.last_seen);
                out += "\n";
            }
            return out;
        }
        case OutputFormat::Text: {
            char share[32];
            std::snprintf(share, sizeof(share), "%.4f", report.agent_commit_share);
            std::string out;
            out += "repository:         " + report.repo_id + "\n";
            out += "scanned at:         " + format_iso_utc(report.scanned_at) + "\n";
            out += "catalog version:    " + std::to_string(report.catalog_version) + "\n";
            out += "adoption level:     " + std::string(to_string(report.adoption_level)) + "\n";
            out += "agent commit share: " + std::string(share) + "\n";
            if (report.agents.empty()) {
                out += "agents:             none detected\n";
            } else {
                out += "agents:\n";
                for (const auto& [agent_id, s] : report.agents) {
                    char line[256];
                    std::snprintf(line, sizeof(line),
                                  "  %-16s files %llu, co-authored %llu, authored %llu, "
                                  "branches %llu, labels %llu, users %llu, issues %llu\n",
                                  agent_id.c_str(), (unsigned long long)s.files,
                                  (unsigned long long)s.commits_coauthor,
                                  (unsigned long long)s.commits_author,
                                  (unsigned long long)s.branches, (unsigned long long)s.labels,
                                  (unsigned long long)s.users, (unsigned long long)s.issues);
                    out += line;
                }
            }
            if (!report.observability.ignored_agent_rules.empty()) {
                out += "ignored agent rules (.gitignore hides their files):\n";
                for (const std::string& rule : report.observability.ignored_agent_rules)
                    out += "  " + rule + "\n";
            }
            out += std::string("files without commit markers: ") +
                   (report.observability.files_without_commit_markers ? "yes" : "no") + "\n";
            return out;
        }
    }
    return {};
}

enum class ExclusionEmit { Commits, Prs, Both };

inline std::optional<ExclusionEmit> exclusion_emit_from_string(std::string_view s) {
    if (s == "commits") return ExclusionEmit::Commits;
    if (s == "prs") return ExclusionEmit::Prs;
    if (s == "both") return ExclusionEmit::Both;
    return std::nullopt;
}

// JSON carries both arrays (unselected sections stay empty); the plain variant
// is newline-delimited, one sha or PR number per line.
inline std::string render_exclusion_list(const ExclusionList& list, OutputFormat format,
                                         ExclusionEmit emit) {
    bool commits = emit != ExclusionEmit::Prs;
    bool prs = emit != ExclusionEmit::Commits;
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json doc;
        doc["repo_id"] = list.repo_id;
        doc["generated_from"] = {{"catalog_version", list.catalog_version},
                                 {"catalog_date", format_date(list.catalog_date)},
                                 {"scanned_at", format_iso_utc(list.scanned_at)}};
        doc["commit_hashes"] = commits ? list.commit_hashes : std::vector<std::string>{};
        doc["pr_numbers"] = prs ? list.pr_numbers : std::vector<long>{};
        return doc.dump(2) + "\n";
    }
    std::string out;
    if (commits)
        for (const std::string& h : list.commit_hashes) out += h + "\n";
    if (prs)
        for (long n : list.pr_numbers) out += std::to_string(n) + "\n";
    return out;
}

}  // namespace agentscan
