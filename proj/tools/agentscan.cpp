// agentscan: detects and reports coding-agent activity in repositories.
//
// Exit codes: 0 success, 1 internal or validation error, 2 unreadable
// repository, 3 authentication/rate-limit failure while mining.

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "agentscan/builtin.hpp"
#include "agentscan/catalog.hpp"
#include "agentscan/classify.hpp"
#include "agentscan/commitscan.hpp"
#include "agentscan/ghminer.hpp"
#include "agentscan/gitrepo.hpp"
#include "agentscan/http_live.hpp"
#include "agentscan/treescan.hpp"

using namespace agentscan;

namespace {

struct CliConfig {
    std::string catalog_path;
    std::string format = "text";
    std::string output_path;
    std::string as_of;
    bool lax = false;
    int jobs = 1;
    std::string emit = "both";
    bool all_revisions = false;
};

void add_common_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--catalog", cfg.catalog_path, "Heuristic catalog file (default: builtin)");
    cmd->add_option("--format", cfg.format, "Output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--output", cfg.output_path, "Write output to this path instead of stdout");
    cmd->add_option("--as-of", cfg.as_of, "Evaluate rule validity windows at this date (YYYY-MM-DD)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Catalog load_catalog_option(const CliConfig& cfg) {
    if (cfg.catalog_path.empty()) return builtin_catalog();
    return load_catalog(read_file(cfg.catalog_path));
}

Date today_utc() { return date_from_unix_seconds(static_cast<std::int64_t>(std::time(nullptr))); }

std::optional<Date> as_of_date(const CliConfig& cfg) {
    if (cfg.as_of.empty()) return std::nullopt;
    auto d = parse_date(cfg.as_of);
    if (!d) throw std::runtime_error("--as-of must be a YYYY-MM-DD date, got '" + cfg.as_of + "'");
    return d;
}

OutputFormat format_of(const CliConfig& cfg) {
    return *output_format_from_string(cfg.format);
}

void emit_payload(const CliConfig& cfg, const std::string& payload) {
    if (cfg.output_path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + cfg.output_path);
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

std::unique_ptr<HttpTransport> make_transport() {
    if (const char* dir = std::getenv("AGENTSCAN_HTTP_FIXTURES"); dir && *dir)
        return std::make_unique<RecordedTransport>(dir);
    return std::make_unique<HttplibTransport>();
}

// File evidence across all revisions, each path reported at its first
// introduction only.
std::vector<EvidenceItem> scan_all_revisions(const GitRepo& repo, const Catalog& catalog,
                                             const std::optional<Date>& as_of) {
    std::vector<EvidenceItem> out;
    std::set<std::tuple<std::string, std::string, std::string>> seen;
    for (const auto& intro : repo.first_introductions()) {
        Date at = as_of ? *as_of : date_from_unix_seconds(intro.timestamp);
        for (const ActiveRule& ar : rules_active_at(catalog, at)) {
            if (ar.rule->category != Category::FilePath) continue;
            if (!match_path(intro.path, *ar.rule)) continue;
            if (seen.emplace(ar.agent->id, ar.rule->rule_id, intro.path).second)
                out.push_back({ar.agent->id, ar.rule->rule_id, Category::FilePath, intro.path,
                               intro.timestamp});
        }
    }
    return out;
}

struct LocalScan {
    CommitScanSummary summary;
    std::vector<EvidenceItem> file_evidence;
    ObservabilityFlags observability;
};

LocalScan scan_local_repo(const GitRepo& repo, const Catalog& catalog, const CliConfig& cfg) {
    auto as_of = as_of_date(cfg);
    LocalScan scan;

    std::vector<CommitRecord> commits = repo.load_commits();
    ScanOptions opts;
    opts.lax = cfg.lax;
    opts.jobs = cfg.jobs;
    opts.as_of = as_of;
    scan.summary = scan_history(commits, catalog, opts);

    if (cfg.all_revisions) {
        scan.file_evidence = scan_all_revisions(repo, catalog, as_of);
    } else {
        auto tree = repo.list_tree();
        scan.file_evidence = scan_tree(tree, catalog, as_of ? *as_of : today_utc());
    }

    auto ignore_lines = repo.read_gitignore();
    scan.observability = detect_reduced_observability(ignore_lines, catalog);
    return scan;
}

std::int64_t scan_timestamp(const CliConfig& cfg) {
    auto as_of = as_of_date(cfg);
    return unix_seconds_from_date(as_of ? *as_of : today_utc());
}

std::vector<EvidenceItem> commit_evidence_of(const CommitScanSummary& summary) {
    std::vector<EvidenceItem> out;
    for (const auto& [agent, stats] : summary.per_agent)
        out.insert(out.end(), stats.evidence.begin(), stats.evidence.end());
    sort_evidence(out);
    return out;
}

int cmd_scan(const std::string& repo_path, const CliConfig& cfg) {
    GitRepo repo(repo_path);
    if (!repo.is_repository()) {
        std::cerr << "error: " << repo_path << " is not a readable repository\n";
        return 2;
    }
    Catalog catalog = load_catalog_option(cfg);
    LocalScan scan = scan_local_repo(repo, catalog, cfg);

    ReportInputs inputs;
    inputs.repo_id = repo_path;
    inputs.scanned_at = scan_timestamp(cfg);
    inputs.catalog_version = catalog.schema_version;
    inputs.summary = std::move(scan.summary);
    inputs.file_evidence = {repo_path, std::move(scan.file_evidence)};
    inputs.observability = std::move(scan.observability);

    emit_payload(cfg, render_report(build_report(inputs), format_of(cfg)));
    return 0;
}

int cmd_mine(const std::string& slug, const CliConfig& cfg) {
    if (slug.find('/') == std::string::npos) {
        std::cerr << "error: expected owner/name repository slug, got '" << slug << "'\n";
        return 1;
    }
    Catalog catalog = load_catalog_option(cfg);
    auto transport = make_transport();
    GithubClient client(*transport, github_token_from_env());

    GithubClient::PrFetchResult prs;
    std::vector<EvidenceItem> issue_evidence;
    try {
        prs = client.fetch_pr_evidence(slug, catalog);
        issue_evidence = client.fetch_issue_evidence(slug, catalog);
    } catch (const AuthError& e) {
        std::cerr << "error code=auth message=\"" << e.what() << "\"\n";
        return 3;
    } catch (const RateLimitError& e) {
        std::cerr << "error code=rate_limit reset_at=" << e.reset_at() << " message=\"" << e.what()
                  << "\"\n";
        return 3;
    } catch (const NotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    ReportInputs inputs;
    inputs.repo_id = slug;
    inputs.scanned_at = scan_timestamp(cfg);
    inputs.catalog_version = catalog.schema_version;
    inputs.pr_evidence = {slug, prs.evidence};
    inputs.issue_evidence = {slug, issue_evidence};

    std::string payload = render_report(build_report(inputs), format_of(cfg));
    if (format_of(cfg) == OutputFormat::Text) {
        auto fmt = [](std::optional<double> r) {
            if (!r) return std::string("n/a");
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.4f", *r);
            return std::string(buf);
        };
        payload += "merge rate (closed PRs): " + fmt(merge_rate(prs.records, false)) + "\n";
        payload += "merge rate excluding drafts: " + fmt(merge_rate(prs.records, true)) + "\n";
    }
    emit_payload(cfg, payload);
    return 0;
}

int cmd_counts(const std::vector<std::string>& rule_ids, bool all, const CliConfig& cfg) {
    Catalog catalog = load_catalog_option(cfg);
    std::vector<const HeuristicRule*> rules;
    bool bad_selection = false;
    if (all) {
        for (const auto& agent : catalog.agents)
            for (const auto& rule : agent.rules)
                if (rule.category != Category::UserName) rules.push_back(&rule);
    } else {
        for (const std::string& id : rule_ids) {
            const HeuristicRule* rule = catalog.find_rule(id);
            if (!rule) {
                std::cerr << "error: unknown rule_id '" << id << "'\n";
                bad_selection = true;
            } else if (rule->category == Category::UserName) {
                std::cerr << "error: rule '" << id
                          << "' is a user_name rule and is matched locally, not searched\n";
                bad_selection = true;
            } else {
                rules.push_back(rule);
            }
        }
    }
    if (rules.empty()) {
        std::cerr << "error: no searchable rules selected (pass rule ids or --all)\n";
        return 1;
    }

    auto transport = make_transport();
    GithubClient client(*transport, github_token_from_env());
    std::cerr << "note: match counts are approximate platform totals retrieved "
              << format_iso_utc(static_cast<std::int64_t>(std::time(nullptr)))
              << "; they drift over time\n";

    std::string payload;
    try {
        for (const HeuristicRule* rule : rules) {
            SearchQuery q = build_search_query(*rule);
            long count = client.count_matches(q);
            payload += rule->rule_id + "\t" + q.query_string + "\t" + std::to_string(count) + "\n";
        }
    } catch (const AuthError& e) {
        std::cerr << "error code=auth message=\"" << e.what() << "\"\n";
        return 3;
    } catch (const RateLimitError& e) {
        std::cerr << "error code=rate_limit reset_at=" << e.reset_at() << " message=\"" << e.what()
                  << "\"\n";
        return 3;
    }
    emit_payload(cfg, payload);
    return bad_selection ? 1 : 0;
}

int cmd_filter(const std::string& repo_path, const CliConfig& cfg) {
    GitRepo repo(repo_path);
    if (!repo.is_repository()) {
        std::cerr << "error: " << repo_path << " is not a readable repository\n";
        return 2;
    }
    Catalog catalog = load_catalog_option(cfg);
    LocalScan scan = scan_local_repo(repo, catalog, cfg);
    std::vector<EvidenceItem> commit_evidence = commit_evidence_of(scan.summary);

    ExclusionList list =
        exclusion_list(repo_path, commit_evidence, {}, catalog, scan_timestamp(cfg));
    auto emit = exclusion_emit_from_string(cfg.emit);
    if (!emit) throw std::runtime_error("--emit must be commits|prs|both");
    emit_payload(cfg, render_exclusion_list(list, format_of(cfg), *emit));
    return 0;
}

int cmd_catalog(const std::string& action, const CliConfig& cfg) {
    std::string text =
        cfg.catalog_path.empty() ? builtin_catalog_json() : read_file(cfg.catalog_path);

    if (action == "validate") {
        Catalog catalog;
        try {
            catalog = parse_catalog(text);
        } catch (const CatalogError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        std::string payload;
        bool has_error = false;
        for (const Diagnostic& d : validate_catalog(catalog)) {
            has_error |= d.severity == Diagnostic::Severity::Error;
            payload += std::string(d.severity == Diagnostic::Severity::Error ? "error" : "warning") +
                       "\t" + d.subject + "\t" + d.message + "\n";
        }
        emit_payload(cfg, payload);
        return has_error ? 1 : 0;
    }

    Catalog catalog = load_catalog(text);
    if (action == "list") {
        std::string payload;
        for (const auto& agent : catalog.agents) {
            payload += agent.id + "\t" + agent.display_name + "\t" +
                       std::to_string(agent.rules.size()) + " rules";
            if (agent.generic) payload += "\t(generic)";
            payload += "\n";
        }
        emit_payload(cfg, payload);
        return 0;
    }
    if (action == "export") {
        emit_payload(cfg, serialize_catalog(catalog));
        return 0;
    }
    std::cerr << "error: unknown catalog action '" << action << "'\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Detects and reports coding-agent activity in software repositories"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string repo_path, slug, catalog_action;
    std::vector<std::string> rule_ids;
    bool counts_all = false;

    CLI::App* scan = app.add_subcommand("scan", "Scan a local repository for agent traces");
    scan->add_option("repo", repo_path, "Path to the repository")->required();
    add_common_options(scan, cfg);
    scan->add_flag("--lax", cfg.lax, "Also grep whole commit messages for co-authored-by lines");
    scan->add_option("--jobs", cfg.jobs, "Parallel commit-matching threads")
        ->check(CLI::PositiveNumber);
    scan->add_flag("--all-revisions", cfg.all_revisions,
                   "Walk every commit's tree; report first introductions");

    CLI::App* mine = app.add_subcommand("mine", "Mine a hosted repository's PRs and issues");
    mine->add_option("repo", slug, "Repository slug (owner/name)")->required();
    add_common_options(mine, cfg);

    CLI::App* counts = app.add_subcommand("counts", "Approximate platform match counts per rule");
    counts->add_option("rule_ids", rule_ids, "Rule ids to count");
    counts->add_flag("--all", counts_all, "Count every searchable rule in the catalog");
    add_common_options(counts, cfg);

    CLI::App* filter = app.add_subcommand("filter", "Emit an exclusion list for a repository");
    filter->add_option("repo", repo_path, "Path to the repository")->required();
    add_common_options(filter, cfg);
    filter->add_flag("--lax", cfg.lax, "Also grep whole commit messages for co-authored-by lines");
    filter->add_option("--jobs", cfg.jobs, "Parallel commit-matching threads")
        ->check(CLI::PositiveNumber);
    filter->add_option("--emit", cfg.emit, "Sections to emit: commits|prs|both")
        ->check(CLI::IsMember({"commits", "prs", "both"}));

    CLI::App* catalog = app.add_subcommand("catalog", "Validate, list, or export the catalog");
    catalog->add_option("action", catalog_action, "validate|list|export")
        ->required()
        ->check(CLI::IsMember({"validate", "list", "export"}));
    add_common_options(catalog, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (scan->parsed()) return cmd_scan(repo_path, cfg);
        if (mine->parsed()) return cmd_mine(slug, cfg);
        if (counts->parsed()) return cmd_counts(rule_ids, counts_all, cfg);
        if (filter->parsed()) return cmd_filter(repo_path, cfg);
        if (catalog->parsed()) return cmd_catalog(catalog_action, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
