#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "agentscan/catalog.hpp"
#include "agentscan/evidence.hpp"

namespace agentscan {

// ---- Commit metadata ---------------------------------------------------------

struct Identity {
    std::string name;
    std::string email;

    bool empty() const { return name.empty() && email.empty(); }
    friend bool operator==(const Identity&, const Identity&) = default;
};

struct Trailer {
    std::string key;    // no whitespace or colon; original casing preserved
    std::string value;  // trimmed remainder of the line

    friend bool operator==(const Trailer&, const Trailer&) = default;
};

struct CommitRecord {
    std::string hash;  // 40- or 64-char hex
    Identity author;
    Identity committer;
    std::int64_t timestamp = 0;  // UTC seconds; 0 means unknown
    std::string message;
    std::vector<std::string> parents;
};

inline bool is_hex_hash(std::string_view s) {
    if (s.size() != 40 && s.size() != 64) return false;
    for (char c : s)
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F')))
            return false;
    return true;
}

// ---- Trailer parsing -----------------------------------------------------------

namespace detail {

inline bool parse_trailer_line(std::string_view line, Trailer& out) {
    size_t colon = line.find(':');
    if (colon == std::string_view::npos || colon == 0) return false;
    std::string_view key = line.substr(0, colon);
    for (char c : key)
        if (c == ' ' || c == '\t') return false;
    out.key = std::string(key);
    out.value = std::string(trim(line.substr(colon + 1)));
    return true;
}

}  // namespace detail

// Returns the trailers of the message's final trailer block: the last
// paragraph, provided every line in it is a `Key: value` line or an indented
// continuation. Continuations are folded into the preceding value. Messages
// whose last paragraph contains anything else yield no trailers.
inline std::vector<Trailer> parse_trailers(std::string_view message) {
    std::vector<std::string> lines = split_lines(message);
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) return {};

    size_t start = lines.size();
    while (start > 0 && !trim(lines[start - 1]).empty()) --start;

    std::vector<Trailer> trailers;
    for (size_t i = start; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (!trailers.empty() && (line.starts_with(' ') || line.starts_with('\t'))) {
            std::string_view cont = trim(line);
            if (!cont.empty()) {
                trailers.back().value += ' ';
                trailers.back().value += cont;
            }
            continue;
        }
        Trailer t;
        if (!detail::parse_trailer_line(line, t)) return {};
        trailers.push_back(std::move(t));
    }
    return trailers;
}

// Splits a `Name <email>` co-author value. A bare token containing `@` is taken
// as an email; anything else without angle brackets is a name. Degenerate input
// gives a best-effort identity; a blank value gives an empty identity, which
// matches nothing.
inline Identity parse_coauthor(std::string_view value) {
    std::string_view v = trim(value);
    Identity id;
    if (v.empty()) return id;

    size_t lt = v.rfind('<');
    if (lt != std::string_view::npos) {
        size_t gt = v.find('>', lt + 1);
        if (gt != std::string_view::npos) {
            id.name = std::string(trim(v.substr(0, lt)));
            id.email = std::string(trim(v.substr(lt + 1, gt - lt - 1)));
            return id;
        }
    }
    bool has_space = v.find(' ') != std::string_view::npos ||
                     v.find('\t') != std::string_view::npos;
    if (!has_space && v.find('@') != std::string_view::npos)
        id.email = std::string(v);
    else
        id.name = std::string(v);
    return id;
}

// ---- Rule matching ----------------------------------------------------------------

namespace detail {

inline std::string_view strip_bot_suffix(std::string_view s) {
    static constexpr std::string_view kSuffix = "[bot]";
    if (s.size() > kSuffix.size() && ieq(s.substr(s.size() - kSuffix.size()), kSuffix))
        return s.substr(0, s.size() - kSuffix.size());
    return s;
}

inline bool field_matches(std::string_view field, const HeuristicRule& rule) {
    if (field.empty()) return false;
    switch (rule.pattern_kind) {
        case PatternKind::Literal:
            // Identities ending in "[bot]" are compared with and without the
            // suffix; GitHub listings show the bare username.
            return ieq(field, rule.pattern) || ieq(strip_bot_suffix(field), rule.pattern);
        case PatternKind::Substring:
            return icontains(field, rule.pattern);
        default:
            return false;
    }
}

}  // namespace detail

inline bool identity_matches(const Identity& id, const HeuristicRule& rule) {
    return detail::field_matches(id.name, rule) || detail::field_matches(id.email, rule);
}

struct CommitMatchOptions {
    // Lax mode additionally greps every message line for `co-authored-by:`,
    // not just the final trailer block, mimicking GitHub commit search.
    bool lax = false;
};

inline std::vector<EvidenceItem> match_commit(const CommitRecord& commit,
                                              std::span<const ActiveRule> active_rules,
                                              const CommitMatchOptions& opts = {}) {
    std::vector<Identity> coauthors;
    for (const Trailer& t : parse_trailers(commit.message)) {
        if (ieq(t.key, "Co-authored-by")) {
            coauthors.push_back(parse_coauthor(t.value));
        } else if (ieq(t.key, "Generated-by") || ieq(t.key, "Generated-with") ||
                   ieq(t.key, "Generated")) {
            // Advertisement trailers carry a tool name, not a Name <email> pair.
            Identity id;
            id.name = std::string(trim(t.value));
            if (!id.empty()) coauthors.push_back(std::move(id));
        }
    }
    if (opts.lax) {
        static constexpr std::string_view kPrefix = "co-authored-by:";
        for (const std::string& line : split_lines(commit.message)) {
            std::string_view v = trim(line);
            if (istarts_with(v, kPrefix)) coauthors.push_back(parse_coauthor(v.substr(kPrefix.size())));
        }
    }

    std::optional<std::int64_t> observed;
    if (commit.timestamp > 0) observed = commit.timestamp;

    std::vector<EvidenceItem> out;
    std::set<std::pair<std::string, std::string>> seen;  // (agent_id, rule_id); locator is fixed
    auto emit = [&](const ActiveRule& ar) {
        if (seen.emplace(ar.agent->id, ar.rule->rule_id).second)
            out.push_back({ar.agent->id, ar.rule->rule_id, ar.rule->category, commit.hash, observed});
    };

    for (const ActiveRule& ar : active_rules) {
        switch (ar.rule->category) {
            case Category::CommitCoAuthor:
                for (const Identity& id : coauthors)
                    if (identity_matches(id, *ar.rule)) {
                        emit(ar);
                        break;
                    }
                break;
            case Category::CommitAuthor:
                if (identity_matches(commit.author, *ar.rule)) emit(ar);
                break;
            default:
                break;
        }
    }
    return out;
}

// ---- History aggregation --------------------------------------------------------------

struct AgentCommitStats {
    std::vector<EvidenceItem> evidence;
    std::uint64_t commit_count = 0;  // distinct commits with >=1 evidence for this agent
    std::optional<std::int64_t> first_seen;
    std::optional<std::int64_t> last_seen;

    friend bool operator==(const AgentCommitStats&, const AgentCommitStats&) = default;
};

// Mergeable partial-scan summary. Merging is commutative and associative as
// long as each commit is fed to exactly one partial scan; canonicalize() makes
// the result independent of merge order.
struct CommitScanSummary {
    std::uint64_t total_commits = 0;
    std::uint64_t agent_commit_count = 0;  // distinct commits with >=1 evidence
    std::map<std::string, AgentCommitStats> per_agent;

    double agent_commit_share() const {
        return total_commits == 0
                   ? 0.0
                   : static_cast<double>(agent_commit_count) / static_cast<double>(total_commits);
    }

    void add_commit(const CommitRecord& commit, std::vector<EvidenceItem> evidence) {
        ++total_commits;
        if (evidence.empty()) return;
        ++agent_commit_count;
        std::set<std::string> agents_hit;
        for (auto& item : evidence) {
            AgentCommitStats& stats = per_agent[item.agent_id];
            if (agents_hit.insert(item.agent_id).second) ++stats.commit_count;
            if (commit.timestamp > 0) {
                if (!stats.first_seen || commit.timestamp < *stats.first_seen)
                    stats.first_seen = commit.timestamp;
                if (!stats.last_seen || commit.timestamp > *stats.last_seen)
                    stats.last_seen = commit.timestamp;
            }
            stats.evidence.push_back(std::move(item));
        }
    }

    void merge(CommitScanSummary&& other) {
        total_commits += other.total_commits;
        agent_commit_count += other.agent_commit_count;
        for (auto& [agent, stats] : other.per_agent) {
            AgentCommitStats& mine = per_agent[agent];
            mine.commit_count += stats.commit_count;
            mine.evidence.insert(mine.evidence.end(),
                                 std::make_move_iterator(stats.evidence.begin()),
                                 std::make_move_iterator(stats.evidence.end()));
            if (stats.first_seen && (!mine.first_seen || *stats.first_seen < *mine.first_seen))
                mine.first_seen = stats.first_seen;
            if (stats.last_seen && (!mine.last_seen || *stats.last_seen > *mine.last_seen))
                mine.last_seen = stats.last_seen;
        }
    }

    void canonicalize() {
        for (auto& [agent, stats] : per_agent) sort_evidence(stats.evidence);
    }

    friend bool operator==(const CommitScanSummary&, const CommitScanSummary&) = default;
};

struct ScanOptions {
    bool lax = false;
    int jobs = 1;
    // When set, this date drives rule selection for every commit; otherwise
    // each commit's own timestamp date is used (commits without a usable
    // timestamp fall back to rules with fully open windows).
    std::optional<Date> as_of;
};

namespace detail {

// Per-scan cache of commit-rule selections. Histories repeat dates heavily,
// so window filtering is done once per distinct commit date.
class CommitRuleSelector {
  public:
    CommitRuleSelector(const Catalog& catalog, const ScanOptions& opts)
        : catalog_(catalog), as_of_(opts.as_of) {}

    const std::vector<ActiveRule>& rules_for(const CommitRecord& commit) {
        if (as_of_) return cached(*as_of_);
        if (commit.timestamp > 0) return cached(date_from_unix_seconds(commit.timestamp));
        if (!open_window_) {
            open_window_ = open_window_rules(catalog_);
            keep_commit_rules(*open_window_);
        }
        return *open_window_;
    }

  private:
    const std::vector<ActiveRule>& cached(const Date& date) {
        auto [it, inserted] = by_date_.try_emplace(date);
        if (inserted) {
            it->second = rules_active_at(catalog_, date);
            keep_commit_rules(it->second);
        }
        return it->second;
    }

    static void keep_commit_rules(std::vector<ActiveRule>& rules) {
        std::erase_if(rules, [](const ActiveRule& ar) {
            return ar.rule->category != Category::CommitCoAuthor &&
                   ar.rule->category != Category::CommitAuthor;
        });
    }

    const Catalog& catalog_;
    std::optional<Date> as_of_;
    std::map<Date, std::vector<ActiveRule>> by_date_;
    std::optional<std::vector<ActiveRule>> open_window_;
};

}  // namespace detail

// Scans a full commit stream (each reachable commit exactly once). Matching is
// pure per commit; with jobs > 1 the stream is chunked across threads and the
// partial summaries merged, which by construction yields the same result as a
// sequential scan.
inline CommitScanSummary scan_history(std::span<const CommitRecord> commits,
                                      const Catalog& catalog, const ScanOptions& opts = {}) {
    CommitMatchOptions match_opts{opts.lax};

    auto scan_range = [&](size_t begin, size_t end) {
        CommitScanSummary partial;
        detail::CommitRuleSelector selector(catalog, opts);
        for (size_t i = begin; i < end; ++i) {
            const CommitRecord& c = commits[i];
            partial.add_commit(c, match_commit(c, selector.rules_for(c), match_opts));
        }
        return partial;
    };

    CommitScanSummary summary;
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || commits.size() < 2) {
        summary = scan_range(0, commits.size());
    } else {
        size_t n = commits.size();
        size_t chunks = std::min<size_t>(static_cast<size_t>(jobs), n);
        std::vector<CommitScanSummary> partials(chunks);
        std::vector<std::thread> threads;
        threads.reserve(chunks);
        for (size_t k = 0; k < chunks; ++k) {
            size_t begin = n * k / chunks;
            size_t end = n * (k + 1) / chunks;
            threads.emplace_back(
                [&, k, begin, end] { partials[k] = scan_range(begin, end); });
        }
        for (auto& t : threads) t.join();
        for (auto& p : partials) summary.merge(std::move(p));
    }
    summary.canonicalize();
    return summary;
}

}  // namespace agentscan
