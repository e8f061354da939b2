#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "agentscan/catalog.hpp"
#include "agentscan/evidence.hpp"

namespace agentscan {

// ---- Tree entries -----------------------------------------------------------

struct TreeEntry {
    std::string path;  // repository-relative, '/'-separated, no leading '/'
    enum class Kind { File, Directory } kind = Kind::File;
};

// ---- File-path rule matching --------------------------------------------------
//
// Both kinds anchor at a directory boundary at any depth, mirroring the
// `(?:^|/)` anchoring of GitHub path queries. Matching is case-sensitive:
// the naming conventions are casing-defined (CLAUDE.md is not claude.md).
//
//   PathName      the path's trailing segments equal the pattern's segments
//                 (for a single-segment pattern: basename equality).
//   PathDirPrefix the pattern occurs at a directory boundary as a prefix of
//                 the remainder. A pattern with a trailing '/' requires the
//                 named directory to contain something; one without it also
//                 matches when the final component is a prefix of a file name
//                 in that directory (workflow-file heuristics).

inline bool match_path(std::string_view path, const HeuristicRule& rule) {
    if (rule.category != Category::FilePath) return false;
    const std::string& pat = rule.pattern;
    if (pat.empty() || pat.size() > path.size()) return false;

    switch (rule.pattern_kind) {
        case PatternKind::PathName: {
            size_t off = path.size() - pat.size();
            return path.substr(off) == pat && (off == 0 || path[off - 1] == '/');
        }
        case PatternKind::PathDirPrefix: {
            for (size_t i = 0; i + pat.size() <= path.size(); ++i) {
                if (i > 0 && path[i - 1] != '/') continue;
                if (path.compare(i, pat.size(), pat) == 0) return true;
            }
            return false;
        }
        default:
            return false;
    }
}

// Scans one revision's tree listing against the file rules active at `at_date`.
// Directory entries are matched as "<path>/" so directory-convention rules see
// the boundary; evidence locators keep the listed path.
inline std::vector<EvidenceItem> scan_tree(std::span<const TreeEntry> entries,
                                           const Catalog& catalog, const Date& at_date) {
    std::vector<ActiveRule> rules = rules_active_at(catalog, at_date);
    std::erase_if(rules,
                  [](const ActiveRule& ar) { return ar.rule->category != Category::FilePath; });

    std::vector<EvidenceItem> out;
    std::set<std::tuple<std::string, std::string, std::string>> seen;
    for (const TreeEntry& entry : entries) {
        std::string probe = entry.path;
        if (entry.kind == TreeEntry::Kind::Directory) probe += '/';
        for (const ActiveRule& ar : rules) {
            if (!match_path(probe, *ar.rule)) continue;
            if (seen.emplace(ar.agent->id, ar.rule->rule_id, entry.path).second)
                out.push_back({ar.agent->id, ar.rule->rule_id, Category::FilePath, entry.path,
                               std::nullopt});
        }
    }
    return out;
}

// ---- Ignore-file engine ------------------------------------------------------------
//
// Implements the gitignore pattern subset: blank and '#' lines are skipped,
// '!' negates, a trailing '/' restricts to directories, '*' and '?' are
// non-separator wildcards, '**' crosses directories, patterns containing a
// slash are root-anchored while bare names match at any depth, and the last
// matching pattern wins. A path inside an excluded directory stays excluded.

struct IgnorePattern {
    std::string line;       // original line, for reporting
    int line_number = 0;    // 1-based
    bool negated = false;
    bool dir_only = false;
    bool anchored = false;  // pattern contained a non-trailing slash
    std::vector<std::string> segments;  // "**" entries cross directories
};

struct IgnoreRuleSet {
    std::vector<IgnorePattern> patterns;
    std::vector<std::string> diagnostics;  // unsupported constructs kept literal
};

namespace detail {

// fnmatch-style match of one path segment; '*' and '?' never cross a '/'
// (segments contain none). Unsupported glob constructs are literal here.
inline bool glob_segment(std::string_view pat, std::string_view text) {
    size_t p = 0, t = 0;
    size_t star_p = std::string_view::npos, star_t = 0;
    while (t < text.size()) {
        if (p < pat.size() && (pat[p] == text[t] || pat[p] == '?')) {
            ++p;
            ++t;
        } else if (p < pat.size() && pat[p] == '*') {
            while (p + 1 < pat.size() && pat[p + 1] == '*') ++p;  // collapse runs
            star_p = p++;
            star_t = t;
        } else if (star_p != std::string_view::npos) {
            p = star_p + 1;
            t = ++star_t;
        } else {
            return false;
        }
    }
    while (p < pat.size() && pat[p] == '*') ++p;
    return p == pat.size();
}

inline bool match_segments(std::span<const std::string> pat, std::span<const std::string> segs) {
    if (pat.empty()) return segs.empty();
    if (pat.front() == "**") {
        if (pat.size() == 1) return !segs.empty();  // trailing ** matches what's inside
        for (size_t skip = 0; skip <= segs.size(); ++skip)
            if (match_segments(pat.subspan(1), segs.subspan(skip))) return true;
        return false;
    }
    if (segs.empty()) return false;
    return glob_segment(pat.front(), segs.front()) && match_segments(pat.subspan(1), segs.subspan(1));
}

inline bool pattern_matches(const IgnorePattern& p, std::span<const std::string> segs,
                            bool is_dir) {
    if (p.dir_only && !is_dir) return false;
    if (!p.anchored) {
        // No slash: shell-glob the basename, at any depth.
        return !segs.empty() && glob_segment(p.segments.front(), segs.back());
    }
    return match_segments(p.segments, segs);
}

}  // namespace detail

inline IgnoreRuleSet parse_ignore_file(std::span<const std::string> lines) {
    IgnoreRuleSet out;
    int line_no = 0;
    for (const std::string& raw : lines) {
        ++line_no;
        std::string_view line = raw;
        while (line.ends_with('\r')) line.remove_suffix(1);
        while (line.ends_with(' ')) line.remove_suffix(1);  // git strips trailing spaces
        if (line.empty() || line.front() == '#') continue;

        IgnorePattern p;
        p.line = std::string(line);
        p.line_number = line_no;
        if (line.front() == '!') {
            p.negated = true;
            line.remove_prefix(1);
        }
        if (line.ends_with('/')) {
            p.dir_only = true;
            line.remove_suffix(1);
        }
        if (line.starts_with('/')) {
            p.anchored = true;
            line.remove_prefix(1);
        }
        if (line.empty()) continue;
        if (line.find('/') != std::string_view::npos) p.anchored = true;

        if (line.find('[') != std::string_view::npos ||
            line.find('\\') != std::string_view::npos)
            out.diagnostics.push_back("line " + std::to_string(line_no) +
                                      ": character classes and escapes are not supported; "
                                      "pattern treated literally");

        p.segments = split(line, '/');
        out.patterns.push_back(std::move(p));
    }
    return out;
}

namespace detail {

// Verdict for one exact path: index of the deciding pattern, or nullopt.
inline std::optional<size_t> last_match(const IgnoreRuleSet& rs,
                                        std::span<const std::string> segs, bool is_dir) {
    std::optional<size_t> decided;
    for (size_t i = 0; i < rs.patterns.size(); ++i)
        if (pattern_matches(rs.patterns[i], segs, is_dir)) decided = i;
    return decided;
}

}  // namespace detail

struct IgnoreDecision {
    bool ignored = false;
    std::string pattern_line;  // deciding pattern (of the path or of an excluded ancestor)
};

inline IgnoreDecision check_ignored(const IgnoreRuleSet& rs, std::string_view path, bool is_dir) {
    std::vector<std::string> segs = split(path, '/');
    // A path below an excluded directory cannot be re-included.
    for (size_t depth = 1; depth < segs.size(); ++depth) {
        std::span<const std::string> ancestor(segs.data(), depth);
        auto hit = detail::last_match(rs, ancestor, /*is_dir=*/true);
        if (hit && !rs.patterns[*hit].negated) return {true, rs.patterns[*hit].line};
    }
    auto hit = detail::last_match(rs, segs, is_dir);
    if (hit && !rs.patterns[*hit].negated) return {true, rs.patterns[*hit].line};
    return {};
}

inline bool is_ignored(const IgnoreRuleSet& rs, std::string_view path, bool is_dir) {
    return check_ignored(rs, path, is_dir).ignored;
}

// ---- Reduced-observability detection ---------------------------------------------------

struct IgnoredAgentFile {
    std::string ignore_line;  // the .gitignore pattern that hides the file
    std::string rule_id;      // the FilePath rule whose probe it hides

    friend bool operator==(const IgnoredAgentFile&, const IgnoredAgentFile&) = default;
};

struct ObservabilityFlags {
    std::vector<IgnoredAgentFile> ignored_agent_files;
    bool commit_markers_absent_but_files_present = false;

    friend bool operator==(const ObservabilityFlags&, const ObservabilityFlags&) = default;
};

// The canonical root-level instantiation of a file rule: the named file itself,
// or a placeholder entry inside the named directory.
inline std::string canonical_probe_path(const HeuristicRule& rule) {
    if (rule.pattern_kind == PatternKind::PathDirPrefix && rule.pattern.ends_with('/'))
        return rule.pattern + "x";
    return rule.pattern;
}

// Flags every catalog file rule whose probe path the ignore file excludes.
// With an explicit probe list, each rule is checked through the probes that
// match it instead of its canonical instantiation.
inline ObservabilityFlags detect_reduced_observability(std::span<const std::string> ignore_lines,
                                                       const Catalog& catalog,
                                                       std::span<const std::string> probe_paths = {}) {
    ObservabilityFlags flags;
    IgnoreRuleSet rs = parse_ignore_file(ignore_lines);
    if (rs.patterns.empty()) return flags;

    for (const AgentDescriptor& agent : catalog.agents) {
        for (const HeuristicRule& rule : agent.rules) {
            if (rule.category != Category::FilePath) continue;
            std::vector<std::string> probes;
            if (probe_paths.empty()) {
                probes.push_back(canonical_probe_path(rule));
            } else {
                for (const std::string& p : probe_paths)
                    if (match_path(p, rule)) probes.push_back(p);
            }
            for (const std::string& probe : probes) {
                IgnoreDecision d = check_ignored(rs, probe, /*is_dir=*/false);
                if (d.ignored) {
                    flags.ignored_agent_files.push_back({d.pattern_line, rule.rule_id});
                    break;
                }
            }
        }
    }
    return flags;
}

}  // namespace agentscan
