#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "agentscan/common.hpp"

namespace agentscan {

// ---- Rule vocabulary --------------------------------------------------------

enum class Category {
    FilePath,
    CommitCoAuthor,
    CommitAuthor,
    BranchPrefix,
    PrLabel,
    UserName,
};

enum class PatternKind {
    Literal,
    PathName,
    PathDirPrefix,
    Substring,
};

enum class Confidence { High, Medium, Low };

inline const char* to_string(Category c) {
    switch (c) {
        case Category::FilePath: return "file_path";
        case Category::CommitCoAuthor: return "commit_coauthor";
        case Category::CommitAuthor: return "commit_author";
        case Category::BranchPrefix: return "branch_prefix";
        case Category::PrLabel: return "pr_label";
        case Category::UserName: return "user_name";
    }
    return "?";
}

inline const char* to_string(PatternKind k) {
    switch (k) {
        case PatternKind::Literal: return "literal";
        case PatternKind::PathName: return "path_name";
        case PatternKind::PathDirPrefix: return "path_dir_prefix";
        case PatternKind::Substring: return "substring";
    }
    return "?";
}

inline const char* to_string(Confidence c) {
    switch (c) {
        case Confidence::High: return "high";
        case Confidence::Medium: return "medium";
        case Confidence::Low: return "low";
    }
    return "?";
}

inline std::optional<Category> category_from_string(std::string_view s) {
    if (s == "file_path") return Category::FilePath;
    if (s == "commit_coauthor") return Category::CommitCoAuthor;
    if (s == "commit_author") return Category::CommitAuthor;
    if (s == "branch_prefix") return Category::BranchPrefix;
    if (s == "pr_label") return Category::PrLabel;
    if (s == "user_name") return Category::UserName;
    return std::nullopt;
}

inline std::optional<PatternKind> pattern_kind_from_string(std::string_view s) {
    if (s == "literal") return PatternKind::Literal;
    if (s == "path_name") return PatternKind::PathName;
    if (s == "path_dir_prefix") return PatternKind::PathDirPrefix;
    if (s == "substring") return PatternKind::Substring;
    return std::nullopt;
}

inline std::optional<Confidence> confidence_from_string(std::string_view s) {
    if (s == "high") return Confidence::High;
    if (s == "medium") return Confidence::Medium;
    if (s == "low") return Confidence::Low;
    return std::nullopt;
}

// ---- Catalog data model -------------------------------------------------------

struct HeuristicRule {
    std::string rule_id;
    Category category = Category::FilePath;
    PatternKind pattern_kind = PatternKind::Literal;
    std::string pattern;
    std::optional<Date> valid_from;
    std::optional<Date> valid_to;
    Confidence confidence = Confidence::High;
    std::string notes;

    friend bool operator==(const HeuristicRule&, const HeuristicRule&) = default;
};

struct AgentDescriptor {
    std::string id;  // lowercase-kebab, e.g. "claude-code"
    std::string display_name;
    std::string homepage;
    bool generic = false;  // true only for the cross-agent pseudo-agent
    std::vector<HeuristicRule> rules;
    std::string notes;  // descriptor-level annotations (e.g. documented non-rules)

    friend bool operator==(const AgentDescriptor&, const AgentDescriptor&) = default;
};

struct Catalog {
    int schema_version = 1;
    Date generated_on{};
    std::vector<AgentDescriptor> agents;

    friend bool operator==(const Catalog&, const Catalog&) = default;

    const AgentDescriptor* find_agent(std::string_view id) const {
        for (const auto& a : agents)
            if (a.id == id) return &a;
        return nullptr;
    }

    const HeuristicRule* find_rule(std::string_view rule_id) const {
        for (const auto& a : agents)
            for (const auto& r : a.rules)
                if (r.rule_id == rule_id) return &r;
        return nullptr;
    }
};

// A rule paired with its owning descriptor, as produced by rules_active_at.
// Both pointers refer into the catalog, which is immutable after load.
struct ActiveRule {
    const AgentDescriptor* agent = nullptr;
    const HeuristicRule* rule = nullptr;
};

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::string subject;  // offending rule_id or agent id
    std::string message;
};

// ---- Errors -------------------------------------------------------------------

class CatalogError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class CatalogParseError : public CatalogError {
  public:
    CatalogParseError(const std::string& msg, int line, int column)
        : CatalogError("parse error at line " + std::to_string(line) + ", column " +
                       std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_ = 0, column_ = 0;
};

class CatalogValidationError : public CatalogError {
  public:
    CatalogValidationError(const std::string& subject, const std::string& msg)
        : CatalogError(subject + ": " + msg), subject_(subject) {}
    const std::string& subject() const { return subject_; }

  private:
    std::string subject_;
};

// ---- Validation -----------------------------------------------------------------

inline bool is_valid_agent_id(std::string_view id) {
    if (id.empty()) return false;
    auto tail_ok = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    };
    char h = id.front();
    if (!((h >= 'a' && h <= 'z') || (h >= '0' && h <= '9'))) return false;
    for (char c : id.substr(1))
        if (!tail_ok(c)) return false;
    return true;
}

inline bool kind_compatible(Category cat, PatternKind kind) {
    switch (cat) {
        case Category::FilePath:
            return kind == PatternKind::PathName || kind == PatternKind::PathDirPrefix;
        case Category::CommitCoAuthor:
        case Category::CommitAuthor:
        case Category::UserName:
            return kind == PatternKind::Literal || kind == PatternKind::Substring;
        case Category::BranchPrefix:
        case Category::PrLabel:
            return kind == PatternKind::Literal;
    }
    return false;
}

inline std::vector<Diagnostic> validate_catalog(const Catalog& catalog) {
    std::vector<Diagnostic> diags;
    auto error = [&](const std::string& subject, std::string msg) {
        diags.push_back({Diagnostic::Severity::Error, subject, std::move(msg)});
    };

    std::set<std::string> agent_ids;
    std::set<std::string> rule_ids;
    // (category, pattern_kind, pattern) -> (agent id, rule id, generic)
    std::map<std::tuple<Category, PatternKind, std::string>,
             std::tuple<std::string, std::string, bool>>
        seen_patterns;
    int generic_count = 0;

    for (const auto& agent : catalog.agents) {
        if (!is_valid_agent_id(agent.id))
            error(agent.id.empty() ? "<empty>" : agent.id,
                  "agent id must be non-empty lowercase kebab ([a-z0-9][a-z0-9-]*)");
        if (!agent_ids.insert(agent.id).second)
            error(agent.id, "duplicate agent id");
        if (agent.generic) ++generic_count;

        for (const auto& rule : agent.rules) {
            const std::string& rid = rule.rule_id.empty() ? agent.id : rule.rule_id;
            if (rule.rule_id.empty())
                error(agent.id, "rule with empty rule_id");
            else if (!rule_ids.insert(rule.rule_id).second)
                error(rule.rule_id, "duplicate rule_id");
            if (rule.pattern.empty()) error(rid, "pattern must be non-empty");
            if (rule.valid_from && rule.valid_to && *rule.valid_from > *rule.valid_to)
                error(rid, "valid_from is after valid_to");
            if (!kind_compatible(rule.category, rule.pattern_kind))
                error(rid, std::string("pattern_kind '") + to_string(rule.pattern_kind) +
                               "' is not usable with category '" + to_string(rule.category) + "'");

            auto key = std::make_tuple(rule.category, rule.pattern_kind, rule.pattern);
            auto it = seen_patterns.find(key);
            if (it == seen_patterns.end()) {
                seen_patterns.emplace(key, std::make_tuple(agent.id, rule.rule_id, agent.generic));
            } else {
                const auto& [other_agent, other_rule, other_generic] = it->second;
                if (other_agent != agent.id && !agent.generic && !other_generic)
                    error(rid, "pattern duplicates rule '" + other_rule + "' of agent '" +
                                   other_agent + "'; shared markers belong to the generic agent");
            }
        }
    }

    if (generic_count > 1)
        error("<catalog>", "more than one descriptor is marked generic");
    else if (generic_count == 0 && !catalog.agents.empty())
        error("<catalog>", "no descriptor is marked generic");

    return diags;
}

// ---- Loading / serialization ------------------------------------------------------

namespace detail {

inline std::optional<Date> date_field(const nlohmann::json& obj, const char* key,
                                      const std::string& subject) {
    if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_string())
        throw CatalogValidationError(subject, std::string(key) + " must be a date string or null");
    auto d = parse_date(v.get<std::string>());
    if (!d)
        throw CatalogValidationError(subject,
                                     std::string(key) + " is not a valid YYYY-MM-DD date");
    return d;
}

inline std::string string_field(const nlohmann::json& obj, const char* key,
                                const std::string& subject, bool required = true) {
    if (!obj.contains(key)) {
        if (required) throw CatalogValidationError(subject, std::string("missing field ") + key);
        return {};
    }
    const auto& v = obj.at(key);
    if (!v.is_string())
        throw CatalogValidationError(subject, std::string(key) + " must be a string");
    return v.get<std::string>();
}

}  // namespace detail

// Parses the documented single-document JSON catalog format without enforcing
// catalog invariants (see validate_catalog / load_catalog for that). Unknown
// fields are ignored so newer catalogs still load. Throws CatalogParseError on
// malformed JSON and CatalogValidationError on structural problems that
// prevent building a value at all (wrong types, unknown enum strings).
inline Catalog parse_catalog(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports a byte offset; convert to line/column for the caller.
        size_t pos = e.byte > 0 ? static_cast<size_t>(e.byte - 1) : 0;
        if (pos > text.size()) pos = text.size();
        int line = 1, col = 1;
        for (size_t i = 0; i < pos; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw CatalogParseError(e.what(), line, col);
    }

    if (!doc.is_object()) throw CatalogValidationError("<catalog>", "top level must be an object");

    Catalog catalog;
    if (!doc.contains("schema_version") || !doc.at("schema_version").is_number_integer())
        throw CatalogValidationError("<catalog>", "schema_version must be an integer");
    catalog.schema_version = doc.at("schema_version").get<int>();

    auto gen = detail::date_field(doc, "generated_on", "<catalog>");
    if (!gen) throw CatalogValidationError("<catalog>", "generated_on is required");
    catalog.generated_on = *gen;

    if (!doc.contains("agents") || !doc.at("agents").is_array())
        throw CatalogValidationError("<catalog>", "agents must be an array");

    for (const auto& ja : doc.at("agents")) {
        if (!ja.is_object()) throw CatalogValidationError("<catalog>", "agent must be an object");
        AgentDescriptor agent;
        agent.id = detail::string_field(ja, "id", "<agent>");
        agent.display_name = detail::string_field(ja, "display_name", agent.id);
        agent.homepage = detail::string_field(ja, "homepage", agent.id, /*required=*/false);
        if (ja.contains("generic")) {
            if (!ja.at("generic").is_boolean())
                throw CatalogValidationError(agent.id, "generic must be a boolean");
            agent.generic = ja.at("generic").get<bool>();
        }
        agent.notes = detail::string_field(ja, "notes", agent.id, /*required=*/false);

        if (ja.contains("rules")) {
            if (!ja.at("rules").is_array())
                throw CatalogValidationError(agent.id, "rules must be an array");
            for (const auto& jr : ja.at("rules")) {
                if (!jr.is_object())
                    throw CatalogValidationError(agent.id, "rule must be an object");
                HeuristicRule rule;
                rule.rule_id = detail::string_field(jr, "rule_id", agent.id);
                const std::string& subject = rule.rule_id;

                auto cat = category_from_string(detail::string_field(jr, "category", subject));
                if (!cat) throw CatalogValidationError(subject, "unknown category");
                rule.category = *cat;

                auto kind =
                    pattern_kind_from_string(detail::string_field(jr, "pattern_kind", subject));
                if (!kind) throw CatalogValidationError(subject, "unknown pattern_kind");
                rule.pattern_kind = *kind;

                rule.pattern = detail::string_field(jr, "pattern", subject);
                rule.valid_from = detail::date_field(jr, "valid_from", subject);
                rule.valid_to = detail::date_field(jr, "valid_to", subject);

                auto conf =
                    confidence_from_string(detail::string_field(jr, "confidence", subject));
                if (!conf) throw CatalogValidationError(subject, "unknown confidence");
                rule.confidence = *conf;

                rule.notes = detail::string_field(jr, "notes", subject, /*required=*/false);
                agent.rules.push_back(std::move(rule));
            }
        }
        catalog.agents.push_back(std::move(agent));
    }
    return catalog;
}

// Parses and enforces every catalog invariant; the first violation is thrown.
inline Catalog load_catalog(std::string_view text) {
    Catalog catalog = parse_catalog(text);
    for (const auto& d : validate_catalog(catalog))
        if (d.severity == Diagnostic::Severity::Error)
            throw CatalogValidationError(d.subject, d.message);
    return catalog;
}

// Emits the documented format with keys in the documented order.
inline std::string serialize_catalog(const Catalog& catalog, int indent = 2) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = catalog.schema_version;
    doc["generated_on"] = format_date(catalog.generated_on);
    doc["agents"] = nlohmann::ordered_json::array();
    for (const auto& agent : catalog.agents) {
        nlohmann::ordered_json ja;
        ja["id"] = agent.id;
        ja["display_name"] = agent.display_name;
        ja["homepage"] = agent.homepage;
        ja["generic"] = agent.generic;
        ja["rules"] = nlohmann::ordered_json::array();
        for (const auto& rule : agent.rules) {
            nlohmann::ordered_json jr;
            jr["rule_id"] = rule.rule_id;
            jr["category"] = to_string(rule.category);
            jr["pattern_kind"] = to_string(rule.pattern_kind);
            jr["pattern"] = rule.pattern;
            jr["valid_from"] = rule.valid_from
                                   ? nlohmann::ordered_json(format_date(*rule.valid_from))
                                   : nlohmann::ordered_json(nullptr);
            jr["valid_to"] = rule.valid_to ? nlohmann::ordered_json(format_date(*rule.valid_to))
                                           : nlohmann::ordered_json(nullptr);
            jr["confidence"] = to_string(rule.confidence);
            jr["notes"] = rule.notes;
            ja["rules"].push_back(std::move(jr));
        }
        if (!agent.notes.empty()) ja["notes"] = agent.notes;
        doc["agents"].push_back(std::move(ja));
    }
    return doc.dump(indent) + "\n";
}

// ---- Time-windowed selection --------------------------------------------------------

inline bool rule_active_at(const HeuristicRule& rule, const Date& date) {
    if (rule.valid_from && *rule.valid_from > date) return false;
    if (rule.valid_to && *rule.valid_to < date) return false;
    return true;
}

inline std::vector<ActiveRule> rules_active_at(const Catalog& catalog, const Date& date) {
    std::vector<ActiveRule> out;
    for (const auto& agent : catalog.agents)
        for (const auto& rule : agent.rules)
            if (rule_active_at(rule, date)) out.push_back({&agent, &rule});
    return out;
}

// Rules with no validity bounds at all; used when an artifact carries no usable
// timestamp and window filtering cannot be anchored to a date.
inline std::vector<ActiveRule> open_window_rules(const Catalog& catalog) {
    std::vector<ActiveRule> out;
    for (const auto& agent : catalog.agents)
        for (const auto& rule : agent.rules)
            if (!rule.valid_from && !rule.valid_to) out.push_back({&agent, &rule});
    return out;
}

}  // namespace agentscan
