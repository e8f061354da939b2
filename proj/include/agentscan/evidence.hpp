#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "agentscan/catalog.hpp"

namespace agentscan {

// A single rule <-> artifact match. The locator is a commit hash, file path,
// branch name, PR/issue number, or user login depending on the rule category.
struct EvidenceItem {
    std::string agent_id;
    std::string rule_id;
    Category category = Category::FilePath;
    std::string locator;
    std::optional<std::int64_t> observed_at;

    friend bool operator==(const EvidenceItem&, const EvidenceItem&) = default;
};

inline bool evidence_less(const EvidenceItem& a, const EvidenceItem& b) {
    return std::tie(a.agent_id, a.rule_id, a.locator, a.observed_at) <
           std::tie(b.agent_id, b.rule_id, b.locator, b.observed_at);
}

inline void sort_evidence(std::vector<EvidenceItem>& items) {
    std::sort(items.begin(), items.end(), evidence_less);
}

}  // namespace agentscan
