#pragma once

#include "agentscan/catalog.hpp"

namespace agentscan {

// The built-in heuristic catalog. One descriptor per known coding agent plus
// the cross-agent "generic" pseudo-agent for markers shared between tools.
// Validity windows ship open: the public record does not give reliable start
// or end dates for these conventions yet.
inline const std::string& builtin_catalog_json() {
    static const std::string text = R"json(
{
  "schema_version": 1,
  "generated_on": "2025-10-20",
  "agents": [
    {
      "id": "generic",
      "display_name": "Generic",
      "homepage": "https://agents.md",
      "generic": true,
      "rules": [
        {
          "rule_id": "generic:file:agents.md",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": "AGENTS.md",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": "Cross-agent guidance convention; indicates agent use but not which tool."
        },
        {
          "rule_id": "generic:label:ai-generated",
          "category": "pr_label",
          "pattern_kind": "literal",
          "pattern": "ai-generated",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "User-applied label; attributable to agent use in general."
        }
      ]
    },
    {
      "id": "aider",
      "display_name": "Aider",
      "homepage": "https://aider.chat/",
      "generic": false,
      "rules": [
        {
          "rule_id": "aider:file:.aider.conf.yml",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": ".aider.conf.yml",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "aider:coauthor:aider",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "aider",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "Single-token identity; matched substring-style like GitHub search."
        },
        {
          "rule_id": "aider:coauthor:aider@aider.chat",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "aider@aider.chat",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ],
      "notes": "CONVENTIONS.md is a common Aider guidance file name but is deliberately not a rule: most files with that name document conventions for human developers."
    },
    {
      "id": "amp",
      "display_name": "Amp",
      "homepage": "https://sourcegraph.com/amp",
      "generic": false,
      "rules": [
        {
          "rule_id": "amp:file:agent.md",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": "AGENT.md",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "amp:coauthor:amp@ampcode.com",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "amp@ampcode.com",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "amp:label:amp",
          "category": "pr_label",
          "pattern_kind": "literal",
          "pattern": "amp",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": ""
        }
      ]
    },
    {
      "id": "augment-code",
      "display_name": "Augment Code",
      "homepage": "https://www.augmentcode.com/",
      "generic": false,
      "rules": [
        {
          "rule_id": "augment-code:file:.augment/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".augment/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "chatgpt",
      "display_name": "ChatGPT",
      "homepage": "https://chatgpt.com/",
      "generic": false,
      "rules": [
        {
          "rule_id": "chatgpt:coauthor:chatgpt",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "ChatGPT",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "May indicate assistant-style use rather than an autonomous agent."
        }
      ]
    },
    {
      "id": "claude-code",
      "display_name": "Claude Code",
      "homepage": "https://www.claude.com/product/claude-code",
      "generic": false,
      "rules": [
        {
          "rule_id": "claude-code:file:claude.md",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": "CLAUDE.md",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "claude-code:file:.claude/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".claude/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "claude-code:file:.claudeignore",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": ".claudeignore",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "claude-code:file:.github/workflows/claude",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".github/workflows/claude",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": "Workflow files typically named claude.yml or claude-*.yml."
        },
        {
          "rule_id": "claude-code:coauthor:noreply@anthropic.com",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "noreply@anthropic.com",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "claude-code:coauthor:claude@anthropic.com",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "claude@anthropic.com",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "claude-code:coauthor:assistant@anthropic.com",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "assistant@anthropic.com",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "claude-code:author:claude",
          "category": "commit_author",
          "pattern_kind": "substring",
          "pattern": "Claude",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "Single-token author name; human names can collide."
        },
        {
          "rule_id": "claude-code:branch:claude/",
          "category": "branch_prefix",
          "pattern_kind": "literal",
          "pattern": "claude/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "cline",
      "display_name": "Cline",
      "homepage": "https://cline.bot/",
      "generic": false,
      "rules": [
        {
          "rule_id": "cline:file:.clinerules",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": ".clinerules",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "cline:file:.cline/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".cline/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "cline:file:memory-bank/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": "memory-bank/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "low",
          "notes": "Memory-bank layout is also used outside Cline."
        },
        {
          "rule_id": "cline:file:memory_bank/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": "memory_bank/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "low",
          "notes": "Memory-bank layout is also used outside Cline."
        },
        {
          "rule_id": "cline:coauthor:cline",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "cline",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "Single-token identity; matched substring-style like GitHub search."
        },
        {
          "rule_id": "cline:coauthor:cline@example.com",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "cline@example.com",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "codegen",
      "display_name": "Codegen",
      "homepage": "https://codegen.com/",
      "generic": false,
      "rules": [
        {
          "rule_id": "codegen:coauthor:codegen-sh",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "codegen-sh",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "codegen:branch:codegen-bot/",
          "category": "branch_prefix",
          "pattern_kind": "literal",
          "pattern": "codegen-bot/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "coderabbit",
      "display_name": "Coderabbit",
      "homepage": "https://coderabbit.ai/",
      "generic": false,
      "rules": [
        {
          "rule_id": "coderabbit:coauthor:coderabbit",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "coderabbit",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "codex",
      "display_name": "Codex",
      "homepage": "https://openai.com/codex",
      "generic": false,
      "rules": [
        {
          "rule_id": "codex:file:.codex/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".codex/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "codex:coauthor:codex@openai.com",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "codex@openai.com",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "codex:branch:codex/",
          "category": "branch_prefix",
          "pattern_kind": "literal",
          "pattern": "codex/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "codex:label:codex",
          "category": "pr_label",
          "pattern_kind": "literal",
          "pattern": "codex",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": ""
        }
      ]
    },
    {
      "id": "continue",
      "display_name": "Continue",
      "homepage": "https://www.continue.dev/",
      "generic": false,
      "rules": [
        {
          "rule_id": "continue:file:.continue/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".continue/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "copilot",
      "display_name": "Copilot",
      "homepage": "https://github.com/features/copilot",
      "generic": false,
      "rules": [
        {
          "rule_id": "copilot:file:copilot-instructions.md",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": "copilot-instructions.md",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "copilot:file:copilot_instructions.md",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": "copilot_instructions.md",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "copilot:file:copilot-instructions/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": "copilot-instructions/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "copilot:file:.github/instructions/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".github/instructions/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "copilot:file:.copilotignore",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": ".copilotignore",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "copilot:file:.copilot/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".copilot/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "copilot:file:.github/workflows/copilot",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".github/workflows/copilot",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": "Workflow files typically named copilot*.yml."
        },
        {
          "rule_id": "copilot:coauthor:copilot",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "Copilot",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "Single-token identity; matched substring-style like GitHub search."
        },
        {
          "rule_id": "copilot:coauthor:copilot-swe-agent",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "copilot-swe-agent",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "copilot:branch:copilot/",
          "category": "branch_prefix",
          "pattern_kind": "literal",
          "pattern": "copilot/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "copilot:user:copilot-swe-agent",
          "category": "user_name",
          "pattern_kind": "literal",
          "pattern": "copilot-swe-agent",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "Login derived from the commit identity above; verify against live profiles."
        }
      ]
    },
    {
      "id": "crush",
      "display_name": "Crush",
      "homepage": "https://github.com/charmbracelet/crush",
      "generic": false,
      "rules": [
        {
          "rule_id": "crush:file:crush.md",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": "CRUSH.md",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "crush:coauthor:crush@charm.land",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "crush@charm.land",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "cursor",
      "display_name": "Cursor",
      "homepage": "https://cursor.com/",
      "generic": false,
      "rules": [
        {
          "rule_id": "cursor:file:.cursor/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".cursor/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "cursor:file:.cursorrules",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": ".cursorrules",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "Legacy single-file rules; Cursor moved to the .cursor/ directory."
        },
        {
          "rule_id": "cursor:file:cursor.md",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": "CURSOR.md",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "cursor:coauthor:cursor",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "cursor",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "Single-token identity; matched substring-style like GitHub search."
        },
        {
          "rule_id": "cursor:coauthor:cursoragent@cursor.com",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "cursoragent@cursor.com",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "cursor:branch:cursor/",
          "category": "branch_prefix",
          "pattern_kind": "literal",
          "pattern": "cursor/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "deepsource",
      "display_name": "Deepsource",
      "homepage": "https://deepsource.com/",
      "generic": false,
      "rules": [
        {
          "rule_id": "deepsource:coauthor:deepsource-autofix",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "deepsource-autofix",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "devin",
      "display_name": "Devin",
      "homepage": "https://devin.ai/",
      "generic": false,
      "rules": [
        {
          "rule_id": "devin:coauthor:devin-ai-integration",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "devin-ai-integration",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "devin:branch:devin/",
          "category": "branch_prefix",
          "pattern_kind": "literal",
          "pattern": "devin/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "devin:user:devin-ai-integration",
          "category": "user_name",
          "pattern_kind": "literal",
          "pattern": "devin-ai-integration",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "Login derived from the commit identity above; verify against live profiles."
        }
      ]
    },
    {
      "id": "gemini",
      "display_name": "Gemini",
      "homepage": "https://gemini.google.com/",
      "generic": false,
      "rules": [
        {
          "rule_id": "gemini:file:gemini.md",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": "GEMINI.md",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "gemini:file:.gemini/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".gemini/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "gemini:coauthor:gemini-code-assist",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "gemini-code-assist",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "gemini:coauthor:gemini-cli",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "gemini-cli",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "gemini:coauthor:gemini-2.5-pro",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "Gemini 2.5 Pro",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "gemini:coauthor:gemini-2.5-flash",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "Gemini 2.5 Flash",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "gru",
      "display_name": "Gru",
      "homepage": "https://gru.ai/",
      "generic": false,
      "rules": [
        {
          "rule_id": "gru:coauthor:gru-agent",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "gru-agent",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "gru:branch:gru/",
          "category": "branch_prefix",
          "pattern_kind": "literal",
          "pattern": "gru/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "jules",
      "display_name": "Jules",
      "homepage": "https://jules.google/",
      "generic": false,
      "rules": [
        {
          "rule_id": "jules:coauthor:google-labs-jules",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "google-labs-jules",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "jules:branch:jules/",
          "category": "branch_prefix",
          "pattern_kind": "literal",
          "pattern": "jules/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "jules:user:google-labs-jules",
          "category": "user_name",
          "pattern_kind": "literal",
          "pattern": "google-labs-jules",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "Login derived from the commit identity above; verify against live profiles."
        }
      ]
    },
    {
      "id": "junie",
      "display_name": "Junie",
      "homepage": "https://www.jetbrains.com/junie/",
      "generic": false,
      "rules": [
        {
          "rule_id": "junie:file:.junie/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".junie/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "kilo-code",
      "display_name": "Kilo Code",
      "homepage": "https://kilocode.ai/",
      "generic": false,
      "rules": [
        {
          "rule_id": "kilo-code:file:.kilocode/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".kilocode/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "kilo-code:coauthor:kilo-code",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "Kilo Code",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "kiro",
      "display_name": "Kiro",
      "homepage": "https://kiro.dev/",
      "generic": false,
      "rules": [
        {
          "rule_id": "kiro:file:.kiro/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".kiro/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "open-swe",
      "display_name": "Langchain Open SWE",
      "homepage": "https://github.com/langchain-ai/open-swe",
      "generic": false,
      "rules": [
        {
          "rule_id": "open-swe:coauthor:open-swe",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "open-swe",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "open-swe:author:open-swe",
          "category": "commit_author",
          "pattern_kind": "substring",
          "pattern": "open-swe",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "open-swe:branch:open-swe/",
          "category": "branch_prefix",
          "pattern_kind": "literal",
          "pattern": "open-swe/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "open-swe:label:open-swe",
          "category": "pr_label",
          "pattern_kind": "literal",
          "pattern": "open-swe",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": ""
        }
      ]
    },
    {
      "id": "openhands",
      "display_name": "OpenHands",
      "homepage": "https://github.com/All-Hands-AI/OpenHands",
      "generic": false,
      "rules": [
        {
          "rule_id": "openhands:file:.openhands/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".openhands/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "openhands:coauthor:openhands@all-hands.dev",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "openhands@all-hands.dev",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "openhands:author:openhands-agent",
          "category": "commit_author",
          "pattern_kind": "substring",
          "pattern": "openhands-agent",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "openhands:branch:openhands/",
          "category": "branch_prefix",
          "pattern_kind": "literal",
          "pattern": "openhands/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "openhands:user:openhands-agent",
          "category": "user_name",
          "pattern_kind": "literal",
          "pattern": "openhands-agent",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "Login derived from the commit identity above; verify against live profiles."
        }
      ]
    },
    {
      "id": "opencode",
      "display_name": "Opencode",
      "homepage": "https://opencode.site",
      "generic": false,
      "rules": [
        {
          "rule_id": "opencode:file:.opencode/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".opencode/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "opencode:coauthor:noreply@opencode.ai",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "noreply@opencode.ai",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "qwen-coder",
      "display_name": "Qwen Coder",
      "homepage": "https://github.com/QwenLM/qwen-code",
      "generic": false,
      "rules": [
        {
          "rule_id": "qwen-coder:coauthor:qwen-coder",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "Qwen-Coder",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "qwen-coder:coauthor:qwen-coder@alibabacloud.com",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "qwen-coder@alibabacloud.com",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "roo-code",
      "display_name": "Roo Code",
      "homepage": "https://github.com/RooCodeInc/Roo-Code",
      "generic": false,
      "rules": [
        {
          "rule_id": "roo-code:file:.roo/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".roo/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "roo-code:coauthor:roomote@roocode.com",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "roomote@roocode.com",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "roo-code:coauthor:roomote",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "roomote",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "roo-code:coauthor:roo-code",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "Roo Code",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "roo-code:author:roomote",
          "category": "commit_author",
          "pattern_kind": "substring",
          "pattern": "roomote",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "roo-code:user:roomote",
          "category": "user_name",
          "pattern_kind": "literal",
          "pattern": "roomote",
          "valid_from": null,
          "valid_to": null,
          "confidence": "medium",
          "notes": "Login derived from the commit identity above; verify against live profiles."
        }
      ]
    },
    {
      "id": "sketch",
      "display_name": "Sketch",
      "homepage": "https://www.sketch.com/",
      "generic": false,
      "rules": [
        {
          "rule_id": "sketch:coauthor:hello@sketch.dev",
          "category": "commit_coauthor",
          "pattern_kind": "literal",
          "pattern": "hello@sketch.dev",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "sourcery",
      "display_name": "Sourcery",
      "homepage": "https://sourcery.ai/",
      "generic": false,
      "rules": [
        {
          "rule_id": "sourcery:coauthor:sourcery-ai",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "sourcery-ai",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "speckit",
      "display_name": "SpecKit",
      "homepage": "https://github.com/github/spec-kit",
      "generic": false,
      "rules": [
        {
          "rule_id": "speckit:file:.specify/memory/constitution.md",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": ".specify/memory/constitution.md",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "sweep",
      "display_name": "Sweep",
      "homepage": "https://sweep.dev/",
      "generic": false,
      "rules": [
        {
          "rule_id": "sweep:coauthor:sweep-ai",
          "category": "commit_coauthor",
          "pattern_kind": "substring",
          "pattern": "sweep-ai",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "sweep:branch:sweep/",
          "category": "branch_prefix",
          "pattern_kind": "literal",
          "pattern": "sweep/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "taskmaster",
      "display_name": "Taskmaster",
      "homepage": "https://github.com/eyaltoledano/claude-task-master",
      "generic": false,
      "rules": [
        {
          "rule_id": "taskmaster:file:.taskmaster/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".taskmaster/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "trae",
      "display_name": "Trae",
      "homepage": "https://www.trae.ai/",
      "generic": false,
      "rules": [
        {
          "rule_id": "trae:file:.trae/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".trae/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "warp",
      "display_name": "Warp",
      "homepage": "https://www.warp.dev/",
      "generic": false,
      "rules": [
        {
          "rule_id": "warp:file:warp.md",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": "WARP.md",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    },
    {
      "id": "windsurf",
      "display_name": "Windsurf",
      "homepage": "https://windsurf.com/",
      "generic": false,
      "rules": [
        {
          "rule_id": "windsurf:file:.windsurf/",
          "category": "file_path",
          "pattern_kind": "path_dir_prefix",
          "pattern": ".windsurf/",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        },
        {
          "rule_id": "windsurf:file:.windsurfrules",
          "category": "file_path",
          "pattern_kind": "path_name",
          "pattern": ".windsurfrules",
          "valid_from": null,
          "valid_to": null,
          "confidence": "high",
          "notes": ""
        }
      ]
    }
  ]
}
)json";
    return text;
}

inline const Catalog& builtin_catalog() {
    static const Catalog catalog = load_catalog(builtin_catalog_json());
    return catalog;
}

}  // namespace agentscan
