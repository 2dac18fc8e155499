#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "snlu/dataset.hpp"
#include "snlu/text.hpp"

namespace snlu {

/// Keyword/key-phrase rule that settles a subcategory without the model.
struct Rule {
  enum class Kind { Keyword, Phrase };

  int category = 0;
  int subcategory = 0;
  Kind kind = Kind::Keyword;
  std::vector<std::string> pattern;
  int priority = 0;

  bool fires(const TokenizedQuery& q) const;
};

/// Highest-priority firing rule of `category` (ties: lowest index), or
/// nullopt when none fires.
std::optional<int> apply_rules(const TokenizedQuery& q, int category, std::span<const Rule> rules);

/// Checks pattern shape and taxonomy membership; throws ConfigError.
void validate_rules(std::span<const Rule> rules, const Taxonomy& taxonomy);

/// `[{"category", "subcategory", "kind": "keyword"|"phrase", "pattern", "priority"}]`.
/// Patterns split on whitespace and are lowercased, so tag tokens such as
/// `<exam>` can be written directly.
std::vector<Rule> rules_from_json(const nlohmann::json& j, const Taxonomy& taxonomy);
nlohmann::json rules_to_json(std::span<const Rule> rules, const Taxonomy& taxonomy);
std::vector<Rule> load_rules(const std::filesystem::path& path, const Taxonomy& taxonomy);

}  // namespace snlu
